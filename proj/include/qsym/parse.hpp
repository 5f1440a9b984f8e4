#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

// Recursive-descent parser shared by coefficient and algebra expressions.
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'|'/'] factor)*        juxtaposition is '*'
//   factor  := '-' factor | primary ['^' ['-'] INT]
//   primary := INT | IDENT | 'K[' INT (',' INT)* ']' | '(' expr ')'
// Ops supplies Value and the semantic actions.
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(const std::string& text, const Ops& ops) : s_(text), ops_(ops) {}

    Value parse() {
        skip();
        if (at_end()) throw ParseError("empty expression", pos_);
        Value v = expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    const std::string& s_;
    const Ops& ops_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return at_end() ? '\0' : s_[pos_];
    }
    bool starts_primary() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    Value expr() {
        Value v;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            Value t = term();
            v = c == '-' ? ops_.neg(t) : t;
        } else {
            v = term();
        }
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Value t = term();
            v = c == '+' ? ops_.add(v, t) : ops_.sub(v, t);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = ops_.mul(v, factor());
            } else if (c == '/') {
                size_t at = pos_++;
                v = ops_.div(v, factor(), at);
            } else if (starts_primary()) {
                v = ops_.mul(v, factor());
            } else {
                break;
            }
        }
        return v;
    }

    Value factor() {
        if (peek() == '-') {
            ++pos_;
            return ops_.neg(factor());
        }
        Value base = primary();
        if (peek() == '^') {
            size_t at = pos_++;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            } else if (peek() == '+') {
                ++pos_;
            }
            mpz_class e = integer();
            if (!e.fits_slong_p()) throw ParseError("exponent too large", at);
            long k = e.get_si();
            base = ops_.pow(base, neg ? -k : k, at);
        }
        return base;
    }

    mpz_class integer() {
        skip();
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    Value primary() {
        char c = peek();
        size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ops_.number(integer(), at);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "K" && peek() == '[') {
                ++pos_;
                std::vector<long> a;
                while (true) {
                    bool neg = false;
                    if (peek() == '-') {
                        neg = true;
                        ++pos_;
                    }
                    mpz_class v = integer();
                    a.push_back(neg ? -v.get_si() : v.get_si());
                    char d = peek();
                    if (d == ',') {
                        ++pos_;
                        continue;
                    }
                    if (d == ']') {
                        ++pos_;
                        break;
                    }
                    throw ParseError("expected ',' or ']'", pos_);
                }
                return ops_.torus(a, at);
            }
            return ops_.symbol(name, start);
        }
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace qsym
