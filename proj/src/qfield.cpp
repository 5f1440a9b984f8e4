#include "qsym/qfield.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "qsym/errors.hpp"
#include "qsym/parse.hpp"

namespace qsym {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

Poly Poly::constant(const mpz_class& c) { return Poly(std::vector<mpz_class>{c}); }

Poly Poly::monomial(const mpz_class& c, int deg) {
    std::vector<mpz_class> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_order() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return 0;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const mpz_class& k) const {
    if (k == 0) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
        std::vector<mpz_class> r(k);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r));
    }
    if (low_order() < -k) throw InternalError("Poly::shifted: inexact negative shift");
    return Poly(std::vector<mpz_class>(c_.begin() - k, c_.end()));
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead() < 0) g = -g;
    if (g == 1) return *this;
    Poly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + mpq_class(c_[k]);
    return acc;
}

mpz_class Poly::eval1() const {
    mpz_class acc = 0;
    for (const auto& c : c_) acc += c;
    return acc;
}

Poly Poly::exact_div(const Poly& d) const {
    if (d.is_zero()) throw InternalError("Poly::exact_div by zero");
    if (is_zero()) return Poly();
    std::vector<mpz_class> rem = c_;
    int dd = d.degree();
    int nd = degree();
    if (nd < dd) throw InternalError("Poly::exact_div: nonzero remainder");
    std::vector<mpz_class> quo(nd - dd + 1);
    for (int k = nd - dd; k >= 0; --k) {
        const mpz_class& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
            throw InternalError("Poly::exact_div: non-integral quotient");
        mpz_class qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        for (int j = 0; j <= dd; ++j) rem[k + j] -= qk * d.c_[j];
        quo[k] = qk;
    }
    for (const auto& r : rem)
        if (r != 0) throw InternalError("Poly::exact_div: nonzero remainder");
    return Poly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b (lc(b)^(deg a - deg b + 1) * a mod b).
Poly prem(Poly a, const Poly& b) {
    std::vector<mpz_class> r = a.coeffs();
    int db = b.degree();
    const mpz_class& lb = b.lead();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int dr = static_cast<int>(r.size()) - 1;
        mpz_class top = r.back();
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= top * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(std::move(r));
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.primitive().scaled(mpz_class(abs(b.content())));
    if (b.is_zero()) return a.primitive().scaled(mpz_class(abs(a.content())));
    mpz_class ca = a.content(), cb = b.content(), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly u = a.primitive(), v = b.primitive();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) {
            u = Poly::constant(1);
            break;
        }
        Poly r = prem(u, v);
        u = v;
        v = r.primitive();
    }
    return u.primitive().scaled(c);
}

// ---------------------------------------------------------------- QRat

QRat::QRat() : den_(Poly::constant(1)) {}

QRat::QRat(long v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

QRat::QRat(const mpz_class& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

QRat QRat::from_poly(const Poly& num, int shift) {
    QRat r;
    r.num_ = num;
    r.e_ = shift;
    r.normalize();
    return r;
}

QRat QRat::fraction(const Poly& num, const Poly& den, int shift) {
    if (den.is_zero()) throw ArgumentError("QRat: zero denominator");
    QRat r;
    r.num_ = num;
    r.den_ = den;
    r.e_ = shift;
    r.normalize();
    return r;
}

QRat QRat::s_pow(long k) {
    QRat r(1);
    r.e_ = static_cast<int>(k);
    return r;
}

QRat QRat::q_pow(long k) { return s_pow(2 * k); }

bool QRat::is_one() const {
    return e_ == 0 && num_.degree() == 0 && num_[0] == 1 && den_.degree() == 0 && den_[0] == 1;
}

void QRat::normalize() {
    if (num_.is_zero()) {
        e_ = 0;
        den_ = Poly::constant(1);
        return;
    }
    int k = num_.low_order();
    if (k) {
        num_ = num_.shifted(-k);
        e_ += k;
    }
    k = den_.low_order();
    if (k) {
        den_ = den_.shifted(-k);
        e_ -= k;
    }
    if (den_.degree() == 0 && den_[0] == 1) return;
    Poly g = Poly::gcd(num_, den_);
    if (!(g.degree() == 0 && g[0] == 1)) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::operator+(const QRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int e = std::min(e_, o.e_);
    QRat r;
    r.e_ = e;
    if (den_ == o.den_) {
        r.num_ = num_.shifted(e_ - e) + o.num_.shifted(o.e_ - e);
        r.den_ = den_;
        if (den_.degree() == 0 && den_[0] == 1) {
            r.normalize();
            return r;
        }
    } else {
        r.num_ = (num_ * o.den_).shifted(e_ - e) + (o.num_ * den_).shifted(o.e_ - e);
        r.den_ = den_ * o.den_;
    }
    r.normalize();
    return r;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return QRat();
    QRat r;
    r.e_ = e_ + o.e_;
    bool unit_dens = den_.degree() == 0 && den_[0] == 1 && o.den_.degree() == 0 && o.den_[0] == 1;
    r.num_ = num_ * o.num_;
    if (unit_dens) {
        r.den_ = den_;
        return r;
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw ArgumentError("QRat: division by zero");
    QRat r;
    r.e_ = -e_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inverse(); }

QRat QRat::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QRat r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool QRat::operator==(const QRat& o) const {
    return e_ == o.e_ && num_ == o.num_ && den_ == o.den_;
}

size_t QRat::hash() const {
    size_t h = std::hash<int>()(e_);
    auto mix = [&](const Poly& p) {
        for (const auto& c : p.coeffs()) h = h * 1000003u ^ std::hash<long>()(c.get_si());
        h = h * 31u + p.coeffs().size();
    };
    mix(num_);
    mix(den_);
    return h;
}

namespace {

std::string laurent_str(const Poly& p, int shift, bool useq) {
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpz_class c = p[k];
        if (c == 0) continue;
        int ex = k + shift;
        if (useq) ex /= 2;
        bool neg = c < 0;
        mpz_class a = abs(c);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const char* var = useq ? "q" : "s";
        if (ex == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (ex != 1) os << "^" << ex;
        }
    }
    if (first) os << "0";
    return os.str();
}

bool all_even(const Poly& p, int shift) {
    for (int k = 0; k <= p.degree(); ++k)
        if (p[k] != 0 && ((k + shift) % 2 != 0)) return false;
    return true;
}

int term_count(const Poly& p) {
    int n = 0;
    for (const auto& c : p.coeffs()) n += c != 0;
    return n;
}

}  // namespace

std::string QRat::str() const {
    if (is_zero()) return "0";
    int dd = den_.degree();
    if (dd == 0) {
        bool useq = all_even(num_, e_);
        std::string n = laurent_str(num_, e_, useq);
        if (den_[0] == 1) return n;
        if (term_count(num_) > 1) n = "(" + n + ")";
        return n + "/" + den_[0].get_str();
    }
    int c = dd / 2;
    int ns = e_ - c;
    bool useq = all_even(num_, ns) && all_even(den_, -c);
    std::string n = laurent_str(num_, ns, useq);
    std::string d = laurent_str(den_, -c, useq);
    if (term_count(num_) > 1) n = "(" + n + ")";
    if (term_count(den_) > 1) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------- q-combinatorics

QRat qint_s(int m, int sd) {
    if (m < 0) return -qint_s(-m, sd);
    if (m == 0) return QRat();
    // sum_{k=0}^{m-1} s^{sd (m-1-2k)}
    int span = sd * 2 * (m - 1);
    std::vector<mpz_class> c(span + 1);
    for (int k = 0; k < m; ++k) c[sd * 2 * k] = 1;
    return QRat::from_poly(Poly(std::move(c)), -sd * (m - 1));
}

QRat qint(int m, int d) { return qint_s(m, 2 * d); }

QRat qfactorial_s(int m, int sd) {
    QRat r(1);
    for (int k = 2; k <= m; ++k) r *= qint_s(k, sd);
    return r;
}

QRat qbinom_s(int m, int j, int sd) {
    if (j < 0 || m < 0 || j > m) throw ArgumentError("qbinom: require 0 <= j <= m");
    // Pascal recursion keeps everything Laurent: [m,j] = q^{-j}[m-1,j-1]... in s-powers
    // [m choose j]_v = v^{j}[m-1 choose j] + v^{-(m-j)}[m-1 choose j-1]
    std::vector<QRat> row{QRat(1)};
    for (int r = 1; r <= m; ++r) {
        std::vector<QRat> nxt(r + 1);
        nxt[0] = QRat(1);
        nxt[r] = QRat(1);
        for (int k = 1; k < r; ++k)
            nxt[k] = QRat::s_pow(static_cast<long>(sd) * k) * row[k] +
                     QRat::s_pow(-static_cast<long>(sd) * (r - k)) * row[k - 1];
        row = std::move(nxt);
    }
    return row[j];
}

QRat qbinom(int m, int j, int d) { return qbinom_s(m, j, 2 * d); }

// ---------------------------------------------------------------- order and specialization

namespace {

// Sign of g(1) where p = (s-1)^k g with g(1) != 0; found by synthetic division.
int poly_sign_at1(const Poly& p) {
    std::vector<mpz_class> c = p.coeffs();
    while (true) {
        mpz_class v = 0;
        for (const auto& x : c) v += x;
        if (v != 0) return sgn(v);
        // divide by (s - 1)
        std::vector<mpz_class> qt(c.size() - 1);
        mpz_class carry = 0;
        for (size_t k = c.size(); k-- > 1;) {
            carry += c[k];
            qt[k - 1] = carry;
        }
        c = std::move(qt);
    }
}

}  // namespace

Sign sign(const QRat& f) {
    if (f.is_zero()) return Sign::zero;
    int s = poly_sign_at1(f.num()) * poly_sign_at1(f.den());
    return s > 0 ? Sign::positive : Sign::negative;
}

mpq_class specialize_q1(const QRat& f) {
    if (f.is_zero()) return 0;
    mpz_class d = f.den().eval1();
    if (d == 0) throw PoleError("coefficient " + f.str() + " has a pole at q = 1");
    mpq_class r(f.num().eval1(), d);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- parsing

namespace {

struct QRatOps {
    using Value = QRat;
    Value number(const mpz_class& v, size_t) const { return QRat(v); }
    Value symbol(const std::string& name, size_t pos) const {
        if (name == "q") return QRat::q();
        if (name == "s") return QRat::s();
        throw ParseError("unknown symbol '" + name + "' in coefficient", pos);
    }
    Value torus(const std::vector<long>&, size_t pos) const {
        throw ParseError("torus character not allowed in coefficient", pos);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, size_t pos) const {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    }
    Value pow(const Value& a, long k, size_t pos) const {
        if (k < 0 && a.is_zero()) throw ParseError("negative power of zero", pos);
        return a.pow(k);
    }
};

}  // namespace

QRat parse_qrat(const std::string& text) {
    QRatOps ops;
    return ExprParser<QRatOps>(text, ops).parse();
}

}  // namespace qsym
