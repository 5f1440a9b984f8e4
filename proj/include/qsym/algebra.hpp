#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsym/qfield.hpp"
#include "qsym/rewrite.hpp"
#include "qsym/rootdata.hpp"

namespace qsym {

// y-word * tau(t) * x-word, with t in root coordinates (t_i = tau(a_i)).
struct NormalWord {
    Word y;
    Vec t;
    Word x;
    auto operator<=>(const NormalWord&) const = default;
};

template <class Key>
class LinComb {
public:
    using Map = std::map<Key, QRat>;

    LinComb() = default;
    LinComb(const Key& k, const QRat& c) { add(k, c); }

    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }
    const Map& terms() const { return m_; }
    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }
    QRat coeff(const Key& k) const {
        auto it = m_.find(k);
        return it == m_.end() ? QRat() : it->second;
    }

    void add(const Key& k, const QRat& c) {
        if (c.is_zero()) return;
        auto it = m_.find(k);
        if (it == m_.end()) {
            m_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }
    void add(const LinComb& o, const QRat& c = QRat(1)) {
        for (const auto& [k, v] : o.m_) add(k, v * c);
    }

    LinComb operator+(const LinComb& o) const {
        LinComb r = *this;
        r.add(o);
        return r;
    }
    LinComb operator-(const LinComb& o) const {
        LinComb r = *this;
        r.add(o, QRat(-1));
        return r;
    }
    LinComb operator-() const { return scaled(QRat(-1)); }
    LinComb scaled(const QRat& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : m_) r.m_.emplace(k, v * c);
        return r;
    }
    LinComb& operator+=(const LinComb& o) {
        add(o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add(o, QRat(-1));
        return *this;
    }
    bool operator==(const LinComb& o) const { return m_ == o.m_; }
    bool operator!=(const LinComb& o) const { return !(m_ == o.m_); }

private:
    Map m_;
};

using Element = LinComb<NormalWord>;
using TensorElement = LinComb<std::pair<NormalWord, NormalWord>>;

enum class Side { x, y };

class Algebra {
public:
    static int default_degree_bound(int rank) { return rank <= 2 ? 12 : 8; }

    explicit Algebra(RootDatum rd, int degree_bound = 0, long long budget = 50'000'000);

    const RootDatum& root() const { return rd_; }
    int rank() const { return rd_.n; }
    int degree_bound() const { return bound_; }
    const RewriteSystem& rewrite() const { return *rs_; }

    // ---- construction
    Element one() const;
    Element scalar(const QRat& c) const;
    Element x(int i) const;
    Element y(int i) const;
    Element torus(const Vec& lambda) const;
    Element t(int i, int power = 1) const;
    Element monomial(const NormalWord& w, const QRat& c = QRat(1)) const;
    Element parse(const std::string& text) const;

    // ---- products
    Element mul(const Element& a, const Element& b) const;
    Element mul(const std::vector<Element>& factors) const;
    Element pow(const Element& a, int k) const;
    Element commutator(const Element& a, const Element& b) const;  // ab - ba
    TensorElement tensor(const Element& a, const Element& b) const;
    TensorElement mul(const TensorElement& a, const TensorElement& b) const;

    // ---- Hopf structure
    TensorElement coproduct(const Element& a) const;
    QRat counit(const Element& a) const;
    Element antipode(const Element& a) const;
    Element kappa(const Element& a) const;
    Element multiply_legs(const TensorElement& t) const;  // a (x) b -> ab

    // ---- adjoint actions; ad is a homomorphism, ad_r an antihomomorphism
    Element ad(const Element& a, const Element& b) const;
    Element adr(const Element& a, const Element& b) const;
    Element ad_hopf(const Element& a, const Element& b) const;   // sum a1 b S(a2)
    Element adr_hopf(const Element& a, const Element& b) const;  // sum S(a1) b a2
    Element divided_power(int i, int m, Side side) const;

    // ---- gradings, projections, filtrations
    std::optional<Vec> weight(const Element& a) const;  // nullopt when not homogeneous
    Vec word_weight(const NormalWord& w) const;
    static Vec y_weight(const NormalWord& w, int n);  // lambda of U^-_{-lambda}
    static Vec x_weight(const NormalWord& w, int n);  // mu of G^+_mu
    Vec coset(const NormalWord& w) const;             // t of U^- G^+ t
    // scalar c with y t x = c * y G(x) tau(coset): G(x) the word in x_i t_i^{-1}
    QRat regroup_scalar(const NormalWord& w) const;
    Element project(const Element& a, const Vec& lambda, const Vec& mu) const;
    Element project_coset(const Element& a, const Vec& t) const;
    std::set<std::pair<Vec, Vec>> support(const Element& a) const;
    std::set<Vec> cosets(const Element& a) const;
    std::pair<int, int> bideg(const Element& a) const;
    std::set<std::pair<Vec, Vec>> max_support(const Element& a) const;
    Element tip(const Element& a) const;
    int degree_F(const Element& a) const;

    Element serre_polynomial(int i, int j, const Element& A, const Element& B) const;

    // tau(lambda) a tau(lambda)^{-1}
    Element conjugate_torus(const Vec& lambda, const Element& a) const;

    // ---- printing
    std::string word_str(const NormalWord& w) const;
    std::string str(const Element& a) const;
    std::string str(const TensorElement& t) const;

private:
    RootDatum rd_;
    int bound_;
    std::unique_ptr<RewriteSystem> rs_;
    std::vector<QRat> bracket_den_inv_;  // 1 / (q_i - q_i^{-1})
    struct RawTerm {
        Word y;
        Vec t;
        Word x;
        QRat c;
    };
    mutable std::map<std::pair<Word, Word>, std::vector<RawTerm>> straighten_cache_;
    mutable std::map<NormalWord, Element> antipode_cache_;
    mutable std::map<NormalWord, Element> kappa_cache_;
    mutable std::map<NormalWord, TensorElement> coproduct_cache_;

    int ipw(const Vec& a, const Word& w) const;  // (a, wt w)
    Vec wt(const Word& w) const;
    const std::vector<RawTerm>& straighten(const Word& X, const Word& Y) const;
    void mul_words(const NormalWord& a, const NormalWord& b, const QRat& c, Element& out) const;
    void emit(const Word& y, const Vec& t, const Word& x, const QRat& c, Element& out) const;
    Element ad_gen(Side side, int i, const Element& b) const;
    Element adr_gen(Side side, int i, const Element& b) const;
};

}  // namespace qsym
