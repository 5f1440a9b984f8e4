#include "qsym/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qsym/errors.hpp"
#include "qsym/parse.hpp"

namespace qsym {

namespace {

Word cat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

WordPoly serre_relation(const RootDatum& rd, int i, int j) {
    int N = 1 - rd.cartan[i][j];
    WordPoly f;
    for (int m = 0; m <= N; ++m) {
        Word w(N - m, i);
        w.push_back(j);
        w.insert(w.end(), m, i);
        QRat c = qbinom_s(N, m, rd.sq(i));
        add_term(f, w, m % 2 ? -c : c);
    }
    return f;
}

}  // namespace

Algebra::Algebra(RootDatum rd, int degree_bound, long long budget) : rd_(std::move(rd)) {
    int n = rd_.n;
    bound_ = degree_bound > 0 ? degree_bound : default_degree_bound(n);
    int need = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) need = std::max(need, 2 * (1 + 1 - rd_.cartan[i][j]));
    if (bound_ < need)
        throw ArgumentError("degree bound " + std::to_string(bound_) + " is below the minimum " + std::to_string(need));
    std::vector<WordPoly> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rel.push_back(serre_relation(rd_, i, j));
    rs_ = std::make_unique<RewriteSystem>(n, bound_, budget);
    rs_->complete(rel);
    for (int i = 0; i < n; ++i) {
        QRat qi = QRat::s_pow(rd_.sq(i));
        bracket_den_inv_.push_back((qi - qi.inverse()).inverse());
    }
}

// ---------------------------------------------------------------- construction

Element Algebra::monomial(const NormalWord& w, const QRat& c) const { return Element(w, c); }
Element Algebra::one() const { return scalar(QRat(1)); }
Element Algebra::scalar(const QRat& c) const { return Element(NormalWord{{}, Vec(rd_.n, 0), {}}, c); }
Element Algebra::x(int i) const { return Element(NormalWord{{}, Vec(rd_.n, 0), {i}}, QRat(1)); }
Element Algebra::y(int i) const { return Element(NormalWord{{i}, Vec(rd_.n, 0), {}}, QRat(1)); }
Element Algebra::torus(const Vec& l) const { return Element(NormalWord{{}, l, {}}, QRat(1)); }
Element Algebra::t(int i, int p) const {
    Vec l(rd_.n, 0);
    l[i] = p;
    return torus(l);
}

// ---------------------------------------------------------------- products

Vec Algebra::wt(const Word& w) const {
    Vec r(rd_.n, 0);
    for (int a : w) ++r[a];
    return r;
}

int Algebra::ipw(const Vec& a, const Word& w) const {
    int s = 0;
    for (int b : w)
        for (int j = 0; j < rd_.n; ++j) s += a[j] * rd_.form[j][b];
    return s;
}

// x-word X times y-word Y as a sum of raw y' tau x' terms.
const std::vector<Algebra::RawTerm>& Algebra::straighten(const Word& X, const Word& Y) const {
    auto key = std::make_pair(X, Y);
    auto it = straighten_cache_.find(key);
    if (it != straighten_cache_.end()) return it->second;
    int n = rd_.n;
    std::vector<RawTerm> out;
    if (X.empty() || Y.empty()) {
        out.push_back({Y, Vec(n, 0), X, QRat(1)});
    } else {
        int a = X[0];
        Word Xr(X.begin() + 1, X.end());
        std::map<std::tuple<Word, Vec, Word>, QRat> acc;
        auto put = [&](Word y, Vec t, Word x, const QRat& c) {
            if (c.is_zero()) return;
            auto k = std::make_tuple(std::move(y), std::move(t), std::move(x));
            auto f = acc.find(k);
            if (f == acc.end()) {
                acc.emplace(std::move(k), c);
            } else {
                f->second += c;
                if (f->second.is_zero()) acc.erase(f);
            }
        };
        Vec aa = rd_.simple(a);
        for (const auto& r : straighten(Xr, Y)) {
            // x_a Yr tau Xr = Yr x_a tau Xr + bracket terms
            put(r.y, r.t, cat({a}, r.x), r.c * QRat::q_pow(-rd_.ip(r.t, aa)));
            for (size_t l = 0; l < r.y.size(); ++l) {
                if (r.y[l] != a) continue;
                Word rest(r.y.begin() + l + 1, r.y.end());
                int w = ipw(aa, rest);
                Word yd(r.y.begin(), r.y.begin() + l);
                yd.insert(yd.end(), rest.begin(), rest.end());
                QRat c = r.c * bracket_den_inv_[a];
                put(yd, vadd(r.t, aa), r.x, c * QRat::q_pow(-w));
                put(yd, vsub(r.t, aa), r.x, -(c * QRat::q_pow(w)));
            }
        }
        for (auto& [k, c] : acc) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
    }
    return straighten_cache_.emplace(std::move(key), std::move(out)).first->second;
}

void Algebra::emit(const Word& y, const Vec& t, const Word& x, const QRat& c, Element& out) const {
    const Terms& ny = rs_->normal_form(y);
    const Terms& nx = rs_->normal_form(x);
    for (const auto& [yw, yc] : ny)
        for (const auto& [xw, xc] : nx) out.add(NormalWord{yw, t, xw}, c * yc * xc);
}

void Algebra::mul_words(const NormalWord& a, const NormalWord& b, const QRat& c, Element& out) const {
    for (const auto& r : straighten(a.x, b.y)) {
        int e = -rd_.ip(a.t, wt(r.y)) - rd_.ip(b.t, wt(r.x));
        Vec t = vadd(vadd(a.t, r.t), b.t);
        emit(cat(a.y, r.y), t, cat(r.x, b.x), c * r.c * QRat::q_pow(e), out);
    }
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) mul_words(wa, wb, ca * cb, out);
    return out;
}

Element Algebra::mul(const std::vector<Element>& f) const {
    Element r = one();
    for (const auto& e : f) r = mul(r, e);
    return r;
}

Element Algebra::pow(const Element& a, int k) const {
    if (k < 0) throw ArgumentError("negative power");
    Element r = one();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Element Algebra::commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

TensorElement Algebra::tensor(const Element& a, const Element& b) const {
    TensorElement r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) r.add({wa, wb}, ca * cb);
    return r;
}

TensorElement Algebra::mul(const TensorElement& a, const TensorElement& b) const {
    TensorElement r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Element l, rr;
            mul_words(ka.first, kb.first, QRat(1), l);
            mul_words(ka.second, kb.second, QRat(1), rr);
            r.add(tensor(l, rr), ca * cb);
        }
    return r;
}

Element Algebra::multiply_legs(const TensorElement& t) const {
    Element r;
    for (const auto& [k, c] : t) mul_words(k.first, k.second, c, r);
    return r;
}

// ---------------------------------------------------------------- Hopf structure

TensorElement Algebra::coproduct(const Element& a) const {
    int n = rd_.n;
    TensorElement out;
    for (const auto& [w, c] : a) {
        auto it = coproduct_cache_.find(w);
        if (it == coproduct_cache_.end()) {
            TensorElement d;
            int ly = static_cast<int>(w.y.size()), lx = static_cast<int>(w.x.size());
            for (int S = 0; S < (1 << ly); ++S) {
                // y_l in S contributes y (x) t^{-1}; q-power from moving t^{-1} right
                int ey = 0;
                Word yl, yr;
                Vec sumS(n, 0);
                for (int l = 0; l < ly; ++l) {
                    if (S >> l & 1) {
                        yl.push_back(w.y[l]);
                        ++sumS[w.y[l]];
                        for (int m = l + 1; m < ly; ++m)
                            if (!(S >> m & 1)) ey += rd_.form[w.y[l]][w.y[m]];
                    } else {
                        yr.push_back(w.y[l]);
                    }
                }
                for (int T = 0; T < (1 << lx); ++T) {
                    int ex = 0;
                    Word xl, xr;
                    Vec sumT(n, 0);
                    for (int l = 0; l < lx; ++l) {
                        if (T >> l & 1) {
                            xl.push_back(w.x[l]);
                            for (int m = l + 1; m < lx; ++m)
                                if (!(T >> m & 1)) ex -= rd_.form[w.x[l]][w.x[m]];
                        } else {
                            xr.push_back(w.x[l]);
                            ++sumT[w.x[l]];
                        }
                    }
                    Element L, R;
                    emit(yl, vadd(w.t, sumT), xl, QRat(1), L);
                    emit(yr, vsub(w.t, sumS), xr, QRat(1), R);
                    d.add(tensor(L, R), QRat::q_pow(ey + ex));
                }
            }
            it = coproduct_cache_.emplace(w, std::move(d)).first;
        }
        out.add(it->second, c);
    }
    return out;
}

QRat Algebra::counit(const Element& a) const {
    QRat r;
    for (const auto& [w, c] : a)
        if (w.x.empty() && w.y.empty()) r += c;
    return r;
}

Element Algebra::antipode(const Element& a) const {
    Element out;
    for (const auto& [w, c] : a) {
        auto it = antipode_cache_.find(w);
        if (it == antipode_cache_.end()) {
            Element r = one();
            for (size_t k = w.x.size(); k-- > 0;) {
                int i = w.x[k];
                r = mul(r, -mul(t(i, -1), x(i)));
            }
            r = mul(r, torus(vscale(w.t, -1)));
            for (size_t k = w.y.size(); k-- > 0;) {
                int i = w.y[k];
                r = mul(r, -mul(y(i), t(i)));
            }
            it = antipode_cache_.emplace(w, std::move(r)).first;
        }
        out.add(it->second, c);
    }
    return out;
}

Element Algebra::kappa(const Element& a) const {
    Element out;
    for (const auto& [w, c] : a) {
        auto it = kappa_cache_.find(w);
        if (it == kappa_cache_.end()) {
            Element r = one();
            for (size_t k = w.x.size(); k-- > 0;) r = mul(r, mul(y(w.x[k]), t(w.x[k])));
            r = mul(r, torus(w.t));
            for (size_t k = w.y.size(); k-- > 0;) r = mul(r, mul(t(w.y[k], -1), x(w.y[k])));
            it = kappa_cache_.emplace(w, std::move(r)).first;
        }
        out.add(it->second, c);  // coefficient conjugation is trivial on Q(s)
    }
    return out;
}

// ---------------------------------------------------------------- adjoint actions

Element Algebra::conjugate_torus(const Vec& l, const Element& a) const {
    Element r;
    for (const auto& [w, c] : a) r.add(w, c * QRat::q_pow(rd_.ip(l, word_weight(w))));
    return r;
}

Element Algebra::ad_gen(Side side, int i, const Element& b) const {
    if (side == Side::x) return mul(x(i), b) - mul(conjugate_torus(rd_.simple(i), b), x(i));
    Element yt = mul(y(i), t(i));
    return mul(mul(y(i), b), t(i)) - mul(b, yt);
}

Element Algebra::adr_gen(Side side, int i, const Element& b) const {
    Element ti = t(i, -1);
    if (side == Side::x) return mul(mul(ti, b), x(i)) - mul(mul(ti, x(i)), b);
    return mul(b, y(i)) - mul(y(i), conjugate_torus(rd_.simple(i), b));
}

Element Algebra::ad(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [w, c] : a) {
        Element r = b;
        for (size_t k = w.x.size(); k-- > 0;) r = ad_gen(Side::x, w.x[k], r);
        r = conjugate_torus(w.t, r);
        for (size_t k = w.y.size(); k-- > 0;) r = ad_gen(Side::y, w.y[k], r);
        out.add(r, c);
    }
    return out;
}

Element Algebra::adr(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [w, c] : a) {
        Element r = b;
        for (int i : w.y) r = adr_gen(Side::y, i, r);
        r = conjugate_torus(vscale(w.t, -1), r);
        for (int i : w.x) r = adr_gen(Side::x, i, r);
        out.add(r, c);
    }
    return out;
}

Element Algebra::ad_hopf(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [k, c] : coproduct(a)) {
        Element l = monomial(k.first), r = antipode(monomial(k.second));
        out.add(mul(mul(l, b), r), c);
    }
    return out;
}

Element Algebra::adr_hopf(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [k, c] : coproduct(a)) {
        Element l = antipode(monomial(k.first)), r = monomial(k.second);
        out.add(mul(mul(l, b), r), c);
    }
    return out;
}

Element Algebra::divided_power(int i, int m, Side side) const {
    if (m < 0 || m > bound_) throw ArgumentError("divided power exponent out of range");
    Element g = side == Side::x ? x(i) : y(i);
    return pow(g, m).scaled(qfactorial_s(m, rd_.sq(i)).inverse());
}

// ---------------------------------------------------------------- gradings and projections

Vec Algebra::y_weight(const NormalWord& w, int n) {
    Vec r(n, 0);
    for (int a : w.y) ++r[a];
    return r;
}

Vec Algebra::x_weight(const NormalWord& w, int n) {
    Vec r(n, 0);
    for (int a : w.x) ++r[a];
    return r;
}

Vec Algebra::word_weight(const NormalWord& w) const { return vsub(x_weight(w, rd_.n), y_weight(w, rd_.n)); }

Vec Algebra::coset(const NormalWord& w) const { return vadd(w.t, x_weight(w, rd_.n)); }

QRat Algebra::regroup_scalar(const NormalWord& w) const {
    int e = rd_.ip(w.t, x_weight(w, rd_.n));
    for (size_t k = 0; k < w.x.size(); ++k)
        for (size_t l = k + 1; l < w.x.size(); ++l) e += rd_.form[w.x[k]][w.x[l]];
    return QRat::q_pow(e);
}

std::optional<Vec> Algebra::weight(const Element& a) const {
    if (a.is_zero()) throw ArgumentError("the zero element has no weight");
    std::optional<Vec> r;
    for (const auto& [w, c] : a) {
        Vec v = word_weight(w);
        if (!r) {
            r = v;
        } else if (*r != v) {
            return std::nullopt;
        }
    }
    return r;
}

Element Algebra::project(const Element& a, const Vec& lambda, const Vec& mu) const {
    Element r;
    for (const auto& [w, c] : a)
        if (y_weight(w, rd_.n) == lambda && x_weight(w, rd_.n) == mu) r.add(w, c);
    return r;
}

Element Algebra::project_coset(const Element& a, const Vec& tt) const {
    Element r;
    for (const auto& [w, c] : a)
        if (coset(w) == tt) r.add(w, c);
    return r;
}

std::set<std::pair<Vec, Vec>> Algebra::support(const Element& a) const {
    std::set<std::pair<Vec, Vec>> s;
    for (const auto& [w, c] : a) s.insert({y_weight(w, rd_.n), x_weight(w, rd_.n)});
    return s;
}

std::set<Vec> Algebra::cosets(const Element& a) const {
    std::set<Vec> s;
    for (const auto& [w, c] : a) s.insert(coset(w));
    return s;
}

std::pair<int, int> Algebra::bideg(const Element& a) const {
    if (a.is_zero()) throw ArgumentError("bidegree of the zero element");
    std::pair<int, int> best{-1, -1};
    for (const auto& [w, c] : a)
        best = std::max(best, std::make_pair(static_cast<int>(w.y.size()), static_cast<int>(w.x.size())));
    return best;
}

std::set<std::pair<Vec, Vec>> Algebra::max_support(const Element& a) const {
    auto b = bideg(a);
    std::set<std::pair<Vec, Vec>> s;
    for (const auto& [l, m] : support(a))
        if (ht(l) == b.first && ht(m) == b.second) s.insert({l, m});
    return s;
}

Element Algebra::tip(const Element& a) const {
    auto b = bideg(a);
    Element r;
    for (const auto& [w, c] : a)
        if (static_cast<int>(w.y.size()) == b.first && static_cast<int>(w.x.size()) == b.second) r.add(w, c);
    return r;
}

int Algebra::degree_F(const Element& a) const {
    if (a.is_zero()) throw ArgumentError("degree of the zero element");
    int best = -1 << 30;
    for (const auto& [w, c] : a) best = std::max(best, static_cast<int>(w.y.size()) - ht(w.t));
    return best;
}

Element Algebra::serre_polynomial(int i, int j, const Element& A, const Element& B) const {
    if (i == j) throw ArgumentError("serre_polynomial needs i != j");
    int N = 1 - rd_.cartan[i][j];
    std::vector<Element> pw{one()};
    for (int k = 1; k <= N; ++k) pw.push_back(mul(pw.back(), A));
    Element r;
    for (int m = 0; m <= N; ++m) {
        QRat c = qbinom_s(N, m, rd_.sq(i));
        r.add(mul(mul(pw[N - m], B), pw[m]), m % 2 ? -c : c);
    }
    return r;
}

// ---------------------------------------------------------------- printing

namespace {

void put_letters(std::vector<std::string>& parts, const Word& w, char g) {
    for (size_t k = 0; k < w.size();) {
        size_t e = k;
        while (e < w.size() && w[e] == w[k]) ++e;
        std::string s = g + std::to_string(w[k] + 1);
        if (e - k > 1) s += "^" + std::to_string(e - k);
        parts.push_back(s);
        k = e;
    }
}

bool single_negative(const QRat& c) {
    if (!c.is_laurent()) return false;
    int nz = 0;
    for (const auto& v : c.num().coeffs()) nz += v != 0;
    return nz == 1 && c.num().lead() * c.den().lead() < 0;
}

bool single_term(const QRat& c) {
    if (!c.is_laurent()) return false;
    int nz = 0;
    for (const auto& v : c.num().coeffs()) nz += v != 0;
    return nz == 1;
}

// Signed pieces: returns (negative, body) for a Laurent coefficient times a word.
std::pair<bool, std::string> laurent_term(const QRat& c, const std::string& w) {
    if (w.empty()) {
        if (single_negative(c)) return {true, (-c).str()};
        return {false, c.str()};
    }
    if (c.is_one()) return {false, w};
    if ((-c).is_one()) return {true, w};
    if (single_negative(c)) return {true, (-c).str() + " * " + w};
    if (single_term(c)) return {false, c.str() + " * " + w};
    return {false, "(" + c.str() + ") * " + w};
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) {
        const auto& [neg, body] = parts[k];
        if (k == 0)
            s += neg ? "-" + body : body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    return s;
}

void coefficient_times(const QRat& c, const std::string& w, std::vector<std::pair<bool, std::string>>& out) {
    out.push_back(laurent_term(c, w));
}

}  // namespace

std::string Algebra::word_str(const NormalWord& w) const {
    std::vector<std::string> parts;
    put_letters(parts, w.y, 'y');
    for (int i = 0; i < rd_.n; ++i) {
        if (!w.t[i]) continue;
        std::string s = "t" + std::to_string(i + 1);
        if (w.t[i] != 1) s += "^" + std::to_string(w.t[i]);
        parts.push_back(s);
    }
    put_letters(parts, w.x, 'x');
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) s += (k ? " " : "") + parts[k];
    return s;
}

std::string Algebra::str(const Element& a) const {
    if (a.is_zero()) return "0";
    std::vector<std::pair<NormalWord, QRat>> ts(a.begin(), a.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& p, const auto& q) {
        const NormalWord& u = p.first;
        const NormalWord& v = q.first;
        auto bu = std::make_pair(u.y.size(), u.x.size()), bv = std::make_pair(v.y.size(), v.x.size());
        if (bu != bv) return bu > bv;
        if (u.y != v.y) return u.y < v.y;
        if (u.t != v.t) return u.t > v.t;
        return u.x < v.x;
    });
    std::vector<std::pair<bool, std::string>> out;
    for (size_t k = 0; k < ts.size();) {
        const QRat& c = ts[k].second;
        if (c.is_laurent()) {
            coefficient_times(c, word_str(ts[k].first), out);
            ++k;
            continue;
        }
        size_t e = k;
        while (e < ts.size() && !ts[e].second.is_laurent() && ts[e].second.den() == c.den()) ++e;
        int c0 = c.den().degree() / 2;
        QRat D = QRat::from_poly(c.den(), -c0);
        std::string ds = D.str();
        if (!single_term(D)) ds = "(" + ds + ")";
        if (e - k == 1 && ts[k].first.x.empty() && ts[k].first.y.empty() &&
            std::all_of(ts[k].first.t.begin(), ts[k].first.t.end(), [](int v) { return v == 0; })) {
            out.push_back({false, c.str()});  // pure scalar
            k = e;
            continue;
        }
        std::vector<std::pair<bool, std::string>> inner;
        for (size_t r = k; r < e; ++r) coefficient_times(ts[r].second * D, word_str(ts[r].first), inner);
        std::string body = join_signed(inner);
        if (inner.size() == 1 && !inner[0].first && body.find(' ') == std::string::npos)
            out.push_back({false, body + "/" + ds});
        else
            out.push_back({false, "(" + body + ")/" + ds});
        k = e;
    }
    return join_signed(out);
}

std::string Algebra::str(const TensorElement& t) const {
    if (t.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& [k, c] : t) {
        std::string l = word_str(k.first), r = word_str(k.second);
        std::string w = (l.empty() ? "1" : l) + " ⊗ " + (r.empty() ? "1" : r);
        auto p = laurent_term(c, w);
        if (!c.is_laurent()) p = {false, "(" + c.str() + ") * " + w};
        out.push_back(p);
    }
    return join_signed(out);
}

// ---------------------------------------------------------------- parsing

namespace {

struct ElementOps {
    using Value = Element;
    const Algebra* alg;

    static bool scalar_of(const Element& e, QRat& c) {
        if (e.is_zero()) {
            c = QRat();
            return true;
        }
        if (e.size() != 1) return false;
        const auto& [w, v] = *e.begin();
        if (!w.x.empty() || !w.y.empty()) return false;
        for (int a : w.t)
            if (a) return false;
        c = v;
        return true;
    }

    Value number(const mpz_class& v, size_t) const { return alg->scalar(QRat(v)); }
    Value symbol(const std::string& name, size_t pos) const {
        if (name == "q") return alg->scalar(QRat::q());
        if (name == "s") return alg->scalar(QRat::s());
        char g = name[0];
        if ((g == 'x' || g == 'y' || g == 't') && name.size() > 1 &&
            std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            int i = std::stoi(name.substr(1));
            if (i < 1 || i > alg->rank())
                throw ParseError("generator index " + std::to_string(i) + " out of range", pos);
            if (g == 'x') return alg->x(i - 1);
            if (g == 'y') return alg->y(i - 1);
            return alg->t(i - 1);
        }
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
    Value torus(const std::vector<long>& a, size_t pos) const {
        if (static_cast<int>(a.size()) != alg->rank())
            throw ParseError("K[...] needs " + std::to_string(alg->rank()) + " entries", pos);
        return alg->torus(Vec(a.begin(), a.end()));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return alg->mul(a, b); }
    Value div(const Value& a, const Value& b, size_t pos) const {
        QRat c;
        if (!scalar_of(b, c)) throw ParseError("division by a non-scalar", pos);
        if (c.is_zero()) throw ParseError("division by zero", pos);
        return a.scaled(c.inverse());
    }
    Value pow(const Value& a, long k, size_t pos) const {
        if (k >= 0) {
            if (k > alg->degree_bound()) throw ParseError("exponent exceeds the degree bound", pos);
            return alg->pow(a, static_cast<int>(k));
        }
        if (a.size() == 1) {
            const auto& [w, c] = *a.begin();
            if (w.x.empty() && w.y.empty()) {
                NormalWord inv{{}, vscale(w.t, static_cast<int>(k)), {}};
                return alg->monomial(inv, c.pow(k));
            }
        }
        throw ParseError("negative power of a non-invertible element", pos);
    }
};

}  // namespace

Element Algebra::parse(const std::string& text) const {
    ElementOps ops{this};
    return ExprParser<ElementOps>(text, ops).parse();
}

}  // namespace qsym
