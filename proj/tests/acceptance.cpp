// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include "qsym/classical.hpp"
#include "qsym/errors.hpp"
#include "qsym/repn.hpp"

using namespace qsym;

namespace {

QRat q(long k = 1) { return QRat::q_pow(k); }

std::shared_ptr<const Algebra> algebra(const std::string& label) {
    static std::map<std::string, std::shared_ptr<const Algebra>> cache;
    auto& p = cache[label];
    if (!p) p = std::make_shared<const Algebra>(cartan_init(label));
    return p;
}

struct CatalogPair {
    std::string name;
    PairPresentation pr;
};

PairPresentation make(const std::string& label, std::vector<int> pt, std::vector<int> d, PairParams params = {}) {
    auto a = algebra(label);
    return build_pair(validate_satake(a->root(), pt, d), a, params);
}

const std::vector<CatalogPair>& five() {
    static std::vector<CatalogPair> v{{"P1", make("A1", {}, {0})},
                                      {"P2", make("A2", {}, {0, 1})},
                                      {"P3", make("A2", {}, {1, 0})},
                                      {"P4", make("A2", {0}, {0, 1})},
                                      {"P5", make("A1xA1", {}, {1, 0})}};
    return v;
}

const std::vector<CatalogPair>& catalog() {
    static std::vector<CatalogPair> v = [] {
        auto out = five();
        PairParams c;
        c.c[0] = q();
        PairParams s;
        s.s[0] = q() - QRat(1);
        out.push_back({"P3 c=q", make("A2", {}, {1, 0}, c)});
        out.push_back({"P1 s=q-1", make("A1", {}, {0}, s)});
        return out;
    }();
    return v;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// ---------------------------------------------------------------- 1

using Triple = std::tuple<NormalWord, NormalWord, NormalWord>;
using TripleElement = std::map<Triple, QRat>;

void add3(TripleElement& t, const Triple& k, const QRat& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

TripleElement delta_left(const Algebra& a, const TensorElement& d) {
    TripleElement t;
    for (const auto& [k, c] : d)
        for (const auto& [k1, c1] : a.coproduct(a.monomial(k.first))) add3(t, {k1.first, k1.second, k.second}, c * c1);
    return t;
}

TripleElement delta_right(const Algebra& a, const TensorElement& d) {
    TripleElement t;
    for (const auto& [k, c] : d)
        for (const auto& [k2, c2] : a.coproduct(a.monomial(k.second))) add3(t, {k.first, k2.first, k2.second}, c * c2);
    return t;
}

Outcome hopf_suite() {
    Outcome o;
    int checked = 0;
    for (const std::string label : {"A1", "A1xA1", "A2", "B2"}) {
        const Algebra& a = *algebra(label);
        std::vector<Element> gens;
        for (int i = 0; i < a.rank(); ++i) {
            gens.push_back(a.x(i));
            gens.push_back(a.y(i));
            gens.push_back(a.t(i));
            gens.push_back(a.t(i, -1));
        }
        int g = static_cast<int>(gens.size());
        std::vector<std::vector<int>> words{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int k = 0; k < g; ++k) {
                        auto v = w;
                        v.push_back(k);
                        next.push_back(v);
                    }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& w : words) {
            std::string name = label + " word";
            for (int k : w) name += " " + a.str(gens[k]);
            Element u = a.one();
            TensorElement du = a.coproduct(a.one());
            for (int k : w) {
                u = a.mul(u, gens[k]);
                du = a.mul(du, a.coproduct(gens[k]));
            }
            TensorElement d = a.coproduct(u);
            if (d != du) o.fail(name + ": coproduct not multiplicative");
            if (delta_left(a, d) != delta_right(a, d)) o.fail(name + ": not coassociative");
            Element l, r, sl, sr;
            for (const auto& [k, c] : d) {
                Element m1 = a.monomial(k.first), m2 = a.monomial(k.second);
                l.add(m2, c * a.counit(m1));
                r.add(m1, c * a.counit(m2));
                sl.add(a.mul(a.antipode(m1), m2), c);
                sr.add(a.mul(m1, a.antipode(m2)), c);
            }
            if (l != u || r != u) o.fail(name + ": counit law");
            Element eps = a.scalar(a.counit(u));
            if (sl != eps || sr != eps) o.fail(name + ": antipode law");
            Element ku = a.kappa(u);
            if (a.kappa(ku) != u) o.fail(name + ": kappa^2 != id");
            TensorElement kk;
            for (const auto& [k, c] : d) kk.add(a.tensor(a.kappa(a.monomial(k.first)), a.kappa(a.monomial(k.second))), c);
            if (a.coproduct(ku) != kk) o.fail(name + ": kappa not compatible with the coproduct");
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " words up to length 3";
    return o;
}

// ---------------------------------------------------------------- 2

Outcome pbw_counts() {
    Outcome o;
    int checked = 0;
    for (const std::string label : {"A2", "B2"}) {
        const Algebra& a = *algebra(label);
        for (int u = 0; u <= 6; ++u)
            for (int v = 0; u + v <= 6; ++v) {
                Vec mu{u, v};
                long long words = static_cast<long long>(a.rewrite().irreducible_words(mu).size());
                long long kp = kostant_partitions(mu, a.root());
                if (words != kp)
                    o.fail(label + " " + vec_str(mu) + ": " + std::to_string(words) + " words vs " + std::to_string(kp));
                ++checked;
            }
    }
    if (o.pass) o.detail = std::to_string(checked) + " weights";
    return o;
}

// ---------------------------------------------------------------- 3

Outcome relations() {
    Outcome o;
    const PairPresentation& p4 = five()[3].pr;
    for (int i : p4.th.pi_theta)
        for (int j = 0; j < p4.th.rd.n; ++j) {
            if (i == j) continue;
            Relation r = serre_defect(p4, i, j);
            if (!r.lhs.is_zero()) o.fail("P4 F_" + std::to_string(i + 1) + std::to_string(j + 1) + " is nonzero");
        }
    const PairPresentation& p5 = five()[4].pr;
    const Algebra& a5 = p5.a();
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        Relation r = serre_defect(p5, i, j);
        Element ti = a5.t(i), tj = a5.t(j);
        Element expect = (a5.mul(a5.t(i, -1), tj) - a5.mul(a5.t(j, -1), ti)).scaled((q() - q(-1)).inverse());
        if (r.lhs != expect) o.fail("P5 F_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + a5.str(r.lhs));
    }
    const PairPresentation& p2 = five()[1].pr;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        Relation r = serre_defect(p2, i, j);
        bool ok = r.defect.size() == 1 && r.defect[0].first == Word{j} &&
                  r.defect[0].second == p2.a().scalar(q(-1));
        if (!ok) o.fail("A2 split defect (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + r.defect_str(p2));
        // the defect reconstitutes the relation
        Element rhs;
        for (const auto& [J, c] : r.defect) rhs += p2.a().mul(p2.b_word(J), c);
        if (rhs != r.lhs) o.fail("A2 split defect does not reproduce F_ij");
    }
    if (o.pass) o.detail = "P4 zero, P5 torus commutator, A2 split q^-1 B_j";
    return o;
}

// ---------------------------------------------------------------- 4

Outcome coideal() {
    Outcome o;
    int n = 0;
    for (const auto& [name, pr] : catalog())
        for (int i = 0; i < pr.th.rd.n; ++i) {
            if (pr.th.in_theta[i]) continue;
            auto c = coideal_certificate(pr, i);
            if (!c.ok) o.fail(name + " B" + std::to_string(i + 1));
            ++n;
        }
    if (o.pass) o.detail = std::to_string(n) + " certificates";
    return o;
}

// ---------------------------------------------------------------- 5

Outcome lemma73() {
    Outcome o;
    int n = 0;
    for (const auto& [name, pr] : five())
        for (int i = 0; i < pr.th.rd.n; ++i)
            for (int j = 0; j < pr.th.rd.n; ++j) {
                if (i == j) continue;
                auto r = lemma73_check(pr, i, j);
                ++n;
                if (!r.ok) {
                    std::string v = r.violations.empty() ? "" : ": " + r.violations.front();
                    o.fail(name + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")" + v +
                           ", pi_00 = " + pr.a().str(r.zero_zero));
                }
            }
    if (o.pass) o.detail = std::to_string(n) + " pairs (i,j)";
    return o;
}

// ---------------------------------------------------------------- 6

Outcome spherical() {
    Outcome o;
    int runs = 0;
    auto check = [&](const PairPresentation& pr, const Vec& lam, bool expect) {
        SimpleModule m(pr.alg, lam);
        int d = invariants(m, pr).dimension;
        ++runs;
        if (d > 1) o.fail(vec_str(lam) + ": dimension " + std::to_string(d) + " > 1");
        if ((d == 1) != expect) o.fail(vec_str(lam) + ": dimension " + std::to_string(d));
        if (spherical_weight_test(lam, pr.th.rd, pr.th.theta) != (d == 1))
            o.fail(vec_str(lam) + ": disagrees with the spherical weight test");
    };
    for (int m = 0; m <= 8; ++m) check(five()[0].pr, {m}, m % 2 == 0);
    for (int m1 = 0; m1 <= 2; ++m1)
        for (int m2 = 0; m2 <= 2; ++m2) check(five()[1].pr, {m1, m2}, m1 % 2 == 0 && m2 % 2 == 0);
    if (o.pass) o.detail = std::to_string(runs) + " modules";
    return o;
}

// ---------------------------------------------------------------- 7

Outcome positivity() {
    Outcome o;
    int norms = 0;
    for (int m = 0; m <= 6; ++m) {
        SimpleModule mod(five()[0].pr.alg, {m});
        auto r = shapovalov_positivity(mod);
        if (!r.ok) o.fail("m = " + std::to_string(m) + ": " + r.failures.front());
        for (const auto& [nu, ns] : r.norms) norms += static_cast<int>(ns.size());
    }
    if (o.pass) o.detail = std::to_string(norms) + " norms positive";
    return o;
}

// ---------------------------------------------------------------- 8

Outcome flocal() {
    Outcome o;
    const RootDatum& rd = algebra("A1")->root();
    for (int k = -4; k <= 4; ++k)
        if (flocal_torus_test({k}, rd) != (k <= 0)) o.fail("k = " + std::to_string(k));
    if (o.pass) o.detail = "true exactly for k <= 0";
    return o;
}

// ---------------------------------------------------------------- 9

Outcome nilpotence() {
    Outcome o;
    const Algebra& a = *algebra("A1");
    const RootDatum& rd = a.root();
    std::string d;
    for (int k : {-1, -2}) {
        Vec lam{k};
        Element b = a.torus(lam);
        int s = 0;
        while (!b.is_zero() && s < 20) {
            b = a.ad(a.x(0), b);
            ++s;
        }
        Vec al = rd.simple(0);
        int expect = 1 - rd.ip(lam, al) / rd.ip(al, al);
        if (s != expect) o.fail("lambda = " + std::to_string(k) + "a: s = " + std::to_string(s));
        d += (d.empty() ? "" : ", ") + ("s(" + std::to_string(k) + "a) = " + std::to_string(s));
    }
    if (o.pass) o.detail = d;
    return o;
}

// ---------------------------------------------------------------- 10

Outcome restricted() {
    Outcome o;
    auto p3 = restricted_roots(five()[2].pr.th.rd, five()[2].pr.th.theta);
    if (p3.type_label() != "BC1") o.fail("P3 type " + p3.type_label());
    if (p3.variation1_pairs != std::vector<std::pair<int, int>>{{0, 1}}) o.fail("P3 Variation-1 pairs");
    auto p1 = restricted_roots(five()[0].pr.th.rd, five()[0].pr.th.theta);
    if (p1.type_label() != "A1") o.fail("P1 type " + p1.type_label());
    auto p2 = restricted_roots(five()[1].pr.th.rd, five()[1].pr.th.theta);
    if (p2.type_label() != "A2") o.fail("P2 type " + p2.type_label());
    // reduced: no doubled restricted root
    for (const auto& r : p2.roots)
        if (p2.contains(vscale(r, 2))) o.fail("P2 is not reduced");
    if (o.pass) o.detail = "P3 BC1 with {1,2}, P1 A1, P2 reduced A2";
    return o;
}

// ---------------------------------------------------------------- 11

Outcome specialization() {
    Outcome o;
    int items = 0;
    for (const auto& [name, pr] : catalog()) {
        auto r = specialize_pair(pr);
        if (!r.theta_involution) o.fail(name + ": classical theta is not an involution");
        for (const auto& it : r.items) {
            ++items;
            if (!it.poles_ok) o.fail(name + " " + it.name + ": pole at q = 1");
            if (!it.in_g) o.fail(name + " " + it.name + ": image not in g");
            if (!it.fixed) o.fail(name + " " + it.name + " -> " + it.image + " not fixed");
            if (!it.tip_ok) o.fail(name + " " + it.name + ": tip");
        }
        for (int i = 0; i < pr.th.rd.n; ++i)
            if (pr.a().tip(pr.B[i]) != pr.a().mul(pr.a().y(i), pr.a().t(i)))
                o.fail(name + " tip(B" + std::to_string(i + 1) + ")");
    }
    if (o.pass) o.detail = std::to_string(items) + " generators";
    return o;
}

// ---------------------------------------------------------------- 12

Outcome projections() {
    Outcome o;
    std::mt19937 rng(2024);
    int samples = 0;
    for (const std::string label : {"A1", "A2", "B2", "A1xA1"}) {
        const Algebra& a = *algebra(label);
        std::vector<Element> gens;
        for (int i = 0; i < a.rank(); ++i) {
            gens.push_back(a.x(i));
            gens.push_back(a.y(i));
            gens.push_back(a.t(i));
            gens.push_back(a.t(i, -1));
        }
        std::uniform_int_distribution<int> len(0, 4), pick(0, static_cast<int>(gens.size()) - 1), coef(-3, 3),
            terms(1, 4);
        for (int it = 0; it < 25; ++it) {
            Element e;
            for (int t = terms(rng); t > 0; --t) {
                Element w = a.one();
                for (int k = len(rng); k > 0; --k) w = a.mul(w, gens[pick(rng)]);
                e += w.scaled(QRat(coef(rng)) * q(coef(rng)));
            }
            Element by_coset, by_weight;
            for (const Vec& t : a.cosets(e)) by_coset += a.project_coset(e, t);
            for (const auto& [l, m] : a.support(e)) by_weight += a.project(e, l, m);
            if (by_coset != e) o.fail(label + ": coset projections do not sum to " + a.str(e));
            if (by_weight != e) o.fail(label + ": weight projections do not sum to " + a.str(e));
            ++samples;
        }
    }
    // coproduct support on A2: b = y-word * G-word, G generated by x_i t_i^-1
    const Algebra& a = *algebra("A2");
    int n = a.rank();
    int basis = 0;
    for (int l1 = 0; l1 <= 4; ++l1)
        for (int l2 = 0; l1 + l2 <= 4; ++l2)
            for (int m1 = 0; l1 + l2 + m1 <= 4; ++m1)
                for (int m2 = 0; l1 + l2 + m1 + m2 <= 4; ++m2) {
                    Vec lam{l1, l2}, mu{m1, m2};
                    for (const Word& Y : a.rewrite().irreducible_words(lam))
                        for (const Word& X : a.rewrite().irreducible_words(mu)) {
                            Element b = a.monomial(NormalWord{Y, Vec(n, 0), {}});
                            for (int i : X) b = a.mul(b, a.mul(a.x(i), a.t(i, -1)));
                            ++basis;
                            for (const auto& [k, c] : a.coproduct(b)) {
                                Vec g = Algebra::y_weight(k.first, n), al = Algebra::x_weight(k.first, n);
                                Vec be = Algebra::y_weight(k.second, n), xi = Algebra::x_weight(k.second, n);
                                bool ok = is_zero(a.coset(k.first)) && a.coset(k.second) == vscale(vadd(g, al), -1) &&
                                          vadd(g, be) == lam && vadd(al, xi) == mu;
                                if (!ok) {
                                    o.fail("support rule fails for " + a.str(b) + " at " + a.word_str(k.first) +
                                           " (x) " + a.word_str(k.second));
                                    return o;
                                }
                            }
                        }
                }
    if (o.pass) o.detail = std::to_string(samples) + " random elements, " + std::to_string(basis) + " A2 basis elements";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{{1, "Hopf axiom suite", hopf_suite},
                               {2, "PBW counts vs Kostant partitions", pbw_counts},
                               {3, "relation reproductions", relations},
                               {4, "coideal certificates", coideal},
                               {5, "support conditions of P_lambda(F_ij)", lemma73},
                               {6, "spherical classification", spherical},
                               {7, "Shapovalov positivity", positivity},
                               {8, "F(U) torus criterion", flocal},
                               {9, "ad-nilpotence order", nilpotence},
                               {10, "restricted root classification", restricted},
                               {11, "specialization at q = 1", specialization},
                               {12, "triangular and coset projections", projections}};
    int failed = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " (" << buf << ") " << c.title
                  << ": " << o.detail << std::endl;
        if (!o.pass) ++failed;
    }
    std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
