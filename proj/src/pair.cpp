#include "qsym/pair.hpp"

#include <algorithm>

#include "qsym/errors.hpp"
#include "qsym/linalg.hpp"

namespace qsym {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

bool is_scalar(const Element& e) {
    if (e.size() != 1) return false;
    const NormalWord& w = e.begin()->first;
    return w.y.empty() && w.x.empty() && is_zero(w.t);
}

std::string power_word(const std::string& letter, const Word& J) {
    std::string s;
    for (size_t k = 0; k < J.size();) {
        size_t l = k;
        while (l < J.size() && J[l] == J[k]) ++l;
        if (!s.empty()) s += " ";
        s += letter + idx(J[k]);
        if (l - k > 1) s += "^" + std::to_string(l - k);
        k = l;
    }
    return s;
}

// Signed scalar-times-body text; sign split off so terms join as "a - b".
std::pair<bool, std::string> scaled_text(const QRat& k, const std::string& body) {
    if (k.is_one()) return {false, body};
    if ((-k).is_one()) return {true, body};
    bool neg = false;
    QRat kk = k;
    if (k.is_monomial() && k.str().front() == '-') {
        neg = true;
        kk = -k;
    }
    std::string ks = kk.is_monomial() ? kk.str() : "(" + kk.str() + ")";
    return {neg, ks + " * " + body};
}

std::string join(const std::vector<std::pair<bool, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k == 0)
            s += parts[k].first ? "-" + parts[k].second : parts[k].second;
        else
            s += (parts[k].first ? " - " : " + ") + parts[k].second;
    }
    return s;
}

bool in_span(const std::vector<Element>& gens, const Element& target) {
    std::map<NormalWord, int> keys;
    for (const auto& g : gens)
        for (const auto& [w, c] : g) keys.emplace(w, 0);
    for (const auto& [w, c] : target)
        if (!keys.count(w)) return false;
    int r = 0;
    for (auto& [w, k] : keys) k = r++;
    int cols = static_cast<int>(gens.size());
    Matrix<QRat> m(r, std::vector<QRat>(cols));
    std::vector<QRat> b(r);
    for (int c = 0; c < cols; ++c)
        for (const auto& [w, v] : gens[c]) m[keys[w]][c] = v;
    for (const auto& [w, v] : target) b[keys[w]] = v;
    return solve(m, b, cols).has_value();
}

void words_with_content(std::vector<int>& cnt, Word& cur, std::vector<Word>& out) {
    bool done = true;
    for (size_t a = 0; a < cnt.size(); ++a) {
        if (!cnt[a]) continue;
        done = false;
        --cnt[a];
        cur.push_back(static_cast<int>(a));
        words_with_content(cnt, cur, out);
        cur.pop_back();
        ++cnt[a];
    }
    if (done) out.push_back(cur);
}

bool supported_on(const Word& w, const std::vector<int>& set) {
    for (int a : w)
        if (std::find(set.begin(), set.end(), a) == set.end()) return false;
    return true;
}

// lambda - shift lies in the span of the simple roots in set
bool torus_in(const Vec& lambda, const Vec& shift, const std::vector<int>& set) {
    Vec d = vsub(lambda, shift);
    for (size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0 && std::find(set.begin(), set.end(), static_cast<int>(k)) == set.end()) return false;
    return true;
}

}  // namespace

bool PairPresentation::in_t_theta(const Vec& lambda) const { return th.theta.apply(lambda) == lambda; }

bool PairPresentation::in_m_plus_t(const NormalWord& w) const {
    return w.y.empty() && supported_on(w.x, th.pi_theta) && in_t_theta(w.t);
}

Element PairPresentation::b_word(const Word& J) const {
    Element r = alg->one();
    for (int j : J) r = alg->mul(r, B[j]);
    return r;
}

std::string PairPresentation::b_word_str(const Word& J) const { return J.empty() ? "1" : power_word("B", J); }

QRat PairPresentation::counit_expected(int i) const {
    auto it = params.s.find(i);
    return it == params.s.end() ? QRat() : it->second;
}

std::vector<int> nonstandard_S1_set(const ThetaData& th) {
    std::vector<int> s1;
    for (int i = 0; i < th.rd.n; ++i)
        if (!th.in_theta[i] && th.theta.apply(th.rd.simple(i)) == vscale(th.rd.simple(i), -1)) s1.push_back(i);
    return s1;
}

std::vector<int> nonstandard_S_set(const ThetaData& th) {
    std::vector<int> s1 = nonstandard_S1_set(th), s;
    for (int i : s1) {
        bool ok = true;
        for (int j : s1)
            if ((2 * th.rd.form[i][j] / th.rd.sq(j)) % 2 != 0 || (2 * th.rd.form[i][j]) % th.rd.sq(j) != 0) ok = false;
        if (ok) s.push_back(i);
    }
    return s;
}

PairPresentation build_pair(const ThetaData& th, std::shared_ptr<const Algebra> alg, const PairParams& params) {
    if (alg->rank() != th.rd.n || alg->root().cartan != th.rd.cartan)
        throw ArgumentError("algebra and involution data have different Cartan data");
    PairPresentation pr;
    pr.th = th;
    pr.alg = alg;
    pr.params = params;
    pr.S = nonstandard_S_set(th);
    const RootDatum& rd = th.rd;
    const Algebra& a = *alg;

    for (const auto& [r, c] : params.c) {
        if (r < 0 || r >= rd.n) throw ValidationError("parameter c on index " + idx(r) + " out of range");
        if (th.in_theta[r]) throw ValidationError("parameter c on a_" + idx(r) + ": index lies in pi_Theta");
        if (th.p[r] == r) throw ValidationError("parameter c on a_" + idx(r) + ": needs p(r) != r");
        if (rd.ip(rd.simple(r), th.theta.apply(rd.simple(r))) == 0)
            throw ValidationError("parameter c on a_" + idx(r) + ": needs (a_r, Theta(a_r)) != 0");
        if (params.c.count(th.p[r]))
            throw ValidationError("parameters c on both a_" + idx(r) + " and a_" + idx(th.p[r]) +
                                  ": one parameter per pair");
        if (c.is_zero()) throw ValidationError("parameter c must be nonzero");
        mpq_class v;
        try {
            v = specialize_q1(c);
        } catch (const PoleError&) {
            throw ValidationError("parameter c on a_" + idx(r) + " has a pole at q = 1");
        }
        if (v != 1) throw ValidationError("parameter c on a_" + idx(r) + " does not specialize to 1");
    }
    std::vector<int> allowed = params.allow_any_s ? nonstandard_S1_set(th) : pr.S;
    for (const auto& [r, s] : params.s) {
        if (r < 0 || r >= rd.n) throw ValidationError("parameter s on index " + idx(r) + " out of range");
        if (std::find(allowed.begin(), allowed.end(), r) == allowed.end())
            throw ValidationError("parameter s on a_" + idx(r) + ": index is not in the set S");
        try {
            specialize_q1(s);
        } catch (const PoleError&) {
            throw ValidationError("parameter s on a_" + idx(r) + " has a pole at q = 1");
        }
    }

    for (int i = 0; i < rd.n; ++i) {
        Element yt = a.mul(a.y(i), a.t(i));
        if (th.in_theta[i]) {
            pr.B.push_back(yt);
            continue;
        }
        Element tt = theta_tilde_y(th, a, i);
        if (auto it = params.c.find(i); it != params.c.end()) tt = tt.scaled(it->second.inverse());
        Element b = yt + a.mul(tt, a.t(i));
        if (auto it = params.s.find(i); it != params.s.end()) b += a.t(i).scaled(it->second);
        pr.B.push_back(b);
    }

    Mat m = th.theta.m;
    for (int k = 0; k < rd.n; ++k) m[k][k] -= 1;
    pr.t_theta = integer_kernel(m);

    for (int i = 0; i < rd.n; ++i)
        if (a.counit(pr.B[i]) != pr.counit_expected(i))
            throw InternalError("counit of B_" + idx(i) + " differs from s_" + idx(i));
    return pr;
}

CertificateReport coideal_certificate(const PairPresentation& pr, int i) {
    const Algebra& a = pr.a();
    CertificateReport rep;
    rep.index = i;
    TensorElement rem = a.coproduct(pr.B[i]) - a.tensor(a.t(i), pr.B[i]);
    std::map<NormalWord, Element> by_right;
    for (const auto& [k, c] : rem) {
        by_right[k.second].add(k.first, c);
        if (!pr.in_m_plus_t(k.second)) {
            rep.ok = false;
            rep.violations.push_back("right factor " + a.str(a.monomial(k.second)) + " lies outside M+ T_Theta");
        }
    }
    rep.parts.assign(by_right.begin(), by_right.end());
    return rep;
}

std::string Relation::defect_str(const PairPresentation& pr) const {
    const Algebra& a = pr.a();
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [J, c] : defect) {
        if (is_scalar(c)) {
            QRat k = c.begin()->second;
            if (J.empty()) {
                bool neg = k.is_monomial() && k.str().front() == '-';
                parts.push_back({neg, (neg ? -k : k).str()});
            } else {
                parts.push_back(scaled_text(k, pr.b_word_str(J)));
            }
        } else if (J.empty()) {
            parts.push_back({false, a.str(c)});
        } else {
            parts.push_back({false, pr.b_word_str(J) + " * (" + a.str(c) + ")"});
        }
    }
    return join(parts);
}

Relation serre_defect(const PairPresentation& pr, int i, int j) {
    const Algebra& a = pr.a();
    const RootDatum& rd = pr.th.rd;
    if (i == j) throw ArgumentError("serre-defect needs i != j");
    if (i < 0 || j < 0 || i >= rd.n || j >= rd.n) throw ArgumentError("index out of range");
    Relation rel;
    rel.i = i;
    rel.j = j;
    int N = 1 - rd.cartan[i][j];
    std::vector<std::pair<bool, std::string>> fparts;
    for (int m = 0; m <= N; ++m) {
        Word w(N - m, i);
        w.push_back(j);
        w.insert(w.end(), m, i);
        QRat c = qbinom_s(N, m, rd.sq(i));
        auto p = scaled_text(c, pr.b_word_str(w));
        if (!c.is_monomial() && p.second.find(" * ") != std::string::npos)
            p.second = "(" + c.str() + ") " + pr.b_word_str(w);
        if (m % 2) p.first = !p.first;
        fparts.push_back(p);
    }
    rel.formal = join(fparts);
    rel.lhs = a.serre_polynomial(i, j, pr.B[i], pr.B[j]);

    Vec lambda = vadd(vscale(rd.simple(i), N), rd.simple(j));
    std::map<Word, Element> coeff;
    std::map<Word, Element> bcache;
    Element rem = rel.lhs;
    while (!rem.is_zero()) {
        auto top = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (it->first.y.size() > top->first.y.size()) top = it;
        NormalWord w = top->first;
        QRat c = top->second;
        const Word& J = w.y;
        Vec wtJ = Algebra::y_weight(w, rd.n);
        Vec tau = vsub(w.t, wtJ);
        Vec gap = vsub(lambda, wtJ);
        if (!supported_on(w.x, pr.th.pi_theta) || !pr.in_t_theta(tau) || !is_nonneg(gap) || is_zero(gap))
            throw InternalError("F_" + idx(i) + idx(j) + "(B_" + idx(i) + ", B_" + idx(j) + ") has the term " +
                                a.word_str(w) + " outside the expected sum of B_J M+ T_Theta");
        Element m = a.mul(a.monomial({{}, Vec(rd.n, 0), w.x}), a.torus(tau));
        auto bit = bcache.find(J);
        if (bit == bcache.end()) bit = bcache.emplace(J, pr.b_word(J)).first;
        Element prod = a.mul(bit->second, m);
        QRat lead = prod.coeff(w);
        if (lead.is_zero()) throw InternalError("B_J M+ T_Theta lost its leading term");
        QRat k = c / lead;
        coeff[J] += m.scaled(k);
        rem -= prod.scaled(k);
    }
    Element check;
    for (auto& [J, c] : coeff) {
        if (c.is_zero()) continue;
        check += a.mul(bcache.at(J), c);
    }
    if (check != rel.lhs) throw InternalError("defect expansion does not reproduce F_ij(B_i, B_j)");
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        if (!it->second.is_zero()) rel.defect.emplace_back(it->first, it->second);
    std::stable_sort(rel.defect.begin(), rel.defect.end(),
                     [](const auto& u, const auto& v) { return u.first.size() > v.first.size(); });
    return rel;
}

Lemma73Report lemma73_check(const PairPresentation& pr, int i, int j) {
    const Algebra& a = pr.a();
    const RootDatum& rd = pr.th.rd;
    if (i == j) throw ArgumentError("lemma73 needs i != j");
    Lemma73Report rep;
    int N = 1 - rd.cartan[i][j];
    rep.lambda = vadd(vscale(rd.simple(i), N), rd.simple(j));
    Element Y = a.serre_polynomial(i, j, pr.B[i], pr.B[j]);
    rep.projected = a.project_coset(Y, rep.lambda);
    Vec z(rd.n, 0);
    rep.zero_zero = a.project(rep.projected, z, z);
    for (const auto& [beta, gamma] : a.support(rep.projected)) {
        std::string at = "[" + vec_str(beta) + ", " + vec_str(gamma) + "]";
        if (is_zero(beta) && is_zero(gamma)) rep.violations.push_back(at + " is the zero component");
        if (pr.in_t_theta(vsub(rep.lambda, beta))) rep.violations.push_back(at + ": tau(lambda - beta) in T_Theta");
        if (pr.in_t_theta(vsub(rep.lambda, gamma))) rep.violations.push_back(at + ": tau(lambda - gamma) in T_Theta");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::vector<std::string> commutation_failures(const PairPresentation& pr) {
    const Algebra& a = pr.a();
    const RootDatum& rd = pr.th.rd;
    std::vector<std::string> out;
    for (int i = 0; i < rd.n; ++i) {
        for (int j : pr.th.pi_theta) {
            Element g = a.mul(a.t(j, -1), a.x(j));
            Element lhs = a.mul(g, pr.B[i]) - a.mul(pr.B[i], g);
            Element rhs;
            if (i == j)
                rhs = (a.t(j) - a.t(j, -1)).scaled((QRat::s_pow(rd.sq(j)) - QRat::s_pow(-rd.sq(j))).inverse());
            if (lhs != rhs) out.push_back("t_" + idx(j) + "^-1 x_" + idx(j) + " and B_" + idx(i));
            if (pr.th.in_theta[i]) continue;
            Element c = a.mul(a.x(j), pr.B[i]) - a.mul(pr.B[i], a.x(j)).scaled(QRat::q_pow(-rd.form[j][i]));
            if (!c.is_zero()) out.push_back("x_" + idx(j) + " B_" + idx(i) + " commutation");
        }
        if (pr.th.in_theta[i]) continue;
        for (const Vec& l : pr.t_theta)
            if (a.conjugate_torus(l, pr.B[i]) != pr.B[i].scaled(QRat::q_pow(-rd.ip(l, rd.simple(i)))))
                out.push_back("tau(" + vec_str(l) + ") conjugation of B_" + idx(i));
    }
    return out;
}

Element parabolic_generator(const Algebra& alg, const std::vector<int>& pi_prime, const std::vector<int>& I, int j,
                            Side side) {
    int n = alg.rank();
    if (j < 0 || j >= n) throw ArgumentError("index j out of range");
    if (std::find(pi_prime.begin(), pi_prime.end(), j) != pi_prime.end())
        throw ArgumentError("a_j must lie outside pi'");
    for (int k : I)
        if (std::find(pi_prime.begin(), pi_prime.end(), k) == pi_prime.end())
            throw ArgumentError("tuple entries must lie in pi'");
    Element word = alg.one();
    for (int k : I) word = alg.mul(word, side == Side::y ? alg.y(k) : alg.x(k));
    if (side == Side::y) return alg.ad(word, alg.mul(alg.y(j), alg.t(j)));
    return alg.adr(word, alg.mul(alg.x(j), alg.t(j, -1)));
}

std::vector<std::string> parabolic_shape_failures(const Algebra& alg, const std::vector<int>& pi_prime,
                                                  const std::vector<int>& I, int j, Side side) {
    Element g = parabolic_generator(alg, pi_prime, I, j, side);
    std::vector<std::string> out;
    if (g.is_zero()) return out;
    int n = alg.rank();
    bool left = side == Side::y;
    TensorElement rem = alg.coproduct(g) - (left ? alg.tensor(g, alg.one()) : alg.tensor(alg.one(), g));
    Vec aj = alg.root().simple(j);
    // outer factor: the (M cap U^- U^0) t_j, resp. (M cap G^+ U^0) t_j^-1, side; inner: ad-span side
    std::map<NormalWord, Element> groups;
    for (const auto& [k, c] : rem) {
        const NormalWord& outer = left ? k.first : k.second;
        const NormalWord& inner = left ? k.second : k.first;
        bool ok = left ? outer.x.empty() && supported_on(outer.y, pi_prime) && torus_in(outer.t, aj, pi_prime)
                       : outer.y.empty() && supported_on(outer.x, pi_prime) &&
                             torus_in(outer.t, vscale(aj, -1), pi_prime);
        if (!ok) out.push_back("factor " + alg.word_str(outer) + " outside the parabolic torus part");
        groups[outer].add(inner, c);
    }
    Element seed = left ? alg.mul(alg.y(j), alg.t(j)) : alg.mul(alg.x(j), alg.t(j, -1));
    for (const auto& [outer, inner] : groups) {
        const NormalWord& w0 = inner.begin()->first;
        Vec content = left ? Algebra::y_weight(w0, n) : Algebra::x_weight(w0, n);
        content[j] -= 1;
        bool bad = false;
        for (int k = 0; k < n; ++k)
            if (content[k] < 0 || (content[k] > 0 && std::find(pi_prime.begin(), pi_prime.end(), k) == pi_prime.end()))
                bad = true;
        std::vector<Element> gens;
        if (!bad) {
            std::vector<Word> words;
            Word cur;
            words_with_content(content, cur, words);
            for (const Word& K : words) {
                Element kw = alg.one();
                for (int k : K) kw = alg.mul(kw, left ? alg.y(k) : alg.x(k));
                gens.push_back(left ? alg.ad(kw, seed) : alg.adr(kw, seed));
            }
        }
        if (bad || !in_span(gens, inner))
            out.push_back("factor " + alg.str(inner) + " outside the adjoint span of the seed");
    }
    return out;
}

}  // namespace qsym
