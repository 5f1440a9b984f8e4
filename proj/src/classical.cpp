#include "qsym/classical.hpp"

#include <algorithm>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

QMat zero_mat(int n) { return QMat(n, QVec(n, mpq_class(0))); }

QMat add(const QMat& a, const QMat& b, const mpq_class& k = 1) {
    QMat c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) c[i][j] += k * b[i][j];
    return c;
}

QMat scale(const QMat& a, const mpq_class& k) { return add(zero_mat(static_cast<int>(a.size())), a, k); }

std::string mpq_str(const mpq_class& v) { return v.get_str(); }

std::string root_name(const Vec& beta) {
    std::string s;
    for (size_t k = 0; k < beta.size(); ++k) {
        if (!beta[k]) continue;
        if (!s.empty()) s += "+";
        if (beta[k] != 1) s += std::to_string(beta[k]);
        s += "a" + std::to_string(k + 1);
    }
    return s;
}

}  // namespace

ClassicalLie::ClassicalLie(const RootDatum& rd) : rd_(rd) {
    std::vector<int> block(rd.n), pos(rd.n);
    std::vector<int> offset;
    for (const auto& comp : rd.components) {
        Mat sub(comp.size(), Vec(comp.size()));
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = 0; b < comp.size(); ++b) sub[a][b] = rd.cartan[comp[a]][comp[b]];
        std::string type = classify_cartan(sub);
        if (type.empty() || type[0] != 'A')
            throw ArgumentError("the classical oracle covers type A components only, got " + type);
        int start = comp[0];
        for (int v : comp) {
            int deg = 0;
            for (int w : comp)
                if (w != v && rd.cartan[v][w] != 0) ++deg;
            if (deg <= 1) {
                start = v;
                break;
            }
        }
        int prev = -1, cur = start, k = 0;
        while (cur >= 0) {
            block[cur] = static_cast<int>(offset.size());
            pos[cur] = k++;
            int next = -1;
            for (int w : comp)
                if (w != cur && w != prev && rd.cartan[cur][w] != 0) next = w;
            prev = cur;
            cur = next;
        }
        offset.push_back(N_);
        N_ += static_cast<int>(comp.size()) + 1;
    }
    int P = static_cast<int>(rd.positive_roots.size());
    std::vector<QMat> es, fs;
    for (const Vec& beta : rd.positive_roots) {
        int lo = 1 << 30, hi = -1, b = -1;
        for (int k = 0; k < rd.n; ++k)
            if (beta[k]) {
                lo = std::min(lo, pos[k]);
                hi = std::max(hi, pos[k]);
                b = block[k];
            }
        int r = offset[b] + lo, c = offset[b] + hi + 1;
        root_cell_.emplace_back(r, c);
        QMat e = zero_mat(N_), f = zero_mat(N_);
        e[r][c] = 1;
        f[c][r] = 1;
        es.push_back(e);
        fs.push_back(f);
    }
    for (int k = 0; k < P; ++k) {
        basis_.push_back(es[k]);
        names_.push_back(ht(rd.positive_roots[k]) == 1 ? "e" + root_name(rd.positive_roots[k]).substr(1)
                                                        : "e(" + root_name(rd.positive_roots[k]) + ")");
    }
    for (int k = 0; k < P; ++k) {
        basis_.push_back(fs[k]);
        names_.push_back(ht(rd.positive_roots[k]) == 1 ? "f" + root_name(rd.positive_roots[k]).substr(1)
                                                        : "f(" + root_name(rd.positive_roots[k]) + ")");
    }
    h_offset_ = 2 * P;
    for (int i = 0; i < rd.n; ++i) {
        int r = offset[block[i]] + pos[i];
        QMat h = zero_mat(N_);
        h[r][r] = 1;
        h[r + 1][r + 1] = -1;
        basis_.push_back(h);
        names_.push_back("h" + std::to_string(i + 1));
        int k = rd.root_index(rd.simple(i));
        e_index_.push_back(k);
        f_index_.push_back(P + k);
    }
}

QMat ClassicalLie::h_of(const Vec& lambda) const {
    QMat m = zero_mat(N_);
    for (int k = 0; k < rd_.n; ++k) m = add(m, h(k), lambda[k]);
    return m;
}

QMat ClassicalLie::bracket(const QMat& a, const QMat& b) { return add(mat_mul(a, b), mat_mul(b, a), -1); }

QVec ClassicalLie::coords(const QMat& m) const {
    int P = static_cast<int>(root_cell_.size());
    QVec v(dim(), mpq_class(0));
    for (int k = 0; k < P; ++k) {
        auto [r, c] = root_cell_[k];
        v[k] = m[r][c];
        v[P + k] = m[c][r];
    }
    // h-coordinates from the diagonal: h_i has +1, -1 at its two cells
    QMat rest = m;
    for (int k = 0; k < P; ++k) {
        auto [r, c] = root_cell_[k];
        rest[r][c] = 0;
        rest[c][r] = 0;
    }
    // solve the diagonal part against the h basis
    Matrix<mpq_class> a(N_, QVec(rd_.n, mpq_class(0)));
    QVec b(N_);
    for (int r = 0; r < N_; ++r) {
        b[r] = rest[r][r];
        for (int i = 0; i < rd_.n; ++i) a[r][i] = h(i)[r][r];
    }
    auto x = solve(a, b, rd_.n);
    if (!x) throw ValidationError("matrix is not in g: diagonal outside the Cartan subalgebra");
    for (int i = 0; i < rd_.n; ++i) v[h_offset_ + i] = (*x)[i];
    if (from_coords(v) != m) throw ValidationError("matrix is not in g");
    return v;
}

QMat ClassicalLie::from_coords(const QVec& v) const {
    QMat m = zero_mat(N_);
    for (int k = 0; k < dim(); ++k)
        if (sgn(v[k])) m = add(m, basis_[k], v[k]);
    return m;
}

std::string ClassicalLie::str(const QVec& v) const {
    std::vector<std::pair<bool, std::string>> parts;
    for (int k = 0; k < dim(); ++k) {
        if (!sgn(v[k])) continue;
        mpq_class c = abs(v[k]);
        parts.push_back({sgn(v[k]) < 0, (c == 1 ? "" : mpq_str(c) + " ") + names_[k]});
    }
    if (parts.empty()) return "0";
    std::string s = parts[0].first ? "-" + parts[0].second : parts[0].second;
    for (size_t k = 1; k < parts.size(); ++k) s += (parts[k].first ? " - " : " + ") + parts[k].second;
    return s;
}

QVec ClassicalInvolution::apply(const QVec& v) const {
    QVec r(v.size(), mpq_class(0));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t k = 0; k < v.size(); ++k) r[i] += map[i][k] * v[k];
    return r;
}

ClassicalInvolution classical_theta(const ClassicalLie& g, const ThetaData& th) {
    const RootDatum& rd = g.root();
    int n = rd.n, dim = g.dim();
    std::vector<QMat> gen, img;
    for (int i = 0; i < n; ++i) {
        gen.push_back(g.f(i));
        if (th.in_theta[i]) {
            img.push_back(g.f(i));
            continue;
        }
        QMat b = g.e(th.p[i]);
        for (auto [j, k] : sequence_for(th, i)) {
            mpz_class fact = 1;
            for (int r = 1; r <= k; ++r) {
                b = scale(ClassicalLie::bracket(g.e(j), b), -1);
                fact *= r;
            }
            b = scale(b, mpq_class(1, 1) / mpq_class(fact));
        }
        if (!th.in_star(i) && th.m[th.p[i]] % 2 != 0) b = scale(b, -1);
        img.push_back(b);
    }
    ClassicalInvolution out;
    for (int i = 0; i < n; ++i) {
        gen.push_back(g.e(i));
        if (th.in_theta[i]) {
            img.push_back(g.e(i));
            continue;
        }
        Vec target = th.theta.apply(rd.simple(i));  // a negative root
        int k = rd.root_index(vscale(target, -1));
        if (k < 0) throw InternalError("Theta(a_i) is not a root");
        QMat X = g.basis(static_cast<int>(rd.positive_roots.size()) + k);
        QVec z = g.coords(ClassicalLie::bracket(X, img[i]));
        QVec hv = g.coords(g.h_of(target));
        mpq_class c = 0;
        bool prop = true;
        for (int r = 0; r < dim; ++r) {
            if (sgn(hv[r]) && sgn(c) == 0) c = z[r] / hv[r];
        }
        for (int r = 0; r < dim; ++r)
            if (z[r] != c * hv[r]) prop = false;
        if (!prop || sgn(c) == 0) return out;
        img.push_back(scale(X, 1 / c));
    }
    // close under brackets with the generators
    std::vector<QMat> span, span_img;
    Matrix<mpq_class> echelon;
    auto try_add = [&](const QMat& a, const QMat& ta) {
        QVec v = g.coords(a);
        Matrix<mpq_class> test = echelon;
        test.push_back(v);
        if (rank(test) == static_cast<int>(test.size())) {
            echelon.push_back(v);
            span.push_back(a);
            span_img.push_back(ta);
            return true;
        }
        return false;
    };
    for (size_t k = 0; k < gen.size(); ++k) try_add(gen[k], img[k]);
    for (size_t done = 0; done < span.size() && static_cast<int>(span.size()) < dim; ++done)
        for (size_t k = 0; k < gen.size(); ++k)
            try_add(ClassicalLie::bracket(gen[k], span[done]), ClassicalLie::bracket(img[k], span_img[done]));
    if (static_cast<int>(span.size()) < dim) return out;
    Matrix<mpq_class> Pm(dim, QVec(dim)), Qm(dim, QVec(dim));
    for (int c = 0; c < dim; ++c) {
        QVec pv = g.coords(span[c]), qv = g.coords(span_img[c]);
        for (int r = 0; r < dim; ++r) {
            Pm[r][c] = pv[r];
            Qm[r][c] = qv[r];
        }
    }
    out.map.assign(dim, QVec(dim, mpq_class(0)));
    for (int k = 0; k < dim; ++k) {
        QVec ek(dim, mpq_class(0));
        ek[k] = 1;
        auto y = solve(Pm, ek, dim);
        if (!y) throw InternalError("bracket closure does not span g");
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) out.map[r][k] += Qm[r][c] * (*y)[c];
    }
    out.automorphism = true;
    for (int a = 0; a < dim && out.automorphism; ++a)
        for (int b = a + 1; b < dim; ++b) {
            QVec lhs = out.apply(g.coords(ClassicalLie::bracket(g.basis(a), g.basis(b))));
            QMat ta = g.from_coords(out.apply(g.coords(g.basis(a))));
            QMat tb = g.from_coords(out.apply(g.coords(g.basis(b))));
            if (lhs != g.coords(ClassicalLie::bracket(ta, tb))) {
                out.automorphism = false;
                break;
            }
        }
    out.involution = mat_mul(out.map, out.map) == identity_matrix<mpq_class>(dim);
    return out;
}

ClassicalImage specialize_element(const ClassicalLie& g, const Element& a) {
    ClassicalImage out;
    QMat m = zero_mat(g.size());
    for (const auto& [w, c] : a) {
        mpq_class k = specialize_q1(c);
        if (w.y.empty() && w.x.empty()) {
            out.scalar += k;
            continue;
        }
        QMat p = identity_matrix<mpq_class>(g.size());
        for (int l : w.y) p = mat_mul(p, g.f(l));
        for (int l : w.x) p = mat_mul(p, g.e(l));
        m = add(m, p, k);
    }
    out.lie = g.coords(m);
    return out;
}

SpecializationReport specialize_pair(const PairPresentation& pr) {
    const Algebra& a = pr.a();
    const RootDatum& rd = pr.th.rd;
    ClassicalLie g(rd);
    ClassicalInvolution th = classical_theta(g, pr.th);
    SpecializationReport rep;
    rep.theta_automorphism = th.automorphism;
    rep.theta_involution = th.involution;
    auto fixed = [&](const QVec& v) { return !th.map.empty() && th.apply(v) == v; };
    auto item = [&](const std::string& name, const Element& e) {
        SpecializationReport::Item it;
        it.name = name;
        try {
            ClassicalImage im = specialize_element(g, e);
            it.image = g.str(im.lie);
            if (sgn(im.scalar)) it.image += (sgn(im.scalar) > 0 ? " + " : " - ") + mpq_class(abs(im.scalar)).get_str();
            it.fixed = fixed(im.lie);
        } catch (const PoleError&) {
            it.poles_ok = false;
            it.image = "(pole at q = 1)";
        } catch (const ValidationError&) {
            it.in_g = false;
            it.image = "(not in g)";
        }
        return it;
    };
    for (int i = 0; i < rd.n; ++i) {
        auto it = item("B" + std::to_string(i + 1), pr.B[i]);
        it.tip_ok = a.tip(pr.B[i]) == a.mul(a.y(i), a.t(i));
        rep.items.push_back(it);
    }
    for (int j : pr.th.pi_theta) {
        rep.items.push_back(item("x" + std::to_string(j + 1), a.x(j)));
        rep.items.push_back(item("y" + std::to_string(j + 1), a.y(j)));
        SpecializationReport::Item it;
        it.name = "t" + std::to_string(j + 1);
        QVec hv = g.coords(g.h(j));
        it.image = g.str(hv);
        it.fixed = fixed(hv);
        rep.items.push_back(it);
    }
    for (const Vec& l : pr.t_theta) {
        SpecializationReport::Item it;
        it.name = "tau(" + vec_str(l) + ")";
        QVec hv = g.coords(g.h_of(l));
        it.image = g.str(hv);
        it.fixed = fixed(hv) && pr.in_t_theta(l);
        rep.items.push_back(it);
    }
    rep.ok = true;
    for (const auto& it : rep.items)
        if (!(it.poles_ok && it.in_g && it.fixed && it.tip_ok)) rep.ok = false;
    return rep;
}

}  // namespace qsym
