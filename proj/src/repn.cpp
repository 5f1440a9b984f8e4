#include "qsym/repn.hpp"

#include <algorithm>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

void add_to(SparseVec& v, int k, const QRat& c) {
    if (c.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

SparseVec mat_vec(const SparseMat& m, const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v)
        for (const auto& [i, mc] : m[k]) add_to(r, i, mc * c);
    return r;
}

std::vector<Vec> box(const Vec& top) {
    std::vector<Vec> out{Vec(top.size(), 0)};
    for (size_t k = 0; k < top.size(); ++k) {
        std::vector<Vec> next;
        for (const Vec& v : out)
            for (int a = 0; a <= top[k]; ++a) {
                Vec w = v;
                w[k] = a;
                next.push_back(w);
            }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return ht(a) < ht(b); });
    return out;
}

Vec content(const Word& w, int n) {
    Vec c(n, 0);
    for (int a : w) ++c[a];
    return c;
}

// Diagonal entries of an LDL^T factorization with diagonal pivoting; nullopt when a
// nonzero block has no nonzero diagonal left.
std::optional<std::vector<QRat>> ldl_norms(Matrix<QRat> g) {
    int n = static_cast<int>(g.size());
    std::vector<bool> used(n, false);
    std::vector<QRat> out;
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i] && !g[i][i].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!used[i] && !used[j] && !g[i][j].is_zero()) return std::nullopt;
            break;
        }
        used[p] = true;
        QRat d = g[p][p];
        out.push_back(d);
        QRat inv = d.inverse();
        for (int i = 0; i < n; ++i) {
            if (used[i] || g[i][p].is_zero()) continue;
            QRat f = g[i][p] * inv;
            for (int j = 0; j < n; ++j)
                if (!used[j] && !g[p][j].is_zero()) g[i][j] -= f * g[p][j];
        }
    }
    return out;
}

}  // namespace

Matrix<QRat> to_dense(const SparseMat& m, int rows) {
    Matrix<QRat> d(rows, std::vector<QRat>(m.size()));
    for (size_t c = 0; c < m.size(); ++c)
        for (const auto& [r, v] : m[c]) d[r][c] = v;
    return d;
}

SimpleModule::SimpleModule(std::shared_ptr<const Algebra> alg, const Vec& lambda_fund, long long max_dim)
    : alg_(std::move(alg)), lambda_(lambda_fund) {
    const RootDatum& rd = alg_->root();
    int n = rd.n;
    if (static_cast<int>(lambda_.size()) != n) throw ArgumentError("highest weight has the wrong rank");
    if (!rd.is_dominant(lambda_)) throw ArgumentError("highest weight must be dominant integral");
    mpz_class wd = rd.weyl_dimension(lambda_);
    if (wd > mpz_class(std::to_string(max_dim))) throw ResourceError("module dimension " + wd.get_str() + " exceeds the budget");

    Vec low = rd.lowest_weight(lambda_);
    Vec diff(n);
    for (int k = 0; k < n; ++k) diff[k] = lambda_[k] - low[k];
    auto dr = rd.weight_to_root(diff);
    Vec depth(n);
    for (int k = 0; k < n; ++k) {
        if (dr[k].get_den() != 1) throw InternalError("lambda - w0 lambda is not in the root lattice");
        depth[k] = static_cast<int>(dr[k].get_num().get_si());
    }

    for (const Vec& nu : box(depth)) {
        const Matrix<QRat>& g = verma_gram(nu);
        Matrix<QRat> h = g;
        std::vector<int> piv = rref(h);
        if (piv.empty()) continue;
        WeightSpace ws;
        ws.nu = nu;
        ws.verma = words(nu);
        ws.gram = g;
        ws.pivots = piv;
        int r = static_cast<int>(piv.size());
        Matrix<QRat> sub(r, std::vector<QRat>(r));
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) sub[a][b] = g[piv[a]][piv[b]];
        ws.sub_inverse.assign(r, std::vector<QRat>(r));
        for (int c = 0; c < r; ++c) {
            std::vector<QRat> e(r);
            e[c] = QRat(1);
            auto sol = solve(sub, e, r);
            if (!sol) throw InternalError("Gram block on pivots is singular");
            for (int a = 0; a < r; ++a) ws.sub_inverse[a][c] = (*sol)[a];
        }
        ws.offset = dim_;
        dim_ += r;
        space_index_[nu] = static_cast<int>(spaces_.size());
        for (int k = 0; k < r; ++k) owner_.push_back(static_cast<int>(spaces_.size()));
        spaces_.push_back(std::move(ws));
    }
    if (mpz_class(dim_) != wd)
        throw InternalError("simple quotient has dimension " + std::to_string(dim_) + ", Weyl formula gives " +
                            wd.get_str());
    for (int i = 0; i < n; ++i) {
        Vec beyond = depth;
        ++beyond[i];
        for (const auto& row : verma_gram(beyond))
            for (const auto& v : row)
                if (!v.is_zero()) throw InternalError("nonzero Gram block below the lowest weight");
    }

    x_.assign(n, SparseMat(dim_));
    y_.assign(n, SparseMat(dim_));
    for (const WeightSpace& ws : spaces_) {
        for (size_t k = 0; k < ws.pivots.size(); ++k) {
            const Word& b = ws.verma[ws.pivots[k]];
            int col = ws.offset + static_cast<int>(k);
            for (int i = 0; i < n; ++i) {
                if (ws.nu[i] > 0) {
                    Vec lower = ws.nu;
                    --lower[i];
                    x_[i][col] = reduce(lower, x_act_word(i, b));
                }
                Vec upper = ws.nu;
                ++upper[i];
                WordPoly one;
                one.emplace(b, QRat(1));
                y_[i][col] = reduce(upper, y_act(i, one));
            }
        }
    }
}

const std::vector<Word>& SimpleModule::words(const Vec& nu) {
    auto it = verma_words_.find(nu);
    if (it != verma_words_.end()) return it->second;
    return verma_words_.emplace(nu, alg_->rewrite().irreducible_words(nu)).first->second;
}

int SimpleModule::word_pos(const Vec& nu, const Word& w) {
    const auto& ws = words(nu);
    auto it = std::lower_bound(ws.begin(), ws.end(), w);
    if (it == ws.end() || *it != w) {
        it = std::find(ws.begin(), ws.end(), w);
        if (it == ws.end()) throw InternalError("word missing from the Verma basis");
    }
    return static_cast<int>(it - ws.begin());
}

QRat SimpleModule::torus_eigenvalue(const Vec& mu, const Vec& nu) const {
    const RootDatum& rd = alg_->root();
    return QRat::q_pow(rd.weight_root_ip(lambda_, mu) - rd.ip(mu, nu));
}

WordPoly SimpleModule::y_act(int i, const WordPoly& v) const {
    WordPoly r;
    for (const auto& [w, c] : v) {
        Word u{i};
        u.insert(u.end(), w.begin(), w.end());
        for (const auto& [z, zc] : alg_->rewrite().normal_form(u)) add_term(r, z, c * zc);
    }
    return r;
}

const WordPoly& SimpleModule::x_act_word(int i, const Word& w) {
    auto key = std::make_pair(i, w);
    auto it = x_memo_.find(key);
    if (it != x_memo_.end()) return it->second;
    WordPoly r;
    if (!w.empty()) {
        const RootDatum& rd = alg_->root();
        Word rest(w.begin() + 1, w.end());
        WordPoly inner = x_act_word(i, rest);
        r = y_act(w[0], inner);
        if (w[0] == i) {
            Vec nu = content(rest, rd.n);
            int e = rd.weight_root_ip(lambda_, rd.simple(i)) - rd.ip(rd.simple(i), nu);
            int sd = rd.sq(i);
            QRat k = (QRat::q_pow(e) - QRat::q_pow(-e)) / (QRat::s_pow(sd) - QRat::s_pow(-sd));
            add_term(r, rest, k);
        }
    }
    return x_memo_.emplace(key, std::move(r)).first->second;
}

WordPoly SimpleModule::x_act(int i, const WordPoly& v) {
    WordPoly r;
    for (const auto& [w, c] : v)
        for (const auto& [z, zc] : x_act_word(i, w)) add_term(r, z, c * zc);
    return r;
}

const Matrix<QRat>& SimpleModule::verma_gram(const Vec& nu) {
    auto it = verma_gram_.find(nu);
    if (it != verma_gram_.end()) return it->second;
    const RootDatum& rd = alg_->root();
    std::vector<Word> ws = words(nu);
    int m = static_cast<int>(ws.size());
    Matrix<QRat> g(m, std::vector<QRat>(m));
    if (is_zero(nu)) {
        g[0][0] = QRat(1);
    } else {
        for (int a = 0; a < m; ++a) {
            int i = ws[a][0];
            Vec lower = nu;
            --lower[i];
            Word rest(ws[a].begin() + 1, ws[a].end());
            int ra = word_pos(lower, rest);
            QRat tinv = torus_eigenvalue(vscale(rd.simple(i), -1), lower);
            const Matrix<QRat> gl = verma_gram(lower);
            for (int b = 0; b < m; ++b) {
                QRat acc;
                for (const auto& [w, c] : x_act_word(i, ws[b])) acc += c * gl[ra][word_pos(lower, w)];
                g[a][b] = acc * tinv;
            }
        }
    }
    return verma_gram_.emplace(nu, std::move(g)).first->second;
}

SparseVec SimpleModule::reduce(const Vec& nu, const WordPoly& v) {
    SparseVec out;
    auto it = space_index_.find(nu);
    if (it == space_index_.end() || v.empty()) return out;
    const WeightSpace& ws = spaces_[it->second];
    int r = static_cast<int>(ws.pivots.size());
    std::vector<QRat> rhs(r);
    for (const auto& [w, c] : v) {
        int p = word_pos(nu, w);
        for (int a = 0; a < r; ++a) rhs[a] += c * ws.gram[ws.pivots[a]][p];
    }
    for (int a = 0; a < r; ++a) {
        QRat acc;
        for (int b = 0; b < r; ++b) acc += ws.sub_inverse[a][b] * rhs[b];
        add_to(out, ws.offset + a, acc);
    }
    return out;
}

const WeightSpace& SimpleModule::space_of(int k) const { return spaces_.at(owner_.at(k)); }

std::string SimpleModule::basis_label(int k) const {
    const WeightSpace& ws = space_of(k);
    const Word& w = ws.verma[ws.pivots[k - ws.offset]];
    std::string s;
    for (int a : w) s += "y" + std::to_string(a + 1) + " ";
    return s + "v";
}

SparseVec SimpleModule::apply_word(const NormalWord& w, const SparseVec& v0) const {
    SparseVec v = v0;
    for (size_t k = w.x.size(); k-- > 0;) v = mat_vec(x_[w.x[k]], v);
    SparseVec t;
    for (const auto& [k, c] : v) add_to(t, k, c * torus_eigenvalue(w.t, space_of(k).nu));
    v = std::move(t);
    for (size_t k = w.y.size(); k-- > 0;) v = mat_vec(y_[w.y[k]], v);
    return v;
}

SparseVec SimpleModule::apply(const Element& a, const SparseVec& v) const {
    SparseVec r;
    for (const auto& [w, c] : a)
        for (const auto& [k, kc] : apply_word(w, v)) add_to(r, k, c * kc);
    return r;
}

SparseMat SimpleModule::matrix(const Element& a) const {
    SparseMat m(dim_);
    for (int k = 0; k < dim_; ++k) m[k] = apply(a, SparseVec{{k, QRat(1)}});
    return m;
}

Matrix<QRat> SimpleModule::gram() const {
    Matrix<QRat> g(dim_, std::vector<QRat>(dim_));
    for (const WeightSpace& ws : spaces_) {
        int r = static_cast<int>(ws.pivots.size());
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) g[ws.offset + a][ws.offset + b] = ws.gram[ws.pivots[a]][ws.pivots[b]];
    }
    return g;
}

namespace {

// Generators of B (or its rescaled image) with their counit values.
std::vector<std::pair<Element, QRat>> invariance_conditions(const PairPresentation& pr,
                                                            const std::vector<Element>& B) {
    const Algebra& a = pr.a();
    std::vector<std::pair<Element, QRat>> out;
    for (int i = 0; i < pr.th.rd.n; ++i)
        if (!pr.th.in_theta[i]) out.emplace_back(B[i], a.counit(B[i]));
    for (int j : pr.th.pi_theta) {
        out.emplace_back(a.x(j), QRat());
        out.emplace_back(a.y(j), QRat());
        out.emplace_back(a.t(j), QRat(1));
    }
    for (const Vec& l : pr.t_theta) out.emplace_back(a.torus(l), QRat(1));
    return out;
}

std::vector<std::vector<QRat>> invariant_kernel(const SimpleModule& mod,
                                                const std::vector<std::pair<Element, QRat>>& conds) {
    int d = mod.dim();
    Matrix<QRat> rows;
    for (const auto& [g, eps] : conds) {
        Matrix<QRat> m = to_dense(mod.matrix(g), d);
        for (int r = 0; r < d; ++r) m[r][r] -= eps;
        for (auto& row : m) {
            bool nz = false;
            for (const auto& v : row)
                if (!v.is_zero()) nz = true;
            if (nz) rows.push_back(std::move(row));
        }
        rref(rows);
        while (!rows.empty()) {
            bool nz = false;
            for (const auto& v : rows.back())
                if (!v.is_zero()) nz = true;
            if (nz) break;
            rows.pop_back();
        }
    }
    return kernel(rows, d);
}

std::vector<Element> b_generators(const PairPresentation& pr) { return pr.B; }

}  // namespace

InvariantReport invariants(const SimpleModule& mod, const PairPresentation& pr) {
    InvariantReport rep;
    rep.basis = invariant_kernel(mod, invariance_conditions(pr, b_generators(pr)));
    rep.dimension = static_cast<int>(rep.basis.size());
    return rep;
}

PositivityReport shapovalov_positivity(const SimpleModule& mod) {
    PositivityReport rep;
    for (const WeightSpace& ws : mod.spaces()) {
        int r = static_cast<int>(ws.pivots.size());
        Matrix<QRat> sub(r, std::vector<QRat>(r));
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) sub[a][b] = ws.gram[ws.pivots[a]][ws.pivots[b]];
        auto norms = ldl_norms(sub);
        if (!norms) {
            rep.ok = false;
            rep.failures.push_back("weight space " + vec_str(ws.nu) + " has an isotropic block");
            continue;
        }
        for (const auto& v : *norms)
            if (sign(v) != Sign::positive) {
                rep.ok = false;
                rep.failures.push_back("weight space " + vec_str(ws.nu) + " has norm " + v.str());
            }
        rep.norms.emplace_back(ws.nu, *norms);
    }
    return rep;
}

Element rescale(const Algebra& alg, const Element& a, const std::vector<int>& e) {
    Element r;
    int n = alg.rank();
    for (const auto& [w, c] : a) {
        Vec xc = Algebra::x_weight(w, n), yc = Algebra::y_weight(w, n);
        long k = 0;
        for (int i = 0; i < n; ++i) k += static_cast<long>(e[i]) * (xc[i] - yc[i]);
        r.add(w, c * QRat::s_pow(k));
    }
    return r;
}

std::vector<Element> rescaled_generators(const PairPresentation& pr, const std::vector<int>& e) {
    const Algebra& a = pr.a();
    std::vector<Element> out;
    for (int i = 0; i < pr.th.rd.n; ++i) out.push_back(rescale(a, pr.B[i], e));
    return out;
}

namespace {

std::optional<QRat> ratio(const Element& a, const Element& b) {
    if (a.size() != b.size() || a.is_zero()) return std::nullopt;
    QRat lead = b.coeff(a.begin()->first);
    if (lead.is_zero()) return std::nullopt;
    QRat r = a.begin()->second / lead;
    for (const auto& [w, c] : a)
        if (b.coeff(w).is_zero() || c != r * b.coeff(w)) return std::nullopt;
    return r;
}

}  // namespace

std::optional<std::vector<int>> find_real_form_scaling(const PairPresentation& pr, int bound) {
    const Algebra& a = pr.a();
    int n = pr.th.rd.n;
    std::vector<int> free;
    for (int i = 0; i < n; ++i)
        if (!pr.th.in_theta[i]) free.push_back(i);
    std::vector<std::vector<int>> cands{std::vector<int>(n, 0)};
    for (int i : free) {
        std::vector<std::vector<int>> next;
        for (const auto& c : cands)
            for (int v = -bound; v <= bound; ++v) {
                auto d = c;
                d[i] = v;
                next.push_back(d);
            }
        cands = std::move(next);
    }
    auto cost = [](const std::vector<int>& c) {
        int s = 0;
        for (int v : c) s += std::abs(v);
        return s;
    };
    std::stable_sort(cands.begin(), cands.end(),
                     [&](const auto& u, const auto& v) { return cost(u) < cost(v); });
    for (const auto& e : cands) {
        std::vector<Element> B = rescaled_generators(pr, e);
        bool ok = true;
        for (int i : free) {
            Element k = a.kappa(B[i]);
            NormalWord kt = a.tip(k).begin()->first;
            bool hit = false;
            for (int j : free) {
                // kappa(B'_i) may land on B'_j tau with tau in T_Theta
                NormalWord bt = a.tip(B[j]).begin()->first;
                if (kt.y != bt.y) continue;
                Vec tau = vsub(kt.t, bt.t);
                if (!pr.in_t_theta(tau)) continue;
                if (ratio(k, a.mul(B[j], a.torus(tau)))) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                ok = false;
                break;
            }
        }
        if (ok) return e;
    }
    return std::nullopt;
}

UnitaryReport unitary_check(const SimpleModule& mod, const PairPresentation& pr, const std::vector<int>& e) {
    const Algebra& a = pr.a();
    UnitaryReport rep;
    int d = mod.dim();
    Matrix<QRat> G = mod.gram();
    rep.symmetric = G == transpose(G);
    rep.positive = shapovalov_positivity(mod).ok;
    std::vector<Element> gens = rescaled_generators(pr, e);
    for (int j : pr.th.pi_theta) {
        gens.push_back(a.x(j));
        gens.push_back(a.y(j));
        gens.push_back(a.t(j));
    }
    for (const Vec& l : pr.t_theta) gens.push_back(a.torus(l));
    for (const Element& b : gens) {
        Matrix<QRat> M = to_dense(mod.matrix(b), d);
        Matrix<QRat> K = to_dense(mod.matrix(a.kappa(b)), d);
        if (mat_mul(transpose(M), G) != mat_mul(G, K)) rep.contravariant = false;
    }
    return rep;
}

ReducibilityReport reducibility_witness(const SimpleModule& mod, const PairPresentation& pr,
                                        const std::vector<int>& e) {
    const Algebra& a = pr.a();
    int d = mod.dim();
    std::vector<Element> B = rescaled_generators(pr, e);
    auto conds = invariance_conditions(pr, B);
    std::vector<std::vector<QRat>> W = invariant_kernel(mod, conds);
    std::vector<SparseMat> mats;
    for (const auto& [g, eps] : conds) mats.push_back(mod.matrix(g));
    for (int j : pr.th.pi_theta) mats.push_back(mod.matrix(a.t(j, -1)));
    // close W under the generators
    Matrix<QRat> ech;
    std::vector<std::vector<QRat>> span;
    auto add = [&](const std::vector<QRat>& v) {
        Matrix<QRat> t = ech;
        t.push_back(v);
        if (rank(t) > static_cast<int>(ech.size())) {
            ech.push_back(v);
            span.push_back(v);
        }
    };
    for (const auto& w : W) add(w);
    for (size_t k = 0; k < span.size(); ++k)
        for (const auto& m : mats) {
            SparseVec v;
            for (int i = 0; i < d; ++i)
                if (!span[k][i].is_zero()) v[i] = span[k][i];
            std::vector<QRat> out(d);
            for (const auto& [i, c] : mat_vec(m, v)) out[i] = c;
            add(out);
        }
    Matrix<QRat> G = mod.gram();
    Matrix<QRat> WG;
    for (const auto& w : span) {
        std::vector<QRat> row(d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r)
                if (!w[r].is_zero() && !G[r][c].is_zero()) row[c] += w[r] * G[r][c];
        WG.push_back(row);
    }
    std::vector<std::vector<QRat>> perp = kernel(WG, d);
    ReducibilityReport rep;
    rep.submodule_dim = static_cast<int>(span.size());
    rep.complement_dim = static_cast<int>(perp.size());
    rep.complement_stable = true;
    for (const auto& u : perp)
        for (const auto& m : mats) {
            SparseVec v;
            for (int i = 0; i < d; ++i)
                if (!u[i].is_zero()) v[i] = u[i];
            SparseVec gu = mat_vec(m, v);
            for (const auto& row : WG) {
                QRat acc;
                for (const auto& [i, c] : gu) acc += row[i] * c;
                if (!acc.is_zero()) rep.complement_stable = false;
            }
        }
    Matrix<QRat> all = span;
    for (const auto& u : perp) all.push_back(u);
    rep.direct_sum = rank(all) == d && static_cast<int>(all.size()) == d;
    return rep;
}

}  // namespace qsym
