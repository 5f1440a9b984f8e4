#include "qsym/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

int ht(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vscale(const Vec& a, int k) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool is_nonneg(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- RootDatum

Vec RootDatum::simple(int i) const {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

int RootDatum::ip(const Vec& a, const Vec& b) const {
    int s = 0;
    for (int i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < n; ++j) s += a[i] * form[i][j] * b[j];
    }
    return s;
}

int RootDatum::coroot_pairing(const Vec& beta, int i) const {
    int num = 2 * ip(beta, simple(i));
    if (num % sq(i)) throw InternalError("coroot pairing not integral");
    return num / sq(i);
}

Vec RootDatum::reflect(int i, const Vec& v) const {
    Vec r = v;
    r[i] -= coroot_pairing(v, i);
    return r;
}

int RootDatum::root_index(const Vec& v) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), v, [](const Vec& a, const Vec& b) {
        int ha = ht(a), hb = ht(b);
        return ha != hb ? ha < hb : a < b;
    });
    if (it != positive_roots.end() && *it == v) return static_cast<int>(it - positive_roots.begin());
    return -1;
}

bool RootDatum::is_root(const Vec& v) const {
    if (root_index(v) >= 0) return true;
    return root_index(vscale(v, -1)) >= 0;
}

Vec RootDatum::root_to_weight(const Vec& beta) const {
    Vec m(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i] += cartan[i][j] * beta[j];
    return m;
}

namespace {

// Solve A c = b over Q for square invertible A.
std::vector<mpq_class> solve_rational(const Mat& a, const std::vector<mpq_class>& b) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw InternalError("singular system");
        std::swap(m[p], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

}  // namespace

std::vector<mpq_class> RootDatum::weight_to_root(const Vec& m) const {
    std::vector<mpq_class> b(m.begin(), m.end());
    return solve_rational(cartan, b);
}

int RootDatum::weight_root_ip(const Vec& m, const Vec& beta) const {
    int s = 0;
    for (int j = 0; j < n; ++j) s += m[j] * beta[j] * sq(j) / 2;
    return s;
}

mpq_class RootDatum::weight_ip(const Vec& m1, const Vec& m2) const {
    auto c = weight_to_root(m1);
    mpq_class s = 0;
    for (int j = 0; j < n; ++j) s += c[j] * m2[j] * sq(j) / 2;
    return s;
}

bool RootDatum::is_dominant(const Vec& m) const { return is_nonneg(m); }

Vec RootDatum::lowest_weight(const Vec& m0) const {
    Vec m = m0;
    while (true) {
        int i = 0;
        while (i < n && m[i] <= 0) ++i;
        if (i == n) return m;
        int k = m[i];
        for (int r = 0; r < n; ++r) m[r] -= k * cartan[r][i];
    }
}

mpz_class RootDatum::weyl_dimension(const Vec& m) const {
    mpq_class d = 1;
    Vec lr(n), rho(n, 1);
    for (int i = 0; i < n; ++i) lr[i] = m[i] + 1;
    for (const auto& a : positive_roots) {
        mpq_class f(weight_root_ip(lr, a), weight_root_ip(rho, a));
        f.canonicalize();
        d *= f;
    }
    if (d.get_den() != 1) throw InternalError("Weyl dimension not integral");
    return d.get_num();
}

// ---------------------------------------------------------------- construction

namespace {

std::vector<std::vector<int>> connected_components(const Mat& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        std::deque<int> dq{s};
        seen[s] = 1;
        while (!dq.empty()) {
            int i = dq.front();
            dq.pop_front();
            c.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && a[i][j] != 0) {
                    seen[j] = 1;
                    dq.push_back(j);
                }
        }
        std::sort(c.begin(), c.end());
        comps.push_back(c);
    }
    return comps;
}

Mat series_matrix(char series, int r) {
    Mat a(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (series) {
        case 'A':
            if (r < 1) break;
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            return a;
        case 'B':
            if (r < 2) break;
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            a[r - 1][r - 2] = -2;
            return a;
        case 'C':
            if (r < 2) break;
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            a[r - 2][r - 1] = -2;
            return a;
        case 'D':
            if (r < 4) break;
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            return a;
        case 'E':
            if (r < 6 || r > 8) break;
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
            return a;
        case 'F':
            if (r != 4) break;
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            return a;
        case 'G':
            if (r != 2) break;
            a[0][1] = -3;
            a[1][0] = -1;
            return a;
        default:
            break;
    }
    throw ValidationError(std::string("unsupported Cartan type ") + series + std::to_string(r));
}

}  // namespace

RootDatum cartan_from_matrix(const Mat& a, const std::string& label) {
    RootDatum rd;
    rd.label = label;
    rd.n = static_cast<int>(a.size());
    int n = rd.n;
    if (n == 0) throw ValidationError("empty Cartan matrix");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw ValidationError("Cartan matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 2) throw ValidationError("Cartan matrix needs a_ii = 2");
            if (i != j && a[i][j] > 0) throw ValidationError("Cartan matrix needs a_ij <= 0 off the diagonal");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw ValidationError("Cartan matrix needs a_ij = 0 iff a_ji = 0");
        }
    rd.cartan = a;
    rd.components = connected_components(a);

    // symmetrizer d_i with d_i a_ij = d_j a_ji, smallest value 1 per component
    std::vector<mpq_class> d(n, 0);
    for (const auto& comp : rd.components) {
        d[comp[0]] = 1;
        std::deque<int> dq{comp[0]};
        while (!dq.empty()) {
            int i = dq.front();
            dq.pop_front();
            for (int j : comp) {
                if (i == j || a[i][j] == 0) continue;
                mpq_class dj = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    dq.push_back(j);
                } else if (d[j] != dj) {
                    throw ValidationError("Cartan matrix is not symmetrizable");
                }
            }
        }
        mpq_class mn = d[comp[0]];
        for (int i : comp) mn = std::min(mn, d[i]);
        for (int i : comp) {
            d[i] /= mn;
            if (d[i].get_den() != 1) throw ValidationError("Cartan matrix is not of finite type");
        }
    }
    rd.form.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rd.form[i][j] = static_cast<int>(d[i].get_num().get_si()) * a[i][j];

    // positive definiteness by Gaussian pivots
    {
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rd.form[i][j];
        for (int c = 0; c < n; ++c) {
            if (m[c][c] <= 0) throw ValidationError("Cartan matrix is not of finite type");
            for (int r = c + 1; r < n; ++r) {
                mpq_class f = m[r][c] / m[c][c];
                for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            }
        }
    }

    // positive roots by reflection closure of the simple roots
    std::set<Vec> roots;
    std::deque<Vec> dq;
    for (int i = 0; i < n; ++i) {
        roots.insert(rd.simple(i));
        dq.push_back(rd.simple(i));
    }
    while (!dq.empty()) {
        Vec b = dq.front();
        dq.pop_front();
        for (int i = 0; i < n; ++i) {
            Vec r = rd.reflect(i, b);
            if (!is_nonneg(r) || is_zero(r)) continue;
            if (roots.insert(r).second) {
                dq.push_back(r);
                if (roots.size() > 1000) throw ValidationError("root enumeration does not terminate");
            }
        }
    }
    rd.positive_roots.assign(roots.begin(), roots.end());
    std::sort(rd.positive_roots.begin(), rd.positive_roots.end(), [](const Vec& x, const Vec& y) {
        int hx = ht(x), hy = ht(y);
        return hx != hy ? hx < hy : x < y;
    });
    return rd;
}

RootDatum cartan_product(const std::vector<RootDatum>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.n;
    Mat a(n, Vec(n, 0));
    int off = 0;
    std::string label;
    for (const auto& p : parts) {
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) a[off + i][off + j] = p.cartan[i][j];
        off += p.n;
        label += (label.empty() ? "" : "x") + p.label;
    }
    return cartan_from_matrix(a, label);
}

RootDatum cartan_init(const std::string& label0) {
    std::string label;
    for (size_t i = 0; i < label0.size(); ++i) {
        unsigned char c = label0[i];
        if (c == ' ') continue;
        if (c == 0xC3 && i + 1 < label0.size() && static_cast<unsigned char>(label0[i + 1]) == 0x97) {
            label += 'x';  // multiplication sign
            ++i;
            continue;
        }
        label += (c == '+' || c == '*') ? 'x' : static_cast<char>(c);
    }
    std::vector<RootDatum> parts;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t nx = label.find('x', pos);
        std::string tok = label.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos);
        if (tok.size() < 2 || !std::isupper(static_cast<unsigned char>(tok[0])))
            throw ValidationError("cannot parse Cartan label '" + label0 + "'");
        int r = 0;
        for (size_t k = 1; k < tok.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw ValidationError("cannot parse Cartan label '" + label0 + "'");
            r = r * 10 + (tok[k] - '0');
        }
        parts.push_back(cartan_from_matrix(series_matrix(tok[0], r), tok));
        if (nx == std::string::npos) break;
        pos = nx + 1;
    }
    if (parts.empty()) throw ValidationError("empty Cartan label");
    if (parts.size() == 1) return parts[0];
    return cartan_product(parts);
}

// ---------------------------------------------------------------- lattice maps

Vec LatticeMap::apply(const Vec& v) const {
    int n = static_cast<int>(m.size());
    Vec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

LatticeMap LatticeMap::compose(const LatticeMap& o) const {
    int n = static_cast<int>(m.size());
    LatticeMap r{Mat(n, Vec(n, 0))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
}

LatticeMap LatticeMap::identity(int n) {
    LatticeMap r{Mat(n, Vec(n, 0))};
    for (int i = 0; i < n; ++i) r.m[i][i] = 1;
    return r;
}

LatticeMap parabolic_longest(const RootDatum& rd, const std::vector<int>& J) {
    LatticeMap w = LatticeMap::identity(rd.n);
    int n = rd.n;
    while (true) {
        int pick = -1;
        for (int i : J) {
            Vec col(n);
            for (int r = 0; r < n; ++r) col[r] = w.m[r][i];
            if (is_nonneg(col)) {
                pick = i;
                break;
            }
        }
        if (pick < 0) return w;
        // w <- w s_pick ; column j of w s_i is w(a_j) - a_ij w(a_i)
        Mat nm = w.m;
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r) nm[r][j] = w.m[r][j] - rd.cartan[pick][j] * w.m[r][pick];
        w.m = nm;
    }
}

bool is_diagram_automorphism(const RootDatum& rd, const std::vector<int>& d) {
    if (static_cast<int>(d.size()) != rd.n) return false;
    std::vector<int> seen(rd.n, 0);
    for (int x : d) {
        if (x < 0 || x >= rd.n || seen[x]) return false;
        seen[x] = 1;
    }
    for (int i = 0; i < rd.n; ++i)
        for (int j = 0; j < rd.n; ++j)
            if (rd.cartan[d[i]][d[j]] != rd.cartan[i][j]) return false;
    return true;
}

std::vector<int> diagram_flip(const RootDatum& rd) {
    std::vector<int> d(rd.n);
    std::iota(d.begin(), d.end(), 0);
    if (rd.components.size() == 2 && rd.components[0].size() == rd.components[1].size()) {
        const auto& c0 = rd.components[0];
        const auto& c1 = rd.components[1];
        for (size_t k = 0; k < c0.size(); ++k) {
            d[c0[k]] = c1[k];
            d[c1[k]] = c0[k];
        }
        if (is_diagram_automorphism(rd, d)) return d;
        throw ValidationError("no canonical flip for " + rd.label);
    }
    if (rd.components.size() != 1) throw ValidationError("no canonical flip for " + rd.label);
    std::string t = classify_cartan(rd.cartan);
    int n = rd.n;
    if (t[0] == 'A') {
        for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    } else if (t[0] == 'D') {
        std::swap(d[n - 2], d[n - 1]);
    } else if (t == "E6") {
        d = {5, 1, 4, 3, 2, 0};
    } else {
        throw ValidationError("no nontrivial diagram automorphism for " + rd.label);
    }
    if (!is_diagram_automorphism(rd, d)) throw ValidationError("no canonical flip for " + rd.label);
    return d;
}

LatticeMap theta_lattice(const RootDatum& rd, const std::vector<int>& pi_theta, const std::vector<int>& d) {
    int n = rd.n;
    std::vector<int> in(n, 0);
    for (int i : pi_theta) {
        if (i < 0 || i >= n) throw ValidationError("pi_theta index out of range");
        if (in[i]) throw ValidationError("pi_theta has a repeated index");
        in[i] = 1;
    }
    if (!is_diagram_automorphism(rd, d)) throw ValidationError("d is not a diagram automorphism");
    for (int i = 0; i < n; ++i)
        if (in[i] != in[d[i]]) throw ValidationError("d does not preserve pi_theta");
    LatticeMap w0 = parabolic_longest(rd, pi_theta);
    LatticeMap th{Mat(n, Vec(n, 0))};
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) th.m[r][j] = -w0.m[r][d[j]];
    for (int i : pi_theta)
        if (th.apply(rd.simple(i)) != rd.simple(i))
            throw ValidationError("Theta does not fix a_" + std::to_string(i + 1) +
                                  " (d does not restrict to -w0 on pi_theta)");
    if (!(th.compose(th) == LatticeMap::identity(n))) throw ValidationError("Theta is not an involution");
    for (const auto& a : rd.positive_roots)
        if (!rd.is_root(th.apply(a))) throw ValidationError("Theta does not permute the roots");
    return th;
}

std::vector<int> theta_fixed_simple(const RootDatum& rd, const LatticeMap& th) {
    std::vector<int> r;
    for (int i = 0; i < rd.n; ++i)
        if (th.apply(rd.simple(i)) == rd.simple(i)) r.push_back(i);
    return r;
}

std::vector<int> satake_permutation(const RootDatum& rd, const LatticeMap& th) {
    int n = rd.n;
    auto fixed = theta_fixed_simple(rd, th);
    std::vector<int> in(n, 0);
    for (int i : fixed) in[i] = 1;
    std::vector<int> p(n, -1);
    for (int i = 0; i < n; ++i) {
        if (in[i]) {
            p[i] = i;
            continue;
        }
        Vec v = vscale(th.apply(rd.simple(i)), -1);
        for (int j = 0; j < n; ++j) {
            if (in[j]) continue;
            Vec r = vsub(v, rd.simple(j));
            bool ok = is_nonneg(r);
            for (int k = 0; k < n && ok; ++k)
                if (r[k] && !in[k]) ok = false;
            if (!ok) continue;
            if (p[i] >= 0) throw ValidationError("condition Theta(-a_i) - a_p(i) in Q+(pi_Theta) is not unique");
            p[i] = j;
        }
        if (p[i] < 0)
            throw ValidationError("no p(" + std::to_string(i + 1) + ") with Theta(-a_i) - a_p(i) in Q+(pi_Theta)");
    }
    for (int i = 0; i < n; ++i)
        if (p[p[i]] != i) throw ValidationError("p is not an involution");
    return p;
}

std::vector<Vec> integer_kernel(const Mat& a0) {
    int m = static_cast<int>(a0.size());
    int n = m ? static_cast<int>(a0[0].size()) : 0;
    std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = a0[i][j];
    std::vector<std::vector<long long>> u(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    auto colop = [&](int dst, int src, long long f) {  // col dst -= f * col src
        for (int r = 0; r < m; ++r) a[r][dst] -= f * a[r][src];
        for (int r = 0; r < n; ++r) u[r][dst] -= f * u[r][src];
    };
    auto colswap = [&](int x, int y) {
        for (int r = 0; r < m; ++r) std::swap(a[r][x], a[r][y]);
        for (int r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
    };
    int c = 0;
    for (int r = 0; r < m && c < n; ++r) {
        while (true) {
            int piv = -1;
            for (int j = c; j < n; ++j)
                if (a[r][j] != 0 && (piv < 0 || std::llabs(a[r][j]) < std::llabs(a[r][piv]))) piv = j;
            if (piv < 0) break;
            colswap(c, piv);
            bool done = true;
            for (int j = c + 1; j < n; ++j) {
                if (a[r][j] == 0) continue;
                colop(j, c, a[r][j] / a[r][c]);
                if (a[r][j] != 0) done = false;
            }
            if (done) {
                ++c;
                break;
            }
        }
    }
    std::vector<Vec> ker;
    for (int j = c; j < n; ++j) {
        Vec v(n);
        for (int r = 0; r < n; ++r) v[r] = static_cast<int>(u[r][j]);
        ker.push_back(v);
    }
    return ker;
}

// ---------------------------------------------------------------- restricted roots

std::string classify_cartan(const Mat& a) {
    int k = static_cast<int>(a.size());
    if (k == 1) return "A1";
    std::vector<int> deg(k, 0);
    int doubles = 0, triples = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int m = a[i][j] * a[j][i];
            if (!m) continue;
            ++deg[i];
            ++deg[j];
            if (m == 2) ++doubles;
            if (m == 3) ++triples;
            if (m > 3) return "unknown";
        }
    int edges = 0, branch = -1;
    for (int i = 0; i < k; ++i) {
        edges += deg[i];
        if (deg[i] > 3) return "unknown";
        if (deg[i] == 3) {
            if (branch >= 0) return "unknown";
            branch = i;
        }
    }
    edges /= 2;
    if (edges != k - 1) return "unknown";
    std::string r = std::to_string(k);
    if (triples) return (k == 2 && doubles == 0) ? "G2" : "unknown";
    if (branch >= 0) {
        if (doubles) return "unknown";
        std::vector<int> arms;
        for (int j = 0; j < k; ++j) {
            if (!a[branch][j] || j == branch) continue;
            int len = 0, prev = branch, cur = j;
            while (true) {
                ++len;
                int nxt = -1;
                for (int t = 0; t < k; ++t)
                    if (t != cur && t != prev && a[cur][t]) nxt = t;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return "D" + r;
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + r;
        return "unknown";
    }
    if (doubles == 0) return "A" + r;
    if (doubles > 1) return "unknown";
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || a[i][j] * a[j][i] != 2) continue;
            if (deg[i] == 1 && a[i][j] == -2) return k == 2 ? "B2" : "B" + r;  // i is the short end
            if (deg[i] == 1 && a[i][j] == -1 && deg[j] != 1) return "C" + r;
            if (deg[i] == 2 && deg[j] == 2) return k == 4 ? "F4" : "unknown";
        }
    return k == 2 ? "B2" : "unknown";
}

std::string RestrictedSystem::type_label() const {
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "x") + c.type;
    return s.empty() ? "0" : s;
}

bool RestrictedSystem::contains(const Vec& d) const {
    return std::find(roots.begin(), roots.end(), d) != roots.end();
}

namespace {

bool lex_positive(const Vec& v) {
    for (int x : v)
        if (x) return x > 0;
    return false;
}

}  // namespace

RestrictedSystem restricted_roots(const RootDatum& rd, const LatticeMap& th) {
    int n = rd.n;
    RestrictedSystem rs;
    Mat m = th.m;
    for (int i = 0; i < n; ++i) m[i][i] += 1;
    rs.eigen_basis = integer_kernel(m);
    int k = static_cast<int>(rs.eigen_basis.size());

    std::set<Vec> seen;
    for (const auto& a : rd.positive_roots) {
        for (int sgn : {1, -1}) {
            Vec al = vscale(a, sgn);
            Vec r = vsub(al, th.apply(al));
            if (is_zero(r) || !seen.insert(r).second) continue;
            rs.roots.push_back(r);
        }
    }
    // coordinates in the eigen basis
    for (const auto& r : rs.roots) {
        std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(k + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < k; ++j) aug[i][j] = rs.eigen_basis[j][i];
            aug[i][k] = r[i];
        }
        int row = 0;
        std::vector<int> pivcol;
        for (int c = 0; c < k; ++c) {
            int p = row;
            while (p < n && aug[p][c] == 0) ++p;
            if (p == n) continue;
            std::swap(aug[p], aug[row]);
            for (int t = 0; t < n; ++t) {
                if (t == row || aug[t][c] == 0) continue;
                mpq_class f = aug[t][c] / aug[row][c];
                for (int s = c; s <= k; ++s) aug[t][s] -= f * aug[row][s];
            }
            pivcol.push_back(c);
            ++row;
        }
        Vec co(k, 0);
        for (int t = 0; t < row; ++t) {
            mpq_class v = aug[t][k] / aug[t][pivcol[t]];
            if (v.get_den() != 1) throw InternalError("restricted root not integral in eigen basis");
            co[pivcol[t]] = static_cast<int>(v.get_num().get_si());
        }
        rs.coords.push_back(co);
    }

    std::vector<Vec> pos;
    for (const auto& r : rs.roots)
        if (lex_positive(r)) pos.push_back(r);
    std::set<Vec> posset(pos.begin(), pos.end());
    std::vector<Vec> simple;
    for (const auto& r : pos) {
        bool dec = false;
        for (const auto& a : pos) {
            Vec b = vsub(r, a);
            if (posset.count(b)) {
                dec = true;
                break;
            }
        }
        if (!dec) simple.push_back(r);
    }
    int ns = static_cast<int>(simple.size());
    Mat g(ns, Vec(ns, 0));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) g[i][j] = rd.ip(simple[i], simple[j]);
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        RestrictedComponent rc;
        rc.rank = static_cast<int>(comp.size());
        Mat a(rc.rank, Vec(rc.rank));
        for (int i = 0; i < rc.rank; ++i) {
            rc.simple.push_back(simple[comp[i]]);
            for (int j = 0; j < rc.rank; ++j) a[i][j] = 2 * g[comp[i]][comp[j]] / g[comp[i]][comp[i]];
        }
        bool bc = false;
        for (const auto& r : rs.roots) {
            if (!rs.contains(vscale(r, 2))) continue;
            for (const auto& s : rc.simple)
                if (rd.ip(r, s) != 0) bc = true;
        }
        rc.type = bc ? "BC" + std::to_string(rc.rank) : classify_cartan(a);
        rs.components.push_back(rc);
    }

    auto p = satake_permutation(rd, th);
    for (int r = 0; r < n; ++r) {
        Vec ar = rd.simple(r);
        if (p[r] == r || th.apply(ar) == ar) continue;
        if (rd.ip(ar, th.apply(ar)) == 0) continue;
        std::pair<int, int> pr{std::min(r, p[r]), std::max(r, p[r])};
        if (std::find(rs.variation1_pairs.begin(), rs.variation1_pairs.end(), pr) == rs.variation1_pairs.end())
            rs.variation1_pairs.push_back(pr);
    }
    return rs;
}

bool spherical_weight_test(const Vec& lam, const RootDatum& rd, const LatticeMap& th) {
    if (static_cast<int>(lam.size()) != rd.n || !rd.is_dominant(lam))
        throw ArgumentError("spherical_weight_test needs a dominant integral weight");
    Mat m = th.m;
    for (int i = 0; i < rd.n; ++i) m[i][i] -= 1;
    for (const auto& b : integer_kernel(m))
        if (rd.weight_root_ip(lam, b) != 0) return false;
    RestrictedSystem rs = restricted_roots(rd, th);
    for (const auto& r : rs.roots) {
        // beta = r/2: (lambda~, beta)/(beta, beta) = 2 (lambda, r)/(r, r)
        int num = 2 * rd.weight_root_ip(lam, r);
        int den = rd.ip(r, r);
        if (num % den) return false;
    }
    return true;
}

bool flocal_torus_test(const Vec& lam, const RootDatum& rd) {
    for (int i = 0; i < rd.n; ++i) {
        int v = rd.ip(lam, rd.simple(i));
        if (v % rd.sq(i) != 0 || v > 0) return false;
    }
    return true;
}

long long kostant_partitions(const Vec& mu, const RootDatum& rd) {
    if (!is_nonneg(mu)) return 0;
    const auto& pr = rd.positive_roots;
    std::map<std::pair<size_t, Vec>, long long> memo;
    std::function<long long(size_t, const Vec&)> go = [&](size_t k, const Vec& v) -> long long {
        if (is_zero(v)) return 1;
        if (k == pr.size()) return 0;
        auto key = std::make_pair(k, v);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long tot = 0;
        Vec w = v;
        while (is_nonneg(w)) {
            tot += go(k + 1, w);
            w = vsub(w, pr[k]);
        }
        memo.emplace(key, tot);
        return tot;
    };
    return go(0, mu);
}

}  // namespace qsym
