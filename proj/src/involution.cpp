#include "qsym/involution.hpp"

#include <algorithm>

#include "qsym/errors.hpp"

namespace qsym {

bool ThetaData::in_star(int i) const { return std::find(pi_star.begin(), pi_star.end(), i) != pi_star.end(); }

std::vector<int> ThetaData::odd_fixed_points() const {
    std::vector<int> out;
    for (int i : pi_star)
        if (p[i] == i && m[i] % 2 != 0) out.push_back(i);
    return out;
}

RaisingSequence admissible_sequence(const ThetaData& th, int i) {
    const RootDatum& rd = th.rd;
    if (i < 0 || i >= rd.n || th.in_theta[i]) throw ArgumentError("admissible_sequence needs an index outside pi_Theta");
    Vec target = th.theta.apply(vscale(rd.simple(i), -1));
    Vec beta = rd.simple(th.p[i]);
    RaisingSequence out;
    while (beta != target) {
        bool moved = false;
        for (int j : th.pi_theta) {
            int k = -rd.coroot_pairing(beta, j);
            if (k <= 0) continue;
            Vec next = rd.reflect(j, beta);
            if (!is_nonneg(vsub(target, next))) continue;
            out.emplace_back(j, k);
            beta = next;
            moved = true;
            break;
        }
        if (!moved)
            throw ValidationError("Theta(-a_" + std::to_string(i + 1) + ") is not reachable from a_" +
                                  std::to_string(th.p[i] + 1) + " by pi_Theta strings");
    }
    return out;
}

ThetaData validate_satake(const RootDatum& rd, const std::vector<int>& pi_theta, const std::vector<int>& d) {
    ThetaData th;
    th.rd = rd;
    th.pi_theta = pi_theta;
    std::sort(th.pi_theta.begin(), th.pi_theta.end());
    th.d = d;
    th.theta = theta_lattice(rd, th.pi_theta, d);
    th.in_theta.assign(rd.n, false);
    for (int j : th.pi_theta) th.in_theta[j] = true;
    th.p = satake_permutation(rd, th.theta);
    th.seq.assign(rd.n, {});
    th.m.assign(rd.n, 0);
    for (int i = 0; i < rd.n; ++i) {
        if (th.in_theta[i] || th.p[i] < i) continue;
        th.pi_star.push_back(i);
        th.seq[i] = admissible_sequence(th, i);
        for (auto [j, k] : th.seq[i]) th.m[i] += k;
        Vec sum = rd.simple(th.p[i]);
        for (auto [j, k] : th.seq[i]) sum = vadd(sum, vscale(rd.simple(j), k));
        if (sum != th.theta.apply(vscale(rd.simple(i), -1)))
            throw InternalError("admissible sequence misses its target weight");
    }
    return th;
}

RaisingSequence sequence_for(const ThetaData& th, int i) {
    if (i < 0 || i >= th.rd.n || th.in_theta[i]) throw ArgumentError("no sequence for an index in pi_Theta");
    if (th.in_star(i)) return th.seq[i];
    RaisingSequence r = th.seq[th.p[i]];
    std::reverse(r.begin(), r.end());
    return r;
}

Element theta_tilde_y(const ThetaData& th, const Algebra& alg, int i) {
    if (i < 0 || i >= th.rd.n) throw ArgumentError("index out of range");
    if (th.in_theta[i]) throw ArgumentError("theta~(y_i) = y_i for a_i in pi_Theta; no lift is built there");
    int pi = th.p[i];
    Element b = alg.mul(alg.t(pi, -1), alg.x(pi));
    for (auto [j, k] : sequence_for(th, i)) b = alg.adr(alg.divided_power(j, k, Side::x), b);
    if (!th.in_star(i) && th.m[pi] % 2 != 0) b = -b;
    auto w = alg.weight(b);
    if (b.is_zero() || !w || *w != vscale(th.theta.apply(th.rd.simple(i)), -1))
        throw InternalError("theta~(y_" + std::to_string(i + 1) + ") does not have weight -Theta(a_i)");
    return b;
}

Vec theta_tilde_torus(const ThetaData& th, const Vec& lambda) { return th.theta.apply(vscale(lambda, -1)); }

std::string sequence_str(const RaisingSequence& s) {
    std::string ix, pw;
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) {
            ix += ",";
            pw += ",";
        }
        ix += std::to_string(s[k].first + 1);
        pw += std::to_string(s[k].second);
    }
    return "(" + ix + ") (" + pw + ")";
}

}  // namespace qsym
