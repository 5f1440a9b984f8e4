#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qsym {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

int ht(const Vec& v);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Vec& a, int k);
bool is_zero(const Vec& v);
bool is_nonneg(const Vec& v);  // element of Q^+ (coordinatewise >= 0)
std::string vec_str(const Vec& v);

struct RootDatum {
    std::string label;
    int n = 0;
    Mat cartan;  // a_ij = 2(a_i,a_j)/(a_i,a_i)
    Mat form;    // (a_i,a_j), short roots have squared length 2
    std::vector<Vec> positive_roots;
    std::vector<std::vector<int>> components;

    Vec simple(int i) const;
    int sq(int i) const { return form[i][i]; }
    int ip(const Vec& a, const Vec& b) const;
    int coroot_pairing(const Vec& beta, int i) const;  // <beta, a_i^vee>
    Vec reflect(int i, const Vec& v) const;
    bool is_root(const Vec& v) const;
    int root_index(const Vec& v) const;  // index into positive_roots or -1

    // Weights are integer vectors in fundamental-weight coordinates.
    Vec root_to_weight(const Vec& beta) const;
    std::vector<mpq_class> weight_to_root(const Vec& m) const;  // rational root coordinates
    int weight_root_ip(const Vec& m, const Vec& beta) const;   // (lambda, beta)
    mpq_class weight_ip(const Vec& m1, const Vec& m2) const;
    bool is_dominant(const Vec& m) const;
    Vec lowest_weight(const Vec& m) const;  // w0(lambda) via descent, fundamental coords
    mpz_class weyl_dimension(const Vec& m) const;
};

RootDatum cartan_init(const std::string& label);
RootDatum cartan_from_matrix(const Mat& a, const std::string& label = "custom");
RootDatum cartan_product(const std::vector<RootDatum>& parts);

// Integer n x n matrix acting on root coordinates: column j is the image of a_j.
struct LatticeMap {
    Mat m;
    Vec apply(const Vec& v) const;
    LatticeMap compose(const LatticeMap& o) const;  // this after o
    bool operator==(const LatticeMap& o) const { return m == o.m; }
    static LatticeMap identity(int n);
};

// Longest element of the parabolic Weyl group generated by the simple
// reflections in J, as a lattice map; obtained by greedy descent.
LatticeMap parabolic_longest(const RootDatum& rd, const std::vector<int>& J);

bool is_diagram_automorphism(const RootDatum& rd, const std::vector<int>& d);
std::vector<int> diagram_flip(const RootDatum& rd);  // throws when no canonical flip exists

// Theta = -w0 d. Validates the lattice conditions; indices are 0-based.
LatticeMap theta_lattice(const RootDatum& rd, const std::vector<int>& pi_theta,
                         const std::vector<int>& d);

// Simple roots fixed by Theta.
std::vector<int> theta_fixed_simple(const RootDatum& rd, const LatticeMap& th);

// Satake permutation from Theta(-a_i) - a_{p(i)} in Q^+(pi_Theta); p(i) = i on pi_Theta.
std::vector<int> satake_permutation(const RootDatum& rd, const LatticeMap& th);

// Integer basis (columns) of the kernel of an integer matrix, via unimodular column reduction.
std::vector<Vec> integer_kernel(const Mat& a);

struct RestrictedComponent {
    std::string type;  // A1, BC1, A2, B2, ...
    int rank = 0;
    std::vector<Vec> simple;  // doubled restrictions a - Theta(a) of simple restricted roots
};

struct RestrictedSystem {
    std::vector<Vec> eigen_basis;  // integer basis of ker(Theta + id)
    // Each entry is a - Theta(a) for a in Delta (twice the restriction), kept in
    // root coordinates and in eigen_basis coordinates; distinct, both signs.
    std::vector<Vec> roots;
    std::vector<Vec> coords;
    std::vector<RestrictedComponent> components;
    std::vector<std::pair<int, int>> variation1_pairs;  // {r, p(r)}, r < p(r), 0-based
    std::string type_label() const;
    bool contains(const Vec& doubled) const;
};

RestrictedSystem restricted_roots(const RootDatum& rd, const LatticeMap& th);

// Cartan-matrix classification of a connected finite-type Dynkin diagram.
std::string classify_cartan(const Mat& a);

bool spherical_weight_test(const Vec& lambda_fund, const RootDatum& rd, const LatticeMap& th);
bool flocal_torus_test(const Vec& lambda_root, const RootDatum& rd);
long long kostant_partitions(const Vec& mu, const RootDatum& rd);

}  // namespace qsym
