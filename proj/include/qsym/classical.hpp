#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qsym/involution.hpp"
#include "qsym/linalg.hpp"
#include "qsym/pair.hpp"

namespace qsym {

using QMat = Matrix<mpq_class>;
using QVec = std::vector<mpq_class>;

// Classical g over Q for Cartan data whose components are all of type A, realized as
// block-diagonal traceless matrices. Basis: e_beta, f_beta over positive roots, then h_1..h_n.
class ClassicalLie {
public:
    explicit ClassicalLie(const RootDatum& rd);

    const RootDatum& root() const { return rd_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int size() const { return N_; }
    const QMat& basis(int k) const { return basis_[k]; }
    const QMat& e(int i) const { return basis_[e_index_[i]]; }
    const QMat& f(int i) const { return basis_[f_index_[i]]; }
    const QMat& h(int i) const { return basis_[h_offset_ + i]; }
    QMat h_of(const Vec& lambda) const;  // sum lambda_k h_k

    static QMat bracket(const QMat& a, const QMat& b);
    QVec coords(const QMat& m) const;  // throws ValidationError when m is not in g
    QMat from_coords(const QVec& v) const;
    std::string str(const QVec& v) const;

private:
    RootDatum rd_;
    int N_ = 0;
    std::vector<QMat> basis_;
    std::vector<std::string> names_;
    std::vector<int> e_index_, f_index_;
    int h_offset_ = 0;
    std::vector<std::pair<int, int>> root_cell_;  // matrix cell of e_beta
};

struct ClassicalInvolution {
    QMat map;  // column k = coordinates of theta(basis k)
    bool automorphism = false;
    bool involution = false;
    QVec apply(const QVec& v) const;
};

// theta on g from the q = 1 form of theta~: f_i -> iterated brackets along the raising
// sequence, fixed on m, extended to e_i by [theta e_i, theta f_i] = h_{Theta a_i}.
ClassicalInvolution classical_theta(const ClassicalLie& g, const ThetaData& th);

struct ClassicalImage {
    mpq_class scalar;
    QVec lie;
};
// q -> 1 image of an element whose words evaluate to a Lie element plus a constant.
ClassicalImage specialize_element(const ClassicalLie& g, const Element& a);

struct SpecializationReport {
    struct Item {
        std::string name;
        std::string image;
        bool poles_ok = true;
        bool in_g = true;
        bool fixed = false;
        bool tip_ok = true;
    };
    std::vector<Item> items;
    bool theta_automorphism = false;
    bool theta_involution = false;
    bool ok = false;
};
SpecializationReport specialize_pair(const PairPresentation& pr);

}  // namespace qsym
