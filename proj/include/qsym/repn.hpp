#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/linalg.hpp"
#include "qsym/pair.hpp"

namespace qsym {

using SparseVec = std::map<int, QRat>;
using SparseMat = std::vector<SparseVec>;  // column k = image of basis vector k

struct WeightSpace {
    Vec nu;                    // weight lambda - nu, nu in root coordinates
    std::vector<Word> verma;   // irreducible y-words of content nu
    Matrix<QRat> gram;         // Verma Gram block
    std::vector<int> pivots;   // indices into verma spanning L
    Matrix<QRat> sub_inverse;  // inverse Gram on the pivots
    int offset = 0;            // first L-basis index
};

class SimpleModule {
public:
    SimpleModule(std::shared_ptr<const Algebra> alg, const Vec& lambda_fund, long long max_dim = 4096);

    const Algebra& algebra() const { return *alg_; }
    const Vec& highest_weight() const { return lambda_; }
    int dim() const { return dim_; }
    const std::vector<WeightSpace>& spaces() const { return spaces_; }
    const WeightSpace& space_of(int basis_index) const;
    std::string basis_label(int k) const;  // y-word applied to v

    const SparseMat& x(int i) const { return x_[i]; }
    const SparseMat& y(int i) const { return y_[i]; }
    QRat torus_eigenvalue(const Vec& mu, const Vec& nu) const;  // q^{(mu, lambda - nu)}

    SparseVec apply(const Element& a, const SparseVec& v) const;
    SparseMat matrix(const Element& a) const;
    Matrix<QRat> gram() const;  // block-diagonal form on the L basis

private:
    std::shared_ptr<const Algebra> alg_;
    Vec lambda_;
    int dim_ = 0;
    std::vector<WeightSpace> spaces_;
    std::map<Vec, int> space_index_;
    std::vector<SparseMat> x_, y_;
    std::vector<int> owner_;  // basis index -> space
    std::map<std::pair<int, Word>, WordPoly> x_memo_;
    std::map<Vec, Matrix<QRat>> verma_gram_;
    std::map<Vec, std::vector<Word>> verma_words_;

    const std::vector<Word>& words(const Vec& nu);
    const Matrix<QRat>& verma_gram(const Vec& nu);
    int word_pos(const Vec& nu, const Word& w);
    WordPoly y_act(int i, const WordPoly& v) const;
    const WordPoly& x_act_word(int i, const Word& w);
    WordPoly x_act(int i, const WordPoly& v);
    SparseVec reduce(const Vec& nu, const WordPoly& v);
    SparseVec apply_word(const NormalWord& w, const SparseVec& v) const;
};

Matrix<QRat> to_dense(const SparseMat& m, int rows);

struct InvariantReport {
    int dimension = 0;
    std::vector<std::vector<QRat>> basis;
};
InvariantReport invariants(const SimpleModule& mod, const PairPresentation& pr);

struct PositivityReport {
    bool ok = true;
    std::vector<std::pair<Vec, std::vector<QRat>>> norms;  // per weight space nu
    std::vector<std::string> failures;
};
PositivityReport shapovalov_positivity(const SimpleModule& mod);

// Exponents e_i with c_i = s^{e_i}: x_i -> c_i x_i, y_i -> c_i^-1 y_i, such that kappa sends each
// rescaled B'_i to a scalar multiple of some B'_j tau, tau in T_Theta.
std::optional<std::vector<int>> find_real_form_scaling(const PairPresentation& pr, int bound = 8);
Element rescale(const Algebra& alg, const Element& a, const std::vector<int>& exponents);
std::vector<Element> rescaled_generators(const PairPresentation& pr, const std::vector<int>& exponents);

struct UnitaryReport {
    bool contravariant = true;
    bool positive = true;
    bool symmetric = true;
    bool ok() const { return contravariant && positive && symmetric; }
};
UnitaryReport unitary_check(const SimpleModule& mod, const PairPresentation& pr, const std::vector<int>& exponents);

struct ReducibilityReport {
    int submodule_dim = 0;
    int complement_dim = 0;
    bool complement_stable = false;
    bool direct_sum = false;
};
// W = B-submodule generated by the invariants; checks W-perp is B-stable and W + W-perp = L.
ReducibilityReport reducibility_witness(const SimpleModule& mod, const PairPresentation& pr,
                                        const std::vector<int>& exponents);

}  // namespace qsym
