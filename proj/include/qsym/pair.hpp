#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/involution.hpp"

namespace qsym {

struct PairParams {
    std::map<int, QRat> c;  // theta~(y_r) -> c^-1 theta~(y_r) for r with r != p(r)
    std::map<int, QRat> s;  // B_i -> B_i + s_i t_i for i in S
    bool allow_any_s = false;  // permit s on S_1 outside S (used to exhibit the obstruction)
};

struct PairPresentation {
    ThetaData th;
    std::shared_ptr<const Algebra> alg;
    PairParams params;
    std::vector<Element> B;
    std::vector<Vec> t_theta;  // lattice basis of {lambda : Theta lambda = lambda}
    std::vector<int> S;

    const Algebra& a() const { return *alg; }
    bool in_t_theta(const Vec& lambda) const;
    // Normal word of M+ T_Theta: no y, x-letters in pi_Theta, torus in T_Theta.
    bool in_m_plus_t(const NormalWord& w) const;
    Element b_word(const Word& J) const;
    std::string b_word_str(const Word& J) const;
    QRat counit_expected(int i) const;  // s_i, or 0
};

std::vector<int> nonstandard_S1_set(const ThetaData& th);
std::vector<int> nonstandard_S_set(const ThetaData& th);

PairPresentation build_pair(const ThetaData& th, std::shared_ptr<const Algebra> alg, const PairParams& params = {});

struct CertificateReport {
    int index = 0;
    bool ok = true;
    // remainder Delta(B_i) - t_i (x) B_i grouped by right factor: (right word, left element)
    std::vector<std::pair<NormalWord, Element>> parts;
    std::vector<std::string> violations;
};
CertificateReport coideal_certificate(const PairPresentation& pr, int i);

struct Relation {
    int i = 0, j = 0;
    std::string formal;  // F_ij(B_i, B_j)
    Element lhs;         // F_ij(B_i, B_j) in normal form
    std::vector<std::pair<Word, Element>> defect;  // sum over J of B_J c_J, c_J in M+ T_Theta
    bool degenerate = false;
    std::string defect_str(const PairPresentation& pr) const;
};
Relation serre_defect(const PairPresentation& pr, int i, int j);

struct Lemma73Report {
    bool ok = true;
    Vec lambda;
    Element projected;  // P_lambda(Y_ij)
    Element zero_zero;  // pi_{0,0}(P_lambda(Y_ij))
    std::vector<std::string> violations;
};
Lemma73Report lemma73_check(const PairPresentation& pr, int i, int j);

// x_j B_i = q^{-(a_j,a_i)} B_i x_j and torus conjugation on T_Theta, plus the M-commutators
// t_j^-1 x_j B_i - B_i t_j^-1 x_j = delta_ij (t_j - t_j^-1)/(q_j - q_j^-1). Returns failures.
std::vector<std::string> commutation_failures(const PairPresentation& pr);

// Y_{I,j} = (ad y_I) y_j t_j  or  X_{I,j} = (ad_r x_I) x_j t_j^-1
Element parabolic_generator(const Algebra& alg, const std::vector<int>& pi_prime, const std::vector<int>& I, int j,
                            Side side);
// Coproduct shape of Y_{I,j} (side y) or X_{I,j} (side x); returns failures.
std::vector<std::string> parabolic_shape_failures(const Algebra& alg, const std::vector<int>& pi_prime,
                                                  const std::vector<int>& I, int j, Side side);

}  // namespace qsym
