#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/rootdata.hpp"

namespace qsym {

// (index, power) pairs in the order the raising operators are applied.
using RaisingSequence = std::vector<std::pair<int, int>>;

struct ThetaData {
    RootDatum rd;
    std::vector<int> pi_theta;
    std::vector<int> d;
    LatticeMap theta;
    std::vector<int> p;
    std::vector<int> pi_star;
    std::vector<RaisingSequence> seq;  // filled for indices in pi_star
    std::vector<int> m;                // m(i) = sum of powers, for i in pi_star
    std::vector<bool> in_theta;

    bool in_star(int i) const;
    // Indices with p(i) = i whose m(i) is odd; empty for a genuine involution.
    std::vector<int> odd_fixed_points() const;
};

ThetaData validate_satake(const RootDatum& rd, const std::vector<int>& pi_theta, const std::vector<int>& d);

// Greedy extreme-vector path from a_{p(i)} up to Theta(-a_i) through pi_Theta strings.
RaisingSequence admissible_sequence(const ThetaData& th, int i);

// Sequence used for theta~(y_i): the stored one for i in pi_star, reversed for its partner.
RaisingSequence sequence_for(const ThetaData& th, int i);

Element theta_tilde_y(const ThetaData& th, const Algebra& alg, int i);
Vec theta_tilde_torus(const ThetaData& th, const Vec& lambda);

std::string sequence_str(const RaisingSequence& s);

}  // namespace qsym
