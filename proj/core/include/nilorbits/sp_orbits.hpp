#pragma once

#include <utility>
#include <vector>

#include "nilorbits/lie.hpp"
#include "nilorbits/local_field.hpp"
#include "nilorbits/matrix.hpp"
#include "nilorbits/partition.hpp"
#include "nilorbits/quadratic_form.hpp"

namespace nilorbits {

// Rational nilpotent Sp_2n(k)-orbit: a symplectic partition of 2n together
// with, for each even part j, the isometry class of the quadratic form the
// symplectic pairing induces on the lowest weight space of the j-isotypic
// component. The form for even j has rank mult(j).
struct SpOrbit {
  Partition lambda;
  // (even part j, form class), ascending in j; one entry per even part with
  // nonzero multiplicity.
  std::vector<std::pair<int, FormInvariants>> forms;

  bool operator==(const SpOrbit&) const = default;
};

// Start offsets s_j = sum_{j' < j} (1/2) j' mult(j') of the isotypic blocks
// in the basis (p_1..p_n, q_1..q_n).
int sp_block_start(const Partition& lambda, int j);

// All rational nilpotent orbits of Sp_2n(k).
std::vector<SpOrbit> enumerate_sp_orbits(const LocalField& k, int n);

// Block representative in sp(2n): odd parts contribute paired Jordan blocks,
// even parts a twisted block carrying the minimal Gram matrix of the form.
Mat sp_representative(const LocalField& k, const SpOrbit& o);

// Lie triple through sp_representative, all three members in sp(2n).
LieTriple sp_lie_triple(const LocalField& k, const SpOrbit& o);

// Recovers, for each even part j, the invariants of the form
// (v, w) -> <v, X^(j-1) w> on the lowest weight space
// L(j) = ker(Y) ∩ ker(H + (j-1)I), via exact kernel computation.
std::vector<std::pair<int, FormInvariants>> recover_forms(const LocalField& k,
                                                          const LieTriple& t);

// Classifies a nilpotent element of sp(2n); inverse of sp_representative up
// to orbit equality.
SpOrbit classify_sp(const LocalField& k, const Mat& x);

}  // namespace nilorbits
