#pragma once

#include <string>
#include <vector>

#include "nilorbits/lie.hpp"
#include "nilorbits/local_field.hpp"
#include "nilorbits/matrix.hpp"
#include "nilorbits/partition.hpp"

namespace nilorbits {

// Rational nilpotent SL_n(k)-orbit: a Jordan type lambda together with the
// class of the twist d modulo gcd(lambda)-th powers. When gcd(lambda) = 1 the
// class is trivial and the orbit is the full GL intersection.
struct SLOrbit {
  Partition lambda;
  long m = 1;          // gcd(lambda)
  PowerClass d_class;  // class of d in k^x/(k^x)^m
  Rat d = 1;           // canonical representative of that class

  bool operator==(const SLOrbit& o) const { return lambda == o.lambda && d_class == o.d_class; }
};

// Row indices i (1-based) carrying the superdiagonal entries of the Jordan
// matrix of lambda: {1..n} minus the partial sums of lambda.
std::vector<int> sl_superdiagonal_support(const Partition& lambda);

// All rational nilpotent orbits of SL_n(k): for each partition of n, one
// orbit per class of k^x/(k^x)^gcd(lambda).
std::vector<SLOrbit> enumerate_sl_orbits(const LocalField& k, int n);

// Representative J_lambda * D(d) with D(d) = diag(1, ..., 1, d).
Mat sl_representative(const SLOrbit& o);

// Lie triple (D(d)^(-1) Y_lambda, H_lambda, J_lambda D(d)) through the
// representative.
LieTriple sl_lie_triple(const SLOrbit& o);

// Classifies a nilpotent X: Jordan type from rank data, twist class from the
// determinant of a Jordan basis change. Inverse of sl_representative up to
// orbit equality.
SLOrbit classify_sl(const LocalField& k, const Mat& x);

}  // namespace nilorbits
