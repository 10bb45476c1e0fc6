#pragma once

#include <string>
#include <vector>

#include "nilorbits/local_field.hpp"
#include "nilorbits/matrix.hpp"

namespace nilorbits {

// Nondegenerate diagonal quadratic form over Q_p: entries are the nonzero
// diagonal coefficients.
struct QuadraticForm {
  std::vector<Rat> diag;

  explicit QuadraticForm(std::vector<Rat> d);
  QuadraticForm() = default;
  int dim() const { return static_cast<int>(diag.size()); }
};

// Complete isometry invariants: dimension, determinant square class, Hasse
// invariant (product of Hilbert symbols over coefficient pairs i < j).
struct FormInvariants {
  int dim = 0;
  SquareClass det = SquareClass::One;
  int hasse = 1;

  bool operator==(const FormInvariants&) const = default;
  std::string str() const;
};

FormInvariants invariants(const LocalField& k, const QuadraticForm& q);

// Symmetric congruence diagonalization of a nondegenerate Gram matrix.
// Throws on non-symmetric or singular input.
QuadraticForm diagonalize(const Mat& gram);

bool isometric(const FormInvariants& a, const FormInvariants& b);
bool isometric(const LocalField& k, const QuadraticForm& a, const QuadraticForm& b);

// Invariants of the orthogonal direct sum, computed from invariants alone.
FormInvariants direct_sum_invariants(const LocalField& k, const FormInvariants& a,
                                     const FormInvariants& b);

// Invariants of m hyperbolic planes.
FormInvariants hyperbolic_invariants(const LocalField& k, int m);

// The 15 anisotropic classes: diagonal representatives, dimensions 1 to 4.
std::vector<QuadraticForm> anisotropic_table(const LocalField& k);

// Witt decomposition data: q = (hyperbolic plane)^m + anisotropic kernel.
struct WittParts {
  int hyperbolic_count = 0;
  FormInvariants kernel;
};

// Decomposes by invariant search over the 16 candidate kernels (the zero
// form plus the anisotropic table). Throws when the invariants do not come
// from any form.
WittParts anisotropic_kernel(const LocalField& k, const FormInvariants& q);
WittParts anisotropic_kernel(const LocalField& k, const QuadraticForm& q);

// Diagonal of the anisotropic representative for a kernel class (empty for
// dimension 0).
std::vector<Rat> anisotropic_representative(const LocalField& k, const FormInvariants& kernel);

// Minimal Gram representative: m blocks [[0,1],[1,0]] followed by the
// anisotropic diagonal.
Mat minimal_representative(const LocalField& k, const FormInvariants& q);

// All isometry classes in the given dimension, as invariants, deduplicated
// and sorted by (det class, hasse).
std::vector<FormInvariants> enumerate_classes(const LocalField& k, int dim);

}  // namespace nilorbits
