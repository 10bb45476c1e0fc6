#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorbits/local_field.hpp"
#include "nilorbits/matrix.hpp"

namespace nilorbits {

// Element of Q + Q*sqrt(2), ordered exactly.
struct RScalar {
  Rat q;
  Rat c;

  RScalar() = default;
  RScalar(Rat rational, Rat sqrt2_coeff) : q(std::move(rational)), c(std::move(sqrt2_coeff)) {}
  explicit RScalar(long rational) : q(rational) {}

  int sign() const;
  long floor() const;
  std::string str() const;

  RScalar operator-() const { return {-q, -c}; }
  RScalar operator+(const RScalar& o) const { return {q + o.q, c + o.c}; }
  RScalar operator-(const RScalar& o) const { return {q - o.q, c - o.c}; }
  RScalar operator*(const Rat& s) const { return {q * s, c * s}; }
  bool operator==(const RScalar& o) const { return q == o.q && c == o.c; }
  bool operator<(const RScalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const RScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const RScalar& o) const { return o < *this; }
  bool operator>=(const RScalar& o) const { return o <= *this; }
};

enum class GroupType { SL, Sp };

struct Ambient {
  GroupType group = GroupType::SL;
  int n = 1;

  int matrix_size() const { return group == GroupType::SL ? n : 2 * n; }
  int apartment_dim() const { return group == GroupType::SL ? n - 1 : n; }
  bool operator==(const Ambient&) const = default;
};

// Roots of the diagonal torus in coordinates e_1..e_n.  Diff is e_i - e_j,
// Sum is e_i + e_j (2e_i when i == j), NegSum is -e_i - e_j.  Sum and NegSum
// occur only for Sp and are stored with i <= j.
enum class RootKind { Diff, Sum, NegSum };

struct Root {
  RootKind kind = RootKind::Diff;
  int i = 0;
  int j = 0;

  static Root diff(int i, int j) { return {RootKind::Diff, i, j}; }
  static Root sum(int i, int j) { return i <= j ? Root{RootKind::Sum, i, j} : Root{RootKind::Sum, j, i}; }
  static Root neg_sum(int i, int j) {
    return i <= j ? Root{RootKind::NegSum, i, j} : Root{RootKind::NegSum, j, i};
  }

  Root negated() const;
  bool positive() const;
  std::string str() const;
  auto operator<=>(const Root&) const = default;
};

struct AffineRoot {
  Root root;
  long offset = 0;
  bool operator==(const AffineRoot&) const = default;
};

struct ApartmentPoint {
  std::vector<RScalar> x;
};

std::vector<Root> all_roots(const Ambient& amb);
RScalar eval_root(const Root& root, const ApartmentPoint& pt);
// The root as a linear functional on the n coordinates.
std::vector<Rat> root_functional(int n, const Root& root);

// Splits a Lie algebra element into torus part (diagonal coordinates) and
// root components.
struct RootDecomposition {
  std::vector<Rat> torus;
  std::map<Root, Rat> components;
};

RootDecomposition root_decompose(const Ambient& amb, const Mat& m);
Mat reassemble(const Ambient& amb, const RootDecomposition& d);
Mat root_space_matrix(const Ambient& amb, const Root& root);

// Membership test for the Moy-Prasad lattice g_{x,level} (strict gives
// g_{x,level+}).
bool moy_prasad_contains(const Ambient& amb, const LocalField& k, const Mat& m,
                         const ApartmentPoint& pt, const RScalar& level, bool strict = false);

RScalar default_r();
RScalar r_from_mult(const Rat& mult);

struct RFacet {
  Ambient amb;
  std::vector<AffineRoot> equalities;
  int dim = 0;
  ApartmentPoint witness;
};

// Builds the facet at level r cut out by the given affine-root equalities,
// with a witness point at which exactly those affine roots take the value r.
RFacet facet_from_equalities(const Ambient& amb, const std::vector<AffineRoot>& equalities,
                             const RScalar& r, unsigned long seed = 1);

}  // namespace nilorbits
