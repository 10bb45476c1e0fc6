#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilorbits/matrix.hpp"

namespace nilorbits {

// Square classes of k^x for k a p-adic field with p odd: k^x/(k^x)^2 has
// representatives {1, eps, pi, eps*pi} with eps a non-square unit and pi = p.
enum class SquareClass { One, Eps, Pi, EpsPi };

std::string to_string(SquareClass c);

// Class of an element of k^x modulo m-th powers, encoded as the pair
// (valuation mod m, index of the unit class among the canonical unit
// representatives for this m).
struct PowerClass {
  long m = 1;
  long val_mod = 0;
  long unit_index = 0;
  bool operator==(const PowerClass&) const = default;
};

// The field Q_p for an odd prime p, with exact arithmetic on rationals viewed
// as p-adic numbers. Valuations, square classes, the Hilbert symbol, and m-th
// power class bookkeeping all live here.
class LocalField {
 public:
  explicit LocalField(long p);

  long p() const { return p_; }
  // Canonical non-square unit: the least positive quadratic nonresidue when
  // -1 is a square (p = 1 mod 4), and exactly -1 otherwise.
  const Rat& epsilon() const { return eps_; }
  bool minus_one_is_square() const { return m1sq_; }
  Rat pi() const { return Rat(p_); }

  // p-adic valuation; val() requires a != 0, valuation() maps 0 to nullopt
  // (read: +infinity).
  long val(const Rat& a) const;
  std::optional<long> valuation(const Rat& a) const;
  Rat unit_part(const Rat& a) const;  // a * p^(-val(a))

  // Legendre symbol of the residue of a val-0 element, as +1/-1.
  int legendre(const Rat& unit) const;

  SquareClass square_class(const Rat& a) const;  // a != 0
  Rat class_representative(SquareClass c) const;
  static SquareClass square_class_mul(SquareClass a, SquareClass b);

  // Hilbert symbol (a, b) in {+1, -1}.
  int hilbert(const Rat& a, const Rat& b) const;
  int hilbert(SquareClass a, SquareClass b) const;

  // |R^x/(R^x)^m| and |k^x/(k^x)^m| = m * |R^x/(R^x)^m|.
  struct PowerClassCount {
    long unit_classes;
    long total;
  };
  PowerClassCount power_class_count(long m) const;

  PowerClass power_class(const Rat& a, long m) const;  // a != 0, m >= 1
  // Canonical unit representatives of R^x/(R^x)^m: the first integers
  // coprime to p, in increasing order, that fall in pairwise distinct
  // classes. Index 0 is always the class of 1.
  const std::vector<long>& unit_class_reps(long m) const;
  // Canonical representatives of k^x/(k^x)^m: p^a * u over a in [0, m) and
  // the canonical unit representatives.
  std::vector<Rat> class_reps(long m) const;
  bool same_unit_class(const Rat& u, const Rat& v, long m) const;
  Rat representative(const PowerClass& c) const;  // p^val_mod * unit rep

  // Residue of a val-0 element modulo p^k, in [0, p^k).
  long residue(const Rat& unit, long modulus) const;

  // True when p is large enough for the facet correspondence at Coxeter
  // number h, i.e. p > 3(h-1).
  bool coxeter_ok(long h) const { return p_ > 3 * (h - 1); }

 private:
  bool unit_is_mth_power(const Rat& w, long m) const;
  const std::set<long>& mth_power_residues(long m) const;  // p | m only

  long p_;
  Rat eps_;
  bool m1sq_;
  mutable std::map<long, std::vector<long>> unit_reps_;
  mutable std::map<long, std::set<long>> power_residues_;
};

}  // namespace nilorbits
