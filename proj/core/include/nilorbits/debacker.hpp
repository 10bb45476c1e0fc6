#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilorbits/apartment.hpp"
#include "nilorbits/lie.hpp"
#include "nilorbits/sl_orbits.hpp"
#include "nilorbits/sp_orbits.hpp"

namespace nilorbits {

// A nilpotent orbit together with the facet its standard triple singles out
// at level r: the triple satisfies X in g_{x,r}, H in g_{x,0}, Y in g_{x,-r}
// for every x in the facet.
struct OrbitFacetDatum {
  Ambient amb;
  RFacet facet;
  LieTriple lift;
  std::vector<Rat> adapted;
};

OrbitFacetDatum sl_facet(const LocalField& k, const SLOrbit& o, const RScalar& r,
                         unsigned long seed = 1);
OrbitFacetDatum sp_facet(const LocalField& k, const SpOrbit& o, const RScalar& r,
                         unsigned long seed = 1);

struct Interval {
  std::optional<RScalar> lower, upper;
  bool operator==(const Interval&) const = default;
};

// The set of apartment points x with X in g_{x,r}, H in g_{x,0}, Y in
// g_{x,-r}, described by one interval per positive root.
struct ApartmentSlice {
  bool empty = false;
  std::map<Root, Interval> constraints;
  int dim = -1;
  ApartmentPoint witness;
};

ApartmentSlice apartment_slice(const Ambient& amb, const LocalField& k, const LieTriple& t,
                               const RScalar& r, unsigned long seed = 1);

ApartmentSlice translate_slice(const ApartmentSlice& s, const std::vector<RScalar>& delta);

// Verifies that the slice at level r is the slice at level 0 translated by
// (r/2) times the coweight picked out by H.
bool shift_check(const Ambient& amb, const LocalField& k, const LieTriple& t, const RScalar& r,
                 unsigned long seed = 1);

// Normal form for a facet of SL_n given by equalities on the simple roots
// e_i - e_{i+1}: all offsets are cleared except possibly on the last simple
// root, where the class of the accumulated offset survives modulo gcd of the
// Jordan type.
struct SLAssociateClass {
  Partition lambda;
  std::vector<AffineRoot> equalities;
  long k_residue = 0;
};

SLAssociateClass sl_associate_normal_form(int n, const std::vector<AffineRoot>& equalities);

// Random search over X + g_{x,r+} at the facet witness: every nilpotent
// element of the coset must have Jordan type dominating that of X.
struct CosetProbeResult {
  int samples = 0;
  int skipped = 0;
  int violations = 0;
};

CosetProbeResult coset_min_probe(const Ambient& amb, const LocalField& k, const LieTriple& t,
                                 const RFacet& facet, const RScalar& r, int samples,
                                 unsigned long seed = 1);

}  // namespace nilorbits
