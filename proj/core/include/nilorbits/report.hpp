#pragma once

#include <string>

#include "nilorbits/debacker.hpp"

namespace nilorbits {

// Stable textual orbit ids, e.g. "sl:[2,2]:d=5" and
// "sp:[2,2]:Q2=det:1,hasse:+1".
std::string form_class_str(const LocalField& k, const FormInvariants& inv);
std::string sl_orbit_id(const SLOrbit& o);
std::string sp_orbit_id(const LocalField& k, const SpOrbit& o);

// Dimension of the adjoint orbit of Jordan type lambda over the algebraic
// closure, from the conjugate partition.
long sl_orbit_dim(int n, const Partition& lambda);
long sp_orbit_dim(const Partition& lambda);

// Closed forms for the facet dimension.
int sl_facet_dim(const Partition& lambda);
int sp_facet_dim(const LocalField& k, const SpOrbit& o);

// Orbit listing with facet data, as sorted-key JSON / markdown.
std::string orbits_json(const LocalField& k, GroupType group, int n, const RScalar& r,
                        unsigned long seed);
std::string orbits_markdown(const LocalField& k, GroupType group, int n, const RScalar& r,
                            unsigned long seed);

// Reference tables, recomputed.
std::string orbit_table_markdown(const LocalField& k, GroupType group, int n);
std::string numforms_markdown(const LocalField& k);
std::string anisotropic_markdown(const LocalField& k);
std::string hilbert_markdown(const LocalField& k);
std::string orbit_table_json(const LocalField& k, GroupType group, int n);
std::string numforms_json(const LocalField& k);
std::string anisotropic_json(const LocalField& k);
std::string hilbert_json(const LocalField& k);

// Self-check battery; one [PASS]/[FAIL] line per suite in the log.
struct VerifyReport {
  int failures = 0;
  std::string log;
};

VerifyReport verify_all(const LocalField& k, unsigned long seed = 1);

}  // namespace nilorbits
