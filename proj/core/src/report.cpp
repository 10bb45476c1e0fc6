#include "nilorbits/report.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace nilorbits {

using json = nlohmann::json;

std::string form_class_str(const LocalField& k, const FormInvariants& inv) {
  return "det:" + k.class_representative(inv.det).get_str() +
         ",hasse:" + (inv.hasse > 0 ? "+1" : "-1");
}

std::string sl_orbit_id(const SLOrbit& o) {
  return "sl:" + o.lambda.str() + ":d=" + o.d.get_str();
}

std::string sp_orbit_id(const LocalField& k, const SpOrbit& o) {
  std::string id = "sp:" + o.lambda.str();
  for (const auto& [j, inv] : o.forms)
    id += ":Q" + std::to_string(j) + "=" + form_class_str(k, inv);
  return id;
}

long sl_orbit_dim(int n, const Partition& lambda) {
  long s = 0;
  for (int c : lambda.conjugate()) s += static_cast<long>(c) * c;
  return static_cast<long>(n) * n - s;
}

long sp_orbit_dim(const Partition& lambda) {
  long n2 = lambda.sum();
  long s = 0;
  for (int c : lambda.conjugate()) s += static_cast<long>(c) * c;
  long odd = 0;
  for (int part : lambda.parts)
    if (part % 2 == 1) ++odd;
  return (n2 * (n2 + 1) - s - odd) / 2;
}

int sl_facet_dim(const Partition& lambda) { return lambda.num_parts() - 1; }

int sp_facet_dim(const LocalField& k, const SpOrbit& o) {
  int aniso = 0;
  for (const auto& [j, inv] : o.forms) aniso += anisotropic_kernel(k, inv).kernel.dim;
  return (o.lambda.num_parts() - aniso) / 2;
}

namespace {

json facet_json(const RFacet& f) {
  json eqs = json::array();
  for (const AffineRoot& e : f.equalities)
    eqs.push_back(json{{"root", e.root.str()}, {"offset", e.offset}});
  return json{{"equalities", eqs}, {"dim", f.dim}};
}

json orbits_doc(const LocalField& k, GroupType group, int n, const RScalar& r,
                unsigned long seed) {
  json doc;
  doc["field"] = json{{"p", k.p()}, {"epsilon", k.epsilon().get_str()}};
  doc["group"] = group == GroupType::SL ? "sl" : "sp";
  doc["n"] = n;
  json orbits = json::array();
  if (group == GroupType::SL) {
    for (const SLOrbit& o : enumerate_sl_orbits(k, n)) {
      OrbitFacetDatum d = sl_facet(k, o, r, seed);
      json entry;
      entry["id"] = sl_orbit_id(o);
      entry["partition"] = o.lambda.parts;
      entry["class"] = json{{"d", o.d.get_str()}, {"m", o.m}};
      entry["facet"] = facet_json(d.facet);
      entry["triple_ok"] = is_lie_triple(d.lift);
      orbits.push_back(std::move(entry));
    }
  } else {
    for (const SpOrbit& o : enumerate_sp_orbits(k, n)) {
      OrbitFacetDatum d = sp_facet(k, o, r, seed);
      json entry;
      entry["id"] = sp_orbit_id(k, o);
      entry["partition"] = o.lambda.parts;
      json cls = json::array();
      for (const auto& [j, inv] : o.forms)
        cls.push_back(json{{"j", j},
                           {"dim", inv.dim},
                           {"det", k.class_representative(inv.det).get_str()},
                           {"hasse", inv.hasse}});
      entry["class"] = std::move(cls);
      entry["facet"] = facet_json(d.facet);
      entry["triple_ok"] = is_lie_triple(d.lift);
      orbits.push_back(std::move(entry));
    }
  }
  doc["orbits"] = std::move(orbits);
  return doc;
}

std::string equalities_str(const std::vector<AffineRoot>& eqs) {
  std::string out;
  for (const AffineRoot& e : eqs) {
    if (!out.empty()) out += ", ";
    out += e.root.str() + (e.offset >= 0 ? "+" : "") + std::to_string(e.offset);
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string orbits_json(const LocalField& k, GroupType group, int n, const RScalar& r,
                        unsigned long seed) {
  return orbits_doc(k, group, n, r, seed).dump(2);
}

std::string orbits_markdown(const LocalField& k, GroupType group, int n, const RScalar& r,
                            unsigned long seed) {
  std::ostringstream out;
  out << "| id | partition | facet equalities | dim(F) | triple |\n";
  out << "|---|---|---|---|---|\n";
  if (group == GroupType::SL) {
    for (const SLOrbit& o : enumerate_sl_orbits(k, n)) {
      OrbitFacetDatum d = sl_facet(k, o, r, seed);
      out << "| " << sl_orbit_id(o) << " | " << o.lambda.str() << " | "
          << equalities_str(d.facet.equalities) << " | " << d.facet.dim << " | "
          << (is_lie_triple(d.lift) ? "ok" : "BAD") << " |\n";
    }
  } else {
    for (const SpOrbit& o : enumerate_sp_orbits(k, n)) {
      OrbitFacetDatum d = sp_facet(k, o, r, seed);
      out << "| " << sp_orbit_id(k, o) << " | " << o.lambda.str() << " | "
          << equalities_str(d.facet.equalities) << " | " << d.facet.dim << " | "
          << (is_lie_triple(d.lift) ? "ok" : "BAD") << " |\n";
    }
  }
  return out.str();
}

namespace {

// Rows of the orbit table: partition, orbit count, dim of the orbit, set of
// facet dimensions over the classes.
struct TableRow {
  Partition lambda;
  long count = 0;
  long dim_orbit = 0;
  std::set<int> dim_facets;
};

std::vector<TableRow> orbit_table_rows(const LocalField& k, GroupType group, int n) {
  std::vector<TableRow> rows;
  if (group == GroupType::SL) {
    for (const Partition& lambda : all_partitions(n)) {
      TableRow row;
      row.lambda = lambda;
      row.count = k.power_class_count(lambda.gcd()).total;
      row.dim_orbit = sl_orbit_dim(n, lambda);
      row.dim_facets.insert(sl_facet_dim(lambda));
      rows.push_back(std::move(row));
    }
  } else {
    for (const SpOrbit& o : enumerate_sp_orbits(k, n)) {
      if (rows.empty() || !(rows.back().lambda == o.lambda)) {
        TableRow row;
        row.lambda = o.lambda;
        row.dim_orbit = sp_orbit_dim(o.lambda);
        rows.push_back(std::move(row));
      }
      ++rows.back().count;
      rows.back().dim_facets.insert(sp_facet_dim(k, o));
    }
  }
  return rows;
}

std::string dims_str(const std::set<int>& dims) {
  std::string out;
  for (int d : dims) {
    if (!out.empty()) out += " or ";
    out += std::to_string(d);
  }
  return out;
}

}  // namespace

std::string orbit_table_markdown(const LocalField& k, GroupType group, int n) {
  std::ostringstream out;
  out << "| partition | rational orbits | dim(O) | dim(F) |\n|---|---|---|---|\n";
  for (const TableRow& row : orbit_table_rows(k, group, n))
    out << "| " << row.lambda.str() << " | " << row.count << " | " << row.dim_orbit << " | "
        << dims_str(row.dim_facets) << " |\n";
  return out.str();
}

std::string orbit_table_json(const LocalField& k, GroupType group, int n) {
  json rows = json::array();
  for (const TableRow& row : orbit_table_rows(k, group, n))
    rows.push_back(json{{"partition", row.lambda.parts},
                        {"orbits", row.count},
                        {"dim_orbit", row.dim_orbit},
                        {"dim_facet", std::vector<int>(row.dim_facets.begin(),
                                                       row.dim_facets.end())}});
  return json{{"group", group == GroupType::SL ? "sl" : "sp"}, {"n", n}, {"rows", rows}}
      .dump(2);
}

std::string numforms_markdown(const LocalField& k) {
  std::ostringstream out;
  out << "| dim | classes | anisotropic |\n|---|---|---|\n";
  for (int d = 1; d <= 5; ++d) {
    std::vector<FormInvariants> classes = enumerate_classes(k, d);
    int aniso = 0;
    for (const FormInvariants& c : classes)
      if (anisotropic_kernel(k, c).kernel.dim == d) ++aniso;
    out << "| " << d << " | " << classes.size() << " | " << aniso << " |\n";
  }
  return out.str();
}

std::string numforms_json(const LocalField& k) {
  json rows = json::array();
  for (int d = 1; d <= 5; ++d) {
    std::vector<FormInvariants> classes = enumerate_classes(k, d);
    int aniso = 0;
    for (const FormInvariants& c : classes)
      if (anisotropic_kernel(k, c).kernel.dim == d) ++aniso;
    rows.push_back(
        json{{"dim", d}, {"classes", classes.size()}, {"anisotropic", aniso}});
  }
  return json{{"rows", rows}}.dump(2);
}

std::string anisotropic_markdown(const LocalField& k) {
  std::ostringstream out;
  out << "| dim | diagonal | det | hasse |\n|---|---|---|---|\n";
  for (const QuadraticForm& q : anisotropic_table(k)) {
    FormInvariants inv = invariants(k, q);
    std::string diag;
    for (const Rat& a : q.diag) {
      if (!diag.empty()) diag += ", ";
      diag += a.get_str();
    }
    out << "| " << q.dim() << " | " << diag << " | " << to_string(inv.det) << " | "
        << (inv.hasse > 0 ? "+1" : "-1") << " |\n";
  }
  return out.str();
}

std::string anisotropic_json(const LocalField& k) {
  json rows = json::array();
  for (const QuadraticForm& q : anisotropic_table(k)) {
    FormInvariants inv = invariants(k, q);
    std::vector<std::string> diag;
    for (const Rat& a : q.diag) diag.push_back(a.get_str());
    rows.push_back(json{{"dim", q.dim()},
                        {"diagonal", diag},
                        {"det", to_string(inv.det)},
                        {"hasse", inv.hasse}});
  }
  return json{{"rows", rows}}.dump(2);
}

namespace {

const SquareClass kClasses[4] = {SquareClass::One, SquareClass::Eps, SquareClass::Pi,
                                 SquareClass::EpsPi};

}  // namespace

std::string hilbert_markdown(const LocalField& k) {
  std::ostringstream out;
  out << "| (a,b) |";
  for (SquareClass b : kClasses) out << " " << to_string(b) << " |";
  out << "\n|---|---|---|---|---|\n";
  for (SquareClass a : kClasses) {
    out << "| " << to_string(a) << " |";
    for (SquareClass b : kClasses) out << " " << (k.hilbert(a, b) > 0 ? "+1" : "-1") << " |";
    out << "\n";
  }
  return out.str();
}

std::string hilbert_json(const LocalField& k) {
  std::vector<std::string> labels;
  for (SquareClass a : kClasses) labels.push_back(to_string(a));
  json table = json::array();
  for (SquareClass a : kClasses) {
    json row = json::array();
    for (SquareClass b : kClasses) row.push_back(k.hilbert(a, b));
    table.push_back(std::move(row));
  }
  return json{{"labels", labels}, {"table", table}}.dump(2);
}

namespace {

long modpow(long base, long e, long mod) {
  long out = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (e > 0) {
    if (e & 1) out = out * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return out;
}

// |R^x/(R^x)^m| by brute force over the finite quotient mod p^(2 val(m) + 1).
long brute_unit_classes(long p, long m) {
  long v = 0, mm = m;
  while (mm % p == 0) {
    mm /= p;
    ++v;
  }
  long modulus = 1;
  for (long t = 0; t < 2 * v + 1; ++t) modulus *= p;
  std::set<long> powers;
  long units = 0;
  for (long u = 1; u < modulus; ++u) {
    if (u % p == 0) continue;
    ++units;
    powers.insert(modpow(u, m, modulus));
  }
  return units / static_cast<long>(powers.size());
}

}  // namespace

VerifyReport verify_all(const LocalField& k, unsigned long seed) {
  VerifyReport rep;
  auto check = [&rep](const std::string& name, auto&& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    rep.log += (ok ? "[PASS] " : "[FAIL] ") + name + (detail.empty() ? "" : ": " + detail) + "\n";
    if (!ok) ++rep.failures;
  };
  RScalar r = default_r();

  check("hilbert-symmetry-and-bimultiplicativity", [&] {
    for (SquareClass a : kClasses)
      for (SquareClass b : kClasses) {
        if (k.hilbert(a, b) != k.hilbert(b, a)) return false;
        for (SquareClass c : kClasses)
          if (k.hilbert(LocalField::square_class_mul(a, b), c) !=
              k.hilbert(a, c) * k.hilbert(b, c))
            return false;
      }
    for (SquareClass a : kClasses) {
      Rat x = k.class_representative(a);
      if (k.hilbert(x, -x) != 1) return false;
    }
    return true;
  });

  check("form-class-and-anisotropic-counts", [&] {
    const long expected_classes[5] = {4, 7, 8, 8, 8};
    const long expected_aniso[5] = {4, 6, 4, 1, 0};
    for (int d = 1; d <= 5; ++d) {
      std::vector<FormInvariants> classes = enumerate_classes(k, d);
      if (static_cast<long>(classes.size()) != expected_classes[d - 1]) return false;
      long aniso = 0;
      for (const FormInvariants& c : classes)
        if (anisotropic_kernel(k, c).kernel.dim == d) ++aniso;
      if (aniso != expected_aniso[d - 1]) return false;
    }
    return true;
  });

  check("sl-triples-and-roundtrip", [&] {
    for (int n = 2; n <= 4; ++n)
      for (const SLOrbit& o : enumerate_sl_orbits(k, n)) {
        LieTriple t = sl_lie_triple(o);
        if (!is_lie_triple(t)) return false;
        if (!(classify_sl(k, sl_representative(o)) == o)) return false;
      }
    return true;
  });

  check("sp-triples-and-roundtrip", [&] {
    for (int n = 1; n <= 3; ++n)
      for (const SpOrbit& o : enumerate_sp_orbits(k, n)) {
        LieTriple t = sp_lie_triple(k, o);
        if (!is_lie_triple(t) || !in_sp(t.X) || !in_sp(t.H) || !in_sp(t.Y)) return false;
        if (!(classify_sp(k, sp_representative(k, o)) == o)) return false;
      }
    return true;
  });

  check("facet-membership-and-dimension", [&] {
    for (int n = 2; n <= 4; ++n) {
      Ambient amb{GroupType::SL, n};
      for (const SLOrbit& o : enumerate_sl_orbits(k, n)) {
        OrbitFacetDatum d = sl_facet(k, o, r, seed);
        if (d.facet.dim != sl_facet_dim(o.lambda)) return false;
        if (!moy_prasad_contains(amb, k, d.lift.X, d.facet.witness, r)) return false;
        if (!moy_prasad_contains(amb, k, d.lift.H, d.facet.witness, RScalar(0))) return false;
        if (!moy_prasad_contains(amb, k, d.lift.Y, d.facet.witness, -r)) return false;
      }
    }
    for (int n = 1; n <= 3; ++n) {
      Ambient amb{GroupType::Sp, n};
      for (const SpOrbit& o : enumerate_sp_orbits(k, n)) {
        OrbitFacetDatum d = sp_facet(k, o, r, seed);
        if (d.facet.dim != sp_facet_dim(k, o)) return false;
        if (!moy_prasad_contains(amb, k, d.lift.X, d.facet.witness, r)) return false;
        if (!moy_prasad_contains(amb, k, d.lift.H, d.facet.witness, RScalar(0))) return false;
        if (!moy_prasad_contains(amb, k, d.lift.Y, d.facet.witness, -r)) return false;
      }
    }
    return true;
  });

  check("shift-identity", [&] {
    std::vector<RScalar> shifts = {RScalar(0), r, RScalar(1) + r, -r};
    for (int n = 2; n <= 3; ++n) {
      Ambient amb{GroupType::SL, n};
      for (const SLOrbit& o : enumerate_sl_orbits(k, n))
        for (const RScalar& s : shifts)
          if (!shift_check(amb, k, sl_lie_triple(o), s, seed)) return false;
    }
    Ambient amb{GroupType::Sp, 2};
    for (const SpOrbit& o : enumerate_sp_orbits(k, 2))
      for (const RScalar& s : shifts)
        if (!shift_check(amb, k, sp_lie_triple(k, o), s, seed)) return false;
    return true;
  });

  check("power-class-counts", [&] {
    for (long m : {2L, 3L, 4L, 6L}) {
      LocalField::PowerClassCount c = k.power_class_count(m);
      long brute = brute_unit_classes(k.p(), m);
      if (c.unit_classes != brute || c.total != m * brute) return false;
    }
    return true;
  });

  check("associate-normal-form", [&] {
    const int n = 4;
    const long offsets[4] = {-1, 0, 1, 2};
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> support;
      for (int i = 0; i < n - 1; ++i)
        if (mask & (1 << i)) support.push_back(i);
      long combos = 1;
      for (size_t t = 0; t < support.size(); ++t) combos *= 4;
      for (long combo = 0; combo < combos; ++combo) {
        std::vector<AffineRoot> eqs;
        std::vector<long> off(n - 1, 0);
        long c = combo;
        for (int i : support) {
          off[i] = offsets[c % 4];
          c /= 4;
          eqs.push_back({Root::diff(i, i + 1), off[i]});
        }
        SLAssociateClass nf = sl_associate_normal_form(n, eqs);
        // oracle: valuation of the diagonal change of basis that clears the
        // offsets block by block
        std::vector<int> parts;
        long val = 0;
        for (int i = 0; i < n;) {
          int run = 0;
          long acc = 0;
          while (i + run < n - 1 && (mask & (1 << (i + run)))) {
            acc += off[i + run];
            val += acc;
            ++run;
          }
          parts.push_back(run + 1);
          i += run + 1;
        }
        Partition lambda(parts);
        long g = lambda.gcd();
        if (!(nf.lambda == lambda)) return false;
        if (nf.k_residue != ((val % g) + g) % g) return false;
      }
    }
    return true;
  });

  check("distinguished-pair-regression", [&] {
    Mat x1(4, 4), x0(4, 4);
    x1.at(0, 3) = 1;
    x1.at(1, 2) = 1;
    x0.at(0, 2) = 1;
    x0.at(1, 3) = -1;
    Mat h = Mat::diag({Rat(1), Rat(1), Rat(-1), Rat(-1)});
    LieTriple t1 = complete_triple(x1, h, true);
    LieTriple t0 = complete_triple(x0, h, true);
    SpOrbit o1 = classify_sp(k, x1);
    SpOrbit o0 = classify_sp(k, x0);
    if (!(o1 == o0)) return false;
    Ambient amb{GroupType::Sp, 2};
    ApartmentSlice s1 = apartment_slice(amb, k, t1, r, seed);
    ApartmentSlice s0 = apartment_slice(amb, k, t0, r, seed);
    if (s1.dim != 1 || s0.dim != 0) return false;
    return sp_facet(k, o1, r, seed).facet.dim == 1;
  });

  check("coset-minimality-probe", [&] {
    for (int n = 2; n <= 3; ++n) {
      Ambient amb{GroupType::SL, n};
      for (const SLOrbit& o : enumerate_sl_orbits(k, n)) {
        OrbitFacetDatum d = sl_facet(k, o, r, seed);
        if (coset_min_probe(amb, k, d.lift, d.facet, r, 40, seed).violations != 0) return false;
      }
    }
    Ambient amb{GroupType::Sp, 2};
    for (const SpOrbit& o : enumerate_sp_orbits(k, 2)) {
      OrbitFacetDatum d = sp_facet(k, o, r, seed);
      if (coset_min_probe(amb, k, d.lift, d.facet, r, 40, seed).violations != 0) return false;
    }
    return true;
  });

  return rep;
}

}  // namespace nilorbits
