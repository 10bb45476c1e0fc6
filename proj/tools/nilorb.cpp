#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilorbits/report.hpp"

using json = nlohmann::json;
using namespace nilorbits;

namespace {

Rat parse_rat(const std::string& s) {
  Rat v(s);
  v.canonicalize();
  return v;
}

struct OrbitRef {
  GroupType group;
  int n = 0;
  std::variant<SLOrbit, SpOrbit> orbit;
};

OrbitRef find_orbit(const LocalField& k, const std::string& id) {
  auto lb = id.find('['), rb = id.find(']');
  auto colon = id.find(':');
  if (colon == std::string::npos || lb == std::string::npos || rb == std::string::npos ||
      lb > rb)
    throw std::invalid_argument("malformed orbit id: " + id);
  std::string g = id.substr(0, colon);
  std::vector<int> parts;
  int cur = 0;
  bool have = false;
  for (size_t t = lb + 1; t < rb; ++t) {
    char ch = id[t];
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
    } else if (ch == ',') {
      if (!have) throw std::invalid_argument("malformed partition in id");
      parts.push_back(cur);
      cur = 0;
      have = false;
    } else {
      throw std::invalid_argument("malformed partition in id");
    }
  }
  if (have) parts.push_back(cur);
  if (parts.empty()) throw std::invalid_argument("malformed partition in id");
  Partition lambda(parts);
  if (g == "sl") {
    int n = lambda.sum();
    for (const SLOrbit& o : enumerate_sl_orbits(k, n))
      if (sl_orbit_id(o) == id) return {GroupType::SL, n, o};
  } else if (g == "sp") {
    if (lambda.sum() % 2 != 0) throw std::invalid_argument("malformed partition in id");
    int n = lambda.sum() / 2;
    for (const SpOrbit& o : enumerate_sp_orbits(k, n))
      if (sp_orbit_id(k, o) == id) return {GroupType::Sp, n, o};
  } else {
    throw std::invalid_argument("orbit id must start with sl: or sp:");
  }
  throw std::invalid_argument("no such orbit: " + id);
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string interval_str(const Interval& iv) {
  std::string lo = iv.lower ? iv.lower->str() : "-inf";
  std::string hi = iv.upper ? iv.upper->str() : "+inf";
  return "[" + lo + ", " + hi + "]";
}

int run_rep(const LocalField& k, const std::string& id, bool js) {
  OrbitRef ref = find_orbit(k, id);
  LieTriple t = ref.group == GroupType::SL ? sl_lie_triple(std::get<SLOrbit>(ref.orbit))
                                           : sp_lie_triple(k, std::get<SpOrbit>(ref.orbit));
  if (js) {
    json doc{{"id", id},
             {"X", matrix_json(t.X)},
             {"H", matrix_json(t.H)},
             {"Y", matrix_json(t.Y)},
             {"triple_ok", is_lie_triple(t)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "id: " << id << "\n";
    std::cout << "X = " << t.X.str() << "\n";
    std::cout << "H = " << t.H.str() << "\n";
    std::cout << "Y = " << t.Y.str() << "\n";
    std::cout << "triple_ok: " << (is_lie_triple(t) ? "true" : "false") << "\n";
  }
  return 0;
}

int run_facet(const LocalField& k, const std::string& id, const RScalar& r, unsigned long seed,
              bool js) {
  OrbitRef ref = find_orbit(k, id);
  OrbitFacetDatum d = ref.group == GroupType::SL
                          ? sl_facet(k, std::get<SLOrbit>(ref.orbit), r, seed)
                          : sp_facet(k, std::get<SpOrbit>(ref.orbit), r, seed);
  if (js) {
    json eqs = json::array();
    for (const AffineRoot& e : d.facet.equalities)
      eqs.push_back(json{{"root", e.root.str()}, {"offset", e.offset}});
    json witness = json::array();
    for (const RScalar& c : d.facet.witness.x) witness.push_back(c.str());
    json adapted = json::array();
    for (const Rat& c : d.adapted) adapted.push_back(c.get_str());
    std::cout << json{{"id", id},
                      {"equalities", eqs},
                      {"dim", d.facet.dim},
                      {"witness", witness},
                      {"adapted", adapted}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "id: " << id << "\n";
    std::cout << "equalities:";
    if (d.facet.equalities.empty()) std::cout << " (none)";
    for (const AffineRoot& e : d.facet.equalities)
      std::cout << " " << e.root.str() << (e.offset >= 0 ? "+" : "") << e.offset;
    std::cout << "\n";
    std::cout << "dim: " << d.facet.dim << "\n";
    std::cout << "witness:";
    for (const RScalar& c : d.facet.witness.x) std::cout << " " << c.str();
    std::cout << "\n";
  }
  return 0;
}

int run_slice(const LocalField& k, const std::string& id, const RScalar& r, unsigned long seed,
              bool js) {
  OrbitRef ref = find_orbit(k, id);
  Ambient amb{ref.group, ref.n};
  LieTriple t = ref.group == GroupType::SL ? sl_lie_triple(std::get<SLOrbit>(ref.orbit))
                                           : sp_lie_triple(k, std::get<SpOrbit>(ref.orbit));
  ApartmentSlice s = apartment_slice(amb, k, t, r, seed);
  if (js) {
    json cons = json::array();
    for (const auto& [root, iv] : s.constraints)
      cons.push_back(json{{"root", root.str()},
                          {"lower", iv.lower ? json(iv.lower->str()) : json(nullptr)},
                          {"upper", iv.upper ? json(iv.upper->str()) : json(nullptr)}});
    std::cout << json{{"id", id}, {"constraints", cons}, {"dim", s.dim}, {"empty", s.empty}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "id: " << id << "\n";
    if (s.empty) {
      std::cout << "empty slice\n";
      return 0;
    }
    for (const auto& [root, iv] : s.constraints)
      std::cout << root.str() << " in " << interval_str(iv) << "\n";
    std::cout << "dim: " << s.dim << "\n";
  }
  return 0;
}

int run_qf(const LocalField& k, const std::vector<std::string>& entries, bool js) {
  std::vector<Rat> diag;
  for (const std::string& s : entries) diag.push_back(parse_rat(s));
  QuadraticForm q(diag);
  FormInvariants inv = invariants(k, q);
  WittParts w = anisotropic_kernel(k, q);
  if (js) {
    std::vector<std::string> kernel_diag;
    for (const Rat& a : anisotropic_representative(k, w.kernel)) kernel_diag.push_back(a.get_str());
    std::cout << json{{"dim", inv.dim},
                      {"det", to_string(inv.det)},
                      {"hasse", inv.hasse},
                      {"hyperbolic", w.hyperbolic_count},
                      {"kernel_dim", w.kernel.dim},
                      {"kernel_diagonal", kernel_diag}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "dim: " << inv.dim << "\ndet: " << to_string(inv.det)
              << "\nhasse: " << (inv.hasse > 0 ? "+1" : "-1")
              << "\nhyperbolic planes: " << w.hyperbolic_count
              << "\nanisotropic kernel dim: " << w.kernel.dim << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational nilpotent orbits of SL_n and Sp_2n over Q_p, with facet data"};
  app.fallthrough();
  long p = 5;
  std::string group = "sl";
  int n = 2;
  std::string rmult = "1/2";
  std::string format = "markdown";
  unsigned long seed = 1;
  app.add_option("--p", p, "odd prime defining Q_p");
  app.add_option("--group", group, "sl or sp")->check(CLI::IsMember({"sl", "sp"}));
  app.add_option("--n", n, "rank: SL_n, or Sp_2n");
  app.add_option("--r-mult", rmult, "r = (NUM/DEN)*sqrt(2) with NUM/DEN in (0,1)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--seed", seed, "seed for witness search and probes");

  CLI::App* cmd_orbits = app.add_subcommand("orbits", "enumerate rational nilpotent orbits");
  std::string rep_id;
  CLI::App* cmd_rep = app.add_subcommand("rep", "representative and Lie triple of an orbit");
  cmd_rep->add_option("id", rep_id, "orbit id, e.g. sl:[2,1]:d=1")->required();
  std::string facet_id;
  CLI::App* cmd_facet = app.add_subcommand("facet", "facet datum of an orbit");
  cmd_facet->add_option("id", facet_id, "orbit id")->required();
  std::string slice_id;
  CLI::App* cmd_slice = app.add_subcommand("slice", "apartment slice of an orbit's triple");
  cmd_slice->add_option("id", slice_id, "orbit id")->required();
  std::vector<std::string> qf_entries;
  CLI::App* cmd_qf = app.add_subcommand("qf", "classify a diagonal quadratic form");
  cmd_qf->add_option("entries", qf_entries, "nonzero diagonal entries")->required();
  std::string hilbert_a, hilbert_b;
  CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)");
  cmd_hilbert->add_option("a", hilbert_a)->required();
  cmd_hilbert->add_option("b", hilbert_b)->required();
  CLI::App* cmd_tables = app.add_subcommand("tables", "recompute the reference tables");
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the self-check battery");
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    LocalField k(p);
    RScalar r = r_from_mult(parse_rat(rmult));
    GroupType g = group == "sl" ? GroupType::SL : GroupType::Sp;
    bool js = format == "json";

    if (*cmd_orbits || *cmd_rep || *cmd_facet || *cmd_slice) {
      long h = g == GroupType::SL ? n : 2 * n;
      if (!k.coxeter_ok(h))
        std::cerr << "warning: p = " << p << " is not greater than 3(h-1) for Coxeter number h = "
                  << h << "; facet statements may fail\n";
    }

    if (*cmd_orbits) {
      std::cout << (js ? orbits_json(k, g, n, r, seed) : orbits_markdown(k, g, n, r, seed))
                << "\n";
      return 0;
    }
    if (*cmd_rep) return run_rep(k, rep_id, js);
    if (*cmd_facet) return run_facet(k, facet_id, r, seed, js);
    if (*cmd_slice) return run_slice(k, slice_id, r, seed, js);
    if (*cmd_qf) return run_qf(k, qf_entries, js);
    if (*cmd_hilbert) {
      Rat a = parse_rat(hilbert_a), b = parse_rat(hilbert_b);
      std::cout << (k.hilbert(a, b) > 0 ? "+1" : "-1") << "\n";
      return 0;
    }
    if (*cmd_tables) {
      bool group_given = app.count("--group") > 0;
      if (group_given) {
        std::cout << (js ? orbit_table_json(k, g, n) : orbit_table_markdown(k, g, n)) << "\n";
      } else if (js) {
        json doc{{"sp4", json::parse(orbit_table_json(k, GroupType::Sp, 2))},
                 {"sp6", json::parse(orbit_table_json(k, GroupType::Sp, 3))},
                 {"numforms", json::parse(numforms_json(k))},
                 {"anisotropic", json::parse(anisotropic_json(k))},
                 {"hilbert", json::parse(hilbert_json(k))}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "## Rational nilpotent orbits of Sp_4\n\n"
                  << orbit_table_markdown(k, GroupType::Sp, 2) << "\n";
        std::cout << "## Rational nilpotent orbits of Sp_6\n\n"
                  << orbit_table_markdown(k, GroupType::Sp, 3) << "\n";
        std::cout << "## Quadratic form classes per dimension\n\n" << numforms_markdown(k)
                  << "\n";
        std::cout << "## Anisotropic forms\n\n" << anisotropic_markdown(k) << "\n";
        std::cout << "## Hilbert symbol\n\n" << hilbert_markdown(k);
      }
      return 0;
    }
    if (*cmd_verify) {
      VerifyReport v = verify_all(k, seed);
      std::cout << v.log;
      if (v.failures > 0) {
        std::cout << v.failures << " suite(s) failed\n";
        return 2;
      }
      std::cout << "all suites passed\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
