#include "nilorbits/debacker.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace nilorbits {

namespace {

std::vector<AffineRoot> equalities_from_representative(const Ambient& amb, const LocalField& k,
                                                       const Mat& x) {
  std::vector<AffineRoot> eqs;
  for (const auto& [root, comp] : root_decompose(amb, x).components)
    eqs.push_back({root, k.val(comp)});
  return eqs;
}

std::vector<Rat> adapted_coweight(const Ambient& amb, const Mat& h) {
  std::vector<Rat> out;
  for (int i = 0; i < amb.n; ++i) out.push_back(h.at(i, i));
  return out;
}

}  // namespace

OrbitFacetDatum sl_facet(const LocalField& k, const SLOrbit& o, const RScalar& r,
                         unsigned long seed) {
  Ambient amb{GroupType::SL, o.lambda.sum()};
  LieTriple t = sl_lie_triple(o);
  OrbitFacetDatum d;
  d.amb = amb;
  d.facet = facet_from_equalities(amb, equalities_from_representative(amb, k, t.X), r, seed);
  d.adapted = adapted_coweight(amb, t.H);
  d.lift = std::move(t);
  return d;
}

OrbitFacetDatum sp_facet(const LocalField& k, const SpOrbit& o, const RScalar& r,
                         unsigned long seed) {
  Ambient amb{GroupType::Sp, o.lambda.sum() / 2};
  LieTriple t = sp_lie_triple(k, o);
  OrbitFacetDatum d;
  d.amb = amb;
  d.facet = facet_from_equalities(amb, equalities_from_representative(amb, k, t.X), r, seed);
  d.adapted = adapted_coweight(amb, t.H);
  d.lift = std::move(t);
  return d;
}

namespace {

// One linear inequality sum_i a_i x_i >= b (or > b when strict) over
// apartment coordinates, with rational coefficients and bound in Q + Q*sqrt(2).
struct LinIneq {
  std::vector<Rat> a;
  RScalar b;
  bool strict = false;
};

// Deduplicates by the normalized coefficient vector, keeping the tightest
// bound. Sets infeasible when a constant row is violated.
std::vector<LinIneq> dedupe_rows(const std::vector<LinIneq>& rows, int nvars, bool& infeasible) {
  infeasible = false;
  std::map<std::vector<Rat>, std::pair<RScalar, bool>> pool;
  for (const LinIneq& c : rows) {
    int first = -1;
    for (int t = 0; t < nvars; ++t)
      if (c.a[t] != 0) {
        first = t;
        break;
      }
    if (first == -1) {
      if (c.b.sign() > 0 || (c.strict && c.b.sign() == 0)) {
        infeasible = true;
        return {};
      }
      continue;
    }
    Rat scale = c.a[first] > 0 ? Rat(1) / c.a[first] : Rat(-1) / c.a[first];
    std::vector<Rat> key(nvars);
    for (int t = 0; t < nvars; ++t) key[t] = c.a[t] * scale;
    RScalar nb = c.b * scale;
    auto it = pool.find(key);
    if (it == pool.end()) {
      pool.emplace(std::move(key), std::make_pair(nb, c.strict));
    } else {
      auto& [b0, s0] = it->second;
      if (nb > b0) {
        b0 = nb;
        s0 = c.strict;
      } else if (nb == b0) {
        s0 = s0 || c.strict;
      }
    }
  }
  std::vector<LinIneq> out;
  for (const auto& [key, bs] : pool) out.push_back({key, bs.first, bs.second});
  return out;
}

// Fourier-Motzkin elimination over the ordered field Q(sqrt(2)); returns a
// feasible point. The witness sits in the relative interior of whatever the
// strict constraints allow.
std::optional<std::vector<RScalar>> fm_witness(const std::vector<LinIneq>& input, int nvars) {
  bool infeasible = false;
  std::vector<LinIneq> sys = dedupe_rows(input, nvars, infeasible);
  if (infeasible) return std::nullopt;
  std::vector<std::vector<LinIneq>> stages(nvars);
  for (int v = nvars - 1; v >= 0; --v) {
    stages[v] = sys;
    std::vector<LinIneq> next;
    std::vector<LinIneq> pos, neg;
    for (const auto& c : sys) {
      if (c.a[v] > 0)
        pos.push_back(c);
      else if (c.a[v] < 0)
        neg.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& lower : pos)
      for (const auto& upper : neg) {
        Rat alpha = -upper.a[v], beta = lower.a[v];
        LinIneq comb;
        comb.a.assign(nvars, Rat(0));
        for (int t = 0; t < nvars; ++t) comb.a[t] = lower.a[t] * alpha + upper.a[t] * beta;
        comb.b = lower.b * alpha + upper.b * beta;
        comb.strict = lower.strict || upper.strict;
        next.push_back(std::move(comb));
      }
    sys = dedupe_rows(next, nvars, infeasible);
    if (infeasible) return std::nullopt;
  }
  std::vector<RScalar> x(nvars);
  for (int v = 0; v < nvars; ++v) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    RScalar lo, hi;
    for (const auto& c : stages[v]) {
      if (c.a[v] == 0) continue;
      RScalar rest = c.b;
      for (int t = 0; t < v; ++t)
        if (c.a[t] != 0) rest = rest - x[t] * c.a[t];
      RScalar bound = rest * (Rat(1) / c.a[v]);
      if (c.a[v] > 0) {
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        } else if (bound == lo) {
          lo_strict = lo_strict || c.strict;
        }
      } else {
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = c.strict;
          has_hi = true;
        } else if (bound == hi) {
          hi_strict = hi_strict || c.strict;
        }
      }
    }
    if (has_lo && has_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("strict bound collision after elimination");
        x[v] = lo;
      } else {
        x[v] = (lo + hi) * (Rat(1) / Rat(2));
      }
    } else if (has_lo) {
      x[v] = lo + RScalar(1);
    } else if (has_hi) {
      x[v] = hi - RScalar(1);
    } else {
      x[v] = RScalar(0);
    }
  }
  return x;
}

int equality_rank(int n, const std::map<Root, RScalar>& eqs) {
  if (eqs.empty()) return 0;
  Mat rows(static_cast<int>(eqs.size()), n);
  int idx = 0;
  for (const auto& [root, value] : eqs) {
    std::vector<Rat> row = root_functional(n, root);
    for (int col = 0; col < n; ++col) rows.at(idx, col) = row[col];
    ++idx;
  }
  return rows.rank();
}

}  // namespace

ApartmentSlice apartment_slice(const Ambient& amb, const LocalField& k, const LieTriple& t,
                               const RScalar& r, unsigned long /*seed*/) {
  ApartmentSlice s;
  int n = amb.n;
  auto add_matrix = [&](const Mat& m, const RScalar& level) -> bool {
    RootDecomposition d = root_decompose(amb, m);
    for (const Rat& tv : d.torus)
      if (tv != 0 && RScalar(Rat(k.val(tv)), Rat(0)) < level) return false;
    for (const auto& [root, comp] : d.components) {
      RScalar bound = level - RScalar(Rat(k.val(comp)), Rat(0));
      if (root.positive()) {
        auto& iv = s.constraints[root];
        if (!iv.lower || bound > *iv.lower) iv.lower = bound;
      } else {
        Root pos = root.negated();
        RScalar ub = -bound;
        auto& iv = s.constraints[pos];
        if (!iv.upper || ub < *iv.upper) iv.upper = ub;
      }
    }
    return true;
  };
  if (!add_matrix(t.X, r) || !add_matrix(t.H, RScalar(0)) || !add_matrix(t.Y, -r)) {
    s.empty = true;
    return s;
  }
  for (const auto& [root, iv] : s.constraints)
    if (iv.lower && iv.upper && *iv.upper < *iv.lower) {
      s.empty = true;
      return s;
    }

  std::map<Root, RScalar> eqs;
  for (const auto& [root, iv] : s.constraints)
    if (iv.lower && iv.upper && *iv.lower == *iv.upper) eqs.emplace(root, *iv.lower);

  // strict_side: 0 both closed, 1 strict where not pinched.
  auto build = [&](bool strict_sides, const Root* strict_only, bool strict_only_upper) {
    std::vector<LinIneq> sys;
    for (const auto& [root, iv] : s.constraints) {
      bool pinched = eqs.count(root) > 0;
      std::vector<Rat> row = root_functional(n, root);
      if (iv.lower) {
        bool st = strict_only ? (root == *strict_only && !strict_only_upper)
                              : (strict_sides && !pinched);
        sys.push_back({row, *iv.lower, st});
      }
      if (iv.upper) {
        std::vector<Rat> neg(row);
        for (Rat& v : neg) v = -v;
        bool st = strict_only ? (root == *strict_only && strict_only_upper)
                              : (strict_sides && !pinched);
        sys.push_back({std::move(neg), -*iv.upper, st});
      }
    }
    if (amb.group == GroupType::SL) {
      std::vector<Rat> ones(n, Rat(1)), negones(n, Rat(-1));
      sys.push_back({std::move(ones), RScalar(0), false});
      sys.push_back({std::move(negones), RScalar(0), false});
    }
    return sys;
  };

  if (!fm_witness(build(false, nullptr, false), n)) {
    s.empty = true;
    return s;
  }

  for (int round = 0; round <= static_cast<int>(s.constraints.size()); ++round) {
    auto witness = fm_witness(build(true, nullptr, false), n);
    if (witness) {
      s.dim = amb.apartment_dim() - equality_rank(n, eqs);
      s.witness.x = std::move(*witness);
      return s;
    }
    // Some constraint holds with equality on the whole slice; find one and
    // promote it.
    bool promoted = false;
    for (const auto& [root, iv] : s.constraints) {
      if (eqs.count(root)) continue;
      if (iv.lower && !fm_witness(build(false, &root, false), n)) {
        eqs.emplace(root, *iv.lower);
        promoted = true;
        break;
      }
      if (iv.upper && !fm_witness(build(false, &root, true), n)) {
        eqs.emplace(root, *iv.upper);
        promoted = true;
        break;
      }
    }
    if (!promoted) throw std::logic_error("slice dimension certification failed");
  }
  throw std::logic_error("slice tightening did not terminate");
}

ApartmentSlice translate_slice(const ApartmentSlice& s, const std::vector<RScalar>& delta) {
  ApartmentSlice out = s;
  ApartmentPoint d{delta};
  for (auto& [root, iv] : out.constraints) {
    RScalar shift = eval_root(root, d);
    if (iv.lower) iv.lower = *iv.lower + shift;
    if (iv.upper) iv.upper = *iv.upper + shift;
  }
  if (!out.witness.x.empty())
    for (size_t i = 0; i < out.witness.x.size(); ++i)
      out.witness.x[i] = out.witness.x[i] + delta[i];
  return out;
}

bool shift_check(const Ambient& amb, const LocalField& k, const LieTriple& t, const RScalar& r,
                 unsigned long seed) {
  ApartmentSlice at_r = apartment_slice(amb, k, t, r, seed);
  ApartmentSlice at_0 = apartment_slice(amb, k, t, RScalar(0), seed);
  std::vector<RScalar> delta;
  for (int i = 0; i < amb.n; ++i) delta.push_back(r * (t.H.at(i, i) / Rat(2)));
  ApartmentSlice moved = translate_slice(at_0, delta);
  if (at_r.empty != moved.empty) return false;
  if (at_r.empty) return true;
  return at_r.dim == moved.dim && at_r.constraints == moved.constraints;
}

SLAssociateClass sl_associate_normal_form(int n, const std::vector<AffineRoot>& equalities) {
  std::vector<bool> present(n > 0 ? n - 1 : 0, false);
  std::vector<long> offset(n > 0 ? n - 1 : 0, 0);
  for (const AffineRoot& e : equalities) {
    if (e.root.kind != RootKind::Diff || e.root.j != e.root.i + 1 || e.root.i < 0 ||
        e.root.i >= n - 1)
      throw std::invalid_argument("equalities must sit on consecutive simple roots");
    if (present[e.root.i] && offset[e.root.i] != e.offset)
      throw std::invalid_argument("conflicting offsets on one root");
    present[e.root.i] = true;
    offset[e.root.i] = e.offset;
  }

  std::vector<int> parts;
  long total = 0;
  for (int i = 0; i < n;) {
    int run = 0;
    while (i + run < n - 1 && present[i + run]) ++run;
    // block of size run+1 starting at coordinate i; its roots are i..i+run-1
    for (int j = 1; j <= run; ++j) total -= static_cast<long>(j) * offset[i + j - 1];
    parts.push_back(run + 1);
    i += run + 1;
  }
  Partition lambda(parts);
  long g = lambda.gcd();
  long residue = ((total % g) + g) % g;

  SLAssociateClass out;
  out.lambda = lambda;
  out.k_residue = residue;
  for (int i = 0; i < n - 1; ++i)
    if (present[i]) out.equalities.push_back({Root::diff(i, i + 1), i == n - 2 ? residue : 0});
  return out;
}

namespace {

Rat prime_power(long p, long e) {
  Rat out(1);
  Rat base(p);
  for (long t = 0; t < (e >= 0 ? e : -e); ++t) out *= base;
  if (e < 0) out = 1 / out;
  return out;
}

}  // namespace

CosetProbeResult coset_min_probe(const Ambient& amb, const LocalField& k, const LieTriple& t,
                                 const RFacet& facet, const RScalar& r, int samples,
                                 unsigned long seed) {
  CosetProbeResult res;
  Partition lambda = jordan_partition(t.X);
  long p = k.p();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digit(0, p - 1);
  int size = amb.matrix_size();
  std::vector<Root> roots = all_roots(amb);
  long torus_min = r.floor() + 1;

  for (int sample = 0; sample < samples; ++sample) {
    Mat z = t.X;
    if (sample > 0) {
      RootDecomposition d;
      d.torus.assign(amb.n, Rat(0));
      if (amb.group == GroupType::SL) {
        Rat sum(0);
        for (int i = 0; i + 1 < amb.n; ++i) {
          Rat v(0);
          for (int e = 0; e < 3; ++e) v += Rat(digit(rng)) * prime_power(p, torus_min + e);
          d.torus[i] = v;
          sum += v;
        }
        d.torus[amb.n - 1] = -sum;
      } else {
        for (int i = 0; i < amb.n; ++i) {
          Rat v(0);
          for (int e = 0; e < 3; ++e) v += Rat(digit(rng)) * prime_power(p, torus_min + e);
          d.torus[i] = v;
        }
      }
      for (const Root& root : roots) {
        long vmin = (r - eval_root(root, facet.witness)).floor() + 1;
        Rat v(0);
        for (int e = 0; e < 3; ++e) v += Rat(digit(rng)) * prime_power(p, vmin + e);
        if (v != 0) d.components[root] = v;
      }
      z = z + reassemble(amb, d);
    }
    ++res.samples;
    if (!z.pow(size).is_zero()) {
      ++res.skipped;
      continue;
    }
    if (!dominates(jordan_partition(z), lambda)) ++res.violations;
  }
  return res;
}

}  // namespace nilorbits
