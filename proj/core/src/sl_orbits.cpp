#include "nilorbits/sl_orbits.hpp"

#include <stdexcept>

namespace nilorbits {

std::vector<int> sl_superdiagonal_support(const Partition& lambda) {
  int n = lambda.sum();
  std::vector<bool> cut(n + 1, false);
  int acc = 0;
  for (int j : lambda.parts) {
    acc += j;
    cut[acc] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!cut[i]) out.push_back(i);
  return out;
}

std::vector<SLOrbit> enumerate_sl_orbits(const LocalField& k, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<SLOrbit> out;
  for (const Partition& lambda : all_partitions(n)) {
    long m = lambda.gcd();
    const std::vector<long>& units = k.unit_class_reps(m);
    for (long a = 0; a < m; ++a) {
      for (size_t u = 0; u < units.size(); ++u) {
        SLOrbit o;
        o.lambda = lambda;
        o.m = m;
        o.d_class = PowerClass{m, a, static_cast<long>(u)};
        o.d = k.representative(o.d_class);
        out.push_back(o);
      }
    }
  }
  return out;
}

Mat sl_representative(const SLOrbit& o) {
  int n = o.lambda.sum();
  std::vector<Rat> dd(n, Rat(1));
  dd[n - 1] = o.d;
  return jordan_nilpotent(o.lambda) * Mat::diag(dd);
}

LieTriple sl_lie_triple(const SLOrbit& o) {
  int n = o.lambda.sum();
  std::vector<Rat> dinv(n, Rat(1));
  dinv[n - 1] = 1 / o.d;
  return LieTriple{Mat::diag(dinv) * lowering_matrix(o.lambda), weight_diagonal(o.lambda),
                   sl_representative(o)};
}

SLOrbit classify_sl(const LocalField& k, const Mat& x) {
  Partition lambda = jordan_partition(x);
  // C has the chain vectors as columns, so g = C^(-1) maps x to Jordan form;
  // the twist class is that of det(g) = 1/det(C).
  Mat c = jordan_basis(x);
  Rat detc = c.det();
  if (detc == 0) throw std::logic_error("jordan basis is singular");
  SLOrbit o;
  o.lambda = lambda;
  o.m = lambda.gcd();
  o.d_class = k.power_class(1 / detc, o.m);
  o.d = k.representative(o.d_class);
  return o;
}

}  // namespace nilorbits
