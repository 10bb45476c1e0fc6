#include <random>

#include "doctest.h"
#include "nilorbits/apartment.hpp"
#include "nilorbits/lie.hpp"
#include "nilorbits/sp_orbits.hpp"

using namespace nilorbits;

TEST_CASE("rscalar ordering and floor") {
  RScalar r = default_r();
  CHECK(r.q == Rat(0));
  CHECK(r.c == Rat(1, 2));
  CHECK(r.sign() == 1);
  CHECK((-r).sign() == -1);
  CHECK(RScalar(Rat(1), Rat(-1)).sign() == -1);   // 1 - sqrt(2) < 0
  CHECK(RScalar(Rat(3), Rat(-2)).sign() == 1);    // 3 - 2 sqrt(2) > 0
  CHECK(RScalar(Rat(-7), Rat(5)).sign() == 1);    // 5 sqrt(2) > 7
  CHECK(RScalar(0).sign() == 0);
  CHECK(r.floor() == 0);
  CHECK((-r).floor() == -1);
  CHECK(RScalar(Rat(3), Rat(1)).floor() == 4);
  CHECK(RScalar(Rat(-3), Rat(-1)).floor() == -5);
  CHECK(RScalar(Rat(7, 2), Rat(0)).floor() == 3);
  CHECK(RScalar(Rat(-2), Rat(0)).floor() == -2);
  CHECK(r < RScalar(1));
  CHECK(RScalar(Rat(0), Rat(1)) < RScalar(Rat(3, 2), Rat(0)));
  CHECK(r + r == RScalar(Rat(0), Rat(1)));
  CHECK(r * Rat(2) == RScalar(Rat(0), Rat(1)));
  CHECK(r.str() == "1/2*sqrt(2)");

  // Exact comparison against interval arithmetic on random pairs.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int t = 0; t < 500; ++t) {
    RScalar a(Rat(coef(rng), 7), Rat(coef(rng), 9));
    double approx = a.q.get_d() + a.c.get_d() * 1.4142135623730951;
    if (approx > 1e-9) CHECK(a.sign() == 1);
    if (approx < -1e-9) CHECK(a.sign() == -1);
  }
}

TEST_CASE("roots and evaluation") {
  Ambient sl{GroupType::SL, 4};
  Ambient sp{GroupType::Sp, 3};
  CHECK(sl.apartment_dim() == 3);
  CHECK(sp.apartment_dim() == 3);
  CHECK(all_roots(sl).size() == 12);
  CHECK(all_roots(sp).size() == 18);

  ApartmentPoint pt;
  pt.x = {RScalar(1), RScalar(2), RScalar(3)};
  CHECK(eval_root(Root::diff(0, 2), pt) == RScalar(-2));
  CHECK(eval_root(Root::sum(0, 1), pt) == RScalar(3));
  CHECK(eval_root(Root::sum(1, 1), pt) == RScalar(4));
  CHECK(eval_root(Root::neg_sum(0, 2), pt) == RScalar(-4));
  CHECK(Root::diff(0, 2).negated() == Root::diff(2, 0));
  CHECK(Root::sum(0, 1).negated() == Root::neg_sum(0, 1));
  CHECK(Root::diff(0, 1).positive());
  CHECK(!Root::diff(1, 0).positive());
  CHECK(Root::sum(2, 2).str() == "2e3");
  CHECK(Root::sum(0, 1).str() == "e1+e2");
  CHECK(Root::diff(0, 1).str() == "e1-e2");

  for (const Root& root : all_roots(sp)) {
    auto f = root_functional(3, root);
    RScalar acc;
    for (int i = 0; i < 3; ++i) acc = acc + pt.x[i] * f[i];
    CHECK(acc == eval_root(root, pt));
  }
}

TEST_CASE("root decomposition round trip") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-6, 6);
  Ambient sl{GroupType::SL, 4};
  for (int t = 0; t < 50; ++t) {
    Mat m(4, 4);
    Rat tr(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = Rat(coef(rng));
    for (int i = 0; i < 4; ++i) tr += m.at(i, i);
    m.at(3, 3) -= tr;
    RootDecomposition d = root_decompose(sl, m);
    CHECK(reassemble(sl, d) == m);
  }
  Ambient sp{GroupType::Sp, 2};
  auto basis = sp_basis(2);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < 50; ++t) {
    Mat m(4, 4);
    for (int reps = 0; reps < 6; ++reps) m = m + basis[pick(rng)] * Rat(coef(rng));
    RootDecomposition d = root_decompose(sp, m);
    CHECK(reassemble(sp, d) == m);
    for (const auto& [root, c] : d.components) CHECK(c != 0);
  }
  RootDecomposition idd = root_decompose(sl, Mat::identity(4));
  CHECK(idd.components.empty());
  CHECK(idd.torus == std::vector<Rat>(4, Rat(1)));
  CHECK_THROWS_AS(root_decompose(sl, Mat::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(root_decompose(sp, Mat::identity(4)), std::invalid_argument);

  // Sp component placement: B diagonal reads 2e_i, off-diagonal e_i + e_j.
  Mat x(4, 4);
  x.at(0, 3) = 1;
  x.at(1, 2) = 1;
  RootDecomposition d = root_decompose(sp, x);
  CHECK(d.components.size() == 1);
  CHECK(d.components.at(Root::sum(0, 1)) == Rat(1));
  Mat rs = root_space_matrix(sp, Root::sum(0, 1));
  CHECK(rs == x);
}

TEST_CASE("moy prasad membership") {
  Ambient sl{GroupType::SL, 2};
  LocalField k(5);
  ApartmentPoint origin;
  origin.x = {RScalar(0), RScalar(0)};
  Mat x(2, 2);
  x.at(0, 1) = 1;
  x.at(1, 0) = 0;
  CHECK(moy_prasad_contains(sl, k, x, origin, RScalar(0)));
  CHECK(!moy_prasad_contains(sl, k, x, origin, RScalar(0), true));
  CHECK(!moy_prasad_contains(sl, k, x, origin, default_r()));
  Mat x5 = x * Rat(5);
  CHECK(moy_prasad_contains(sl, k, x5, origin, default_r()));
  Mat h = Mat::diag({Rat(1), Rat(-1)});
  CHECK(moy_prasad_contains(sl, k, h, origin, RScalar(0)));
  CHECK(!moy_prasad_contains(sl, k, h, origin, RScalar(0), true));
  CHECK(moy_prasad_contains(sl, k, h * Rat(5), origin, RScalar(0), true));

  // Nesting: membership at a level implies membership at any lower level.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-25, 25), den(1, 25);
  ApartmentPoint pt;
  pt.x = {default_r() * Rat(1, 3), -(default_r() * Rat(1, 3))};
  for (int t = 0; t < 100; ++t) {
    Mat m(2, 2);
    m.at(0, 0) = Rat(coef(rng), den(rng));
    m.at(1, 1) = -m.at(0, 0);
    m.at(0, 1) = Rat(coef(rng), den(rng));
    m.at(1, 0) = Rat(coef(rng), den(rng));
    if (moy_prasad_contains(sl, k, m, pt, default_r()))
      CHECK(moy_prasad_contains(sl, k, m, pt, RScalar(0)));
    if (moy_prasad_contains(sl, k, m, pt, RScalar(0), true))
      CHECK(moy_prasad_contains(sl, k, m, pt, RScalar(0)));
  }
}

TEST_CASE("facet construction") {
  RScalar r = default_r();
  Ambient sl{GroupType::SL, 4};
  RFacet alcove = facet_from_equalities(sl, {}, r);
  CHECK(alcove.dim == 3);
  RFacet point = facet_from_equalities(
      sl, {{Root::diff(0, 1), 0}, {Root::diff(1, 2), 0}, {Root::diff(2, 3), 0}}, r);
  CHECK(point.dim == 0);
  for (const AffineRoot& e : point.equalities)
    CHECK(eval_root(e.root, point.witness) + RScalar(e.offset) == r);
  RScalar sum;
  for (const RScalar& c : point.witness.x) sum = sum + c;
  CHECK(sum == RScalar(0));

  Ambient sp{GroupType::Sp, 2};
  RFacet line = facet_from_equalities(sp, {{Root::sum(0, 1), 0}}, r);
  CHECK(line.dim == 1);
  CHECK(eval_root(Root::sum(0, 1), line.witness) == r);
  // Pinning both 2e_i pins e_1 + e_2 as well; still a valid dim 0 facet.
  RFacet pt0 = facet_from_equalities(sp, {{Root::sum(0, 0), 0}, {Root::sum(1, 1), 0}}, r);
  CHECK(pt0.dim == 0);
  CHECK(eval_root(Root::sum(0, 1), pt0.witness) == r);

  CHECK_THROWS_AS(facet_from_equalities(
                      sl, {{Root::diff(0, 1), 0}, {Root::diff(0, 1), 1}}, r),
                  std::invalid_argument);
  CHECK_THROWS_AS(facet_from_equalities(sp, {{Root::diff(0, 1), 0}, {Root::sum(2, 2), 0}}, r),
                  std::invalid_argument);
}

TEST_CASE("r from mult") {
  RScalar r = r_from_mult(Rat(1, 3));
  CHECK(r.q == Rat(0));
  CHECK(r.c == Rat(1, 3));
  CHECK_THROWS_AS(r_from_mult(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(r_from_mult(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(r_from_mult(Rat(-1, 2)), std::invalid_argument);
}
