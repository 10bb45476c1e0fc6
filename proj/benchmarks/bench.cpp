#include <benchmark/benchmark.h>

#include <random>

#include "nilorbits/debacker.hpp"
#include "nilorbits/report.hpp"

using namespace nilorbits;

static void BM_EnumerateSpOrbits(benchmark::State& state) {
  LocalField k(5);
  for (auto _ : state) {
    auto orbits = enumerate_sp_orbits(k, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(orbits);
  }
}
BENCHMARK(BM_EnumerateSpOrbits)->Arg(2)->Arg(3)->Arg(4);

static void BM_ClassifySp(benchmark::State& state) {
  LocalField k(5);
  auto orbits = enumerate_sp_orbits(k, static_cast<int>(state.range(0)));
  std::vector<Mat> reps;
  for (const SpOrbit& o : orbits) reps.push_back(sp_representative(k, o));
  for (auto _ : state) {
    for (const Mat& x : reps) {
      auto c = classify_sp(k, x);
      benchmark::DoNotOptimize(c);
    }
  }
}
BENCHMARK(BM_ClassifySp)->Arg(2)->Arg(3);

static void BM_Hilbert(benchmark::State& state) {
  LocalField k(7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-4000, 4000), den(1, 4000);
  std::vector<std::pair<Rat, Rat>> pairs;
  for (int i = 0; i < 256; ++i) {
    long a = num(rng), b = num(rng);
    if (a == 0 || b == 0) {
      --i;
      continue;
    }
    Rat ra(a, den(rng)), rb(b, den(rng));
    ra.canonicalize();
    rb.canonicalize();
    pairs.emplace_back(ra, rb);
  }
  for (auto _ : state)
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(k.hilbert(a, b));
}
BENCHMARK(BM_Hilbert);

static void BM_ApartmentSlice(benchmark::State& state) {
  LocalField k(5);
  int n = static_cast<int>(state.range(0));
  auto orbits = enumerate_sp_orbits(k, n);
  Ambient amb{GroupType::Sp, n};
  RScalar r = default_r();
  std::vector<LieTriple> triples;
  for (const SpOrbit& o : orbits) triples.push_back(sp_lie_triple(k, o));
  for (auto _ : state) {
    for (const LieTriple& t : triples) {
      auto s = apartment_slice(amb, k, t, r, 1);
      benchmark::DoNotOptimize(s);
    }
  }
}
BENCHMARK(BM_ApartmentSlice)->Arg(2)->Arg(3);

static void BM_Rref(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-9, 9);
  int n = static_cast<int>(state.range(0));
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(coef(rng), 1 + (j % 3));
  for (auto _ : state) {
    Mat c = m;
    benchmark::DoNotOptimize(c.rank());
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
