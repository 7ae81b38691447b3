#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "origami/cover.hpp"
#include "origami/veech.hpp"

using namespace origami;

namespace {

Origami random_origami(std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Point> pts(2 * d);
    auto involution = [&] {
      std::iota(pts.begin(), pts.end(), Point{0});
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<Point> img(2 * d);
      for (std::size_t i = 0; i < pts.size(); i += 2) {
        img[pts[i]] = pts[i + 1];
        img[pts[i + 1]] = pts[i];
      }
      return SPerm::from_perm(Perm::from_images(img));
    };
    Origami o(involution(), involution(), true);
    if (o.connected()) return o;
  }
}

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Origami o = random_origami(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(o));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(24)->Arg(96);

void BM_OrbitStabilizer(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Origami o = random_origami(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_stabilizer(o, Mode::projective).index);
}
BENCHMARK(BM_OrbitStabilizer)->Arg(4)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CoverVeech(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  MonodromyTuple t;
  for (;;) {
    t = MonodromyTuple{N, {}};
    for (int i = 0; i < 7; ++i) {
      std::vector<Point> img(N);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      t.perms.push_back(Perm::from_images(img));
    }
    if (validate(marking_D(), t).empty()) break;
  }
  for (auto _ : state) benchmark::DoNotOptimize(cover_veech_group(marking_D(), t).index);
}
BENCHMARK(BM_CoverVeech)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
