#include <benchmark/benchmark.h>

#include <random>

#include "qss/exactla.hpp"
#include "qss/groupaction.hpp"
#include "qss/quillen.hpp"
#include "qss/semisimplicial.hpp"
#include "qss/spectral.hpp"

using namespace qss;

namespace {

la::RationalMatrix random_matrix(std::size_t n, int density_pct, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pct(0, 99), val(-4, 4);
  la::RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (pct(rng) < density_pct) m.set(r, c, val(rng));
  return m;
}

std::shared_ptr<const grp::GroupAction> words_action(int n) {
  auto g = std::make_shared<const grp::FiniteGroup>(grp::FiniteGroup::symmetric(n));
  auto x = std::make_shared<const ss::SemiSimplicialComplex>(ss::injective_words_complex(n));
  return std::make_shared<const grp::GroupAction>(grp::GroupAction::letter_action(g, x));
}

void BM_RankSparse(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(la::rank(m));
}
BENCHMARK(BM_RankSparse)->Arg(50)->Arg(100)->Arg(200);

void BM_RankDense(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 60, 2);
  for (auto _ : state) benchmark::DoNotOptimize(la::rank(m));
}
BENCHMARK(BM_RankDense)->Arg(20)->Arg(40);

void BM_CoboundaryRank(benchmark::State& state) {
  const auto c = ss::augmented_cochain_complex(ss::injective_words_complex(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(la::cohomology_dims(c));
}
BENCHMARK(BM_CoboundaryRank)->Arg(4)->Arg(5);

void BM_GenericFlag(benchmark::State& state) {
  const auto a = words_action(static_cast<int>(state.range(0)));
  const int depth = static_cast<int>(state.range(0)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(grp::generic_flag(a, depth));
}
BENCHMARK(BM_GenericFlag)->Arg(4)->Arg(5);

void BM_GroupDoubleComplexS3(benchmark::State& state) {
  const auto a = words_action(3);
  for (auto _ : state) benchmark::DoNotOptimize(spec::build_group_double_complex(*a, 4, 4, 4));
}
BENCHMARK(BM_GroupDoubleComplexS3)->Unit(benchmark::kMillisecond);

void BM_SpectralSequenceS3(benchmark::State& state) {
  const auto a = words_action(3);
  const auto dc = spec::build_group_double_complex(*a, 4, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(spec::spectral_sequence(dc, spec::Filtration::Horizontal, 3));
}
BENCHMARK(BM_SpectralSequenceS3)->Unit(benchmark::kMillisecond);

void BM_StabilityTableGL(benchmark::State& state) {
  const auto gl = quillen::StabilityProfile::general_linear();
  for (auto _ : state) benchmark::DoNotOptimize(quillen::stability_table(gl, 8, 64));
}
BENCHMARK(BM_StabilityTableGL);

}  // namespace

BENCHMARK_MAIN();
