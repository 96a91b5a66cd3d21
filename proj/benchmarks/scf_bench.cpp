#include <benchmark/benchmark.h>

#include <random>

#include "scf/classify.hpp"
#include "scf/lambda_calc.hpp"

using namespace scf;

namespace {

const AlgebraId kIds[] = {{AlgebraKind::N2, 1}, {AlgebraKind::N3, 1}, {AlgebraKind::SmallN4, 1}, {AlgebraKind::BigN4, 1}};

HighestWeight weight(AlgebraId id, const Scalar& delta, long l) {
  HighestWeight hw{delta, Scalar(l), std::nullopt};
  if (id.kind == AlgebraKind::BigN4) hw.lambda_bar = Scalar(l);
  return hw;
}

}  // namespace

static void BM_ScalarSymbolic(benchmark::State& st) {
  const Scalar d = Scalar::param(Param::Delta);
  for (auto _ : st) {
    Scalar x = (d * d + Scalar::sqrt2() * d + Scalar::i()) / (d + Scalar(3));
    benchmark::DoNotOptimize(x * (d + Scalar(3)) - d * d);
  }
}
BENCHMARK(BM_ScalarSymbolic);

static void BM_ContactBracket(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> tp(-2, 3), mask(0, (1 << n) - 1);
  std::vector<GElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(GElement::monomial(n, tp(rng), static_cast<std::uint8_t>(mask(rng))));
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(contact_bracket(xs[i % 64], xs[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_ContactBracket)->DenseRange(1, 4);

static void BM_AlgebraBracket(benchmark::State& st) {
  Algebra alg(kIds[st.range(0)]);
  std::vector<GenMode> modes;
  for (int d = -2; d <= 4; ++d)
    for (const auto& g : alg.basis_of_degree(d))
      if (alg.in_annihilation(g)) modes.push_back(g);
  std::size_t i = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(alg.bracket(AlgElement(modes[i % modes.size()]), AlgElement(modes[(i * 5 + 1) % modes.size()])));
    ++i;
  }
  st.SetLabel(alg.name());
}
BENCHMARK(BM_AlgebraBracket)->DenseRange(0, 3);

// cold action: a fresh module per iteration, so the action memo starts empty
static void BM_VermaActCold(benchmark::State& st) {
  const AlgebraId id = kIds[st.range(0)];
  for (auto _ : st) {
    VermaModule m(id, weight(id, Scalar::rational(2, 7), 1));
    std::size_t n = 0;
    for (const auto& g : m.positive_generators(2))
      for (int l = 0; l <= 3; ++l)
        for (const auto& k : m.keys_at_level(l)) n += m.act(g, m.basis_vector(k)).size();
    benchmark::DoNotOptimize(n);
  }
  st.SetLabel(algebra_name(id));
}
BENCHMARK(BM_VermaActCold)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_FindSingular(benchmark::State& st) {
  const AlgebraId id = kIds[st.range(0)];
  for (auto _ : st) {
    VermaModule m(id, weight(id, Scalar::rational(1, 2), 1));
    benchmark::DoNotOptimize(find_singular(m, 2));
  }
  st.SetLabel(algebra_name(id));
}
BENCHMARK(BM_FindSingular)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_SingularLocus(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(singular_locus({AlgebraKind::N3, 1}, Scalar(2), std::nullopt, 1));
}
BENCHMARK(BM_SingularLocus)->Unit(benchmark::kMillisecond);

static void BM_ClassificationRow(benchmark::State& st) {
  const AlgebraId id = kIds[st.range(0)];
  const long l = st.range(1);
  for (auto _ : st) {
    std::optional<int> lb;
    if (id.kind == AlgebraKind::BigN4) lb = static_cast<int>(l);
    benchmark::DoNotOptimize(classification_row(id, make_rational(7, 3), static_cast<int>(l), lb));
  }
  st.SetLabel(algebra_name(id) + " generic");
}
BENCHMARK(BM_ClassificationRow)
    ->Args({0, 1})
    ->Args({1, 1})
    ->Args({1, 3})
    ->Args({2, 1})
    ->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ConformalAxioms(benchmark::State& st) {
  auto r = n2_spec();
  for (auto _ : st) benchmark::DoNotOptimize(check_conformal_axioms(r));
}
BENCHMARK(BM_ConformalAxioms)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
