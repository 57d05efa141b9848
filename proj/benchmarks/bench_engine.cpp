#include <benchmark/benchmark.h>

#include <random>

#include "jacring/groebner.hpp"
#include "jacring/ideal.hpp"
#include "jacring/linkage.hpp"
#include "jacring/oracle.hpp"
#include "jacring/parser.hpp"

using namespace jacring;

namespace {

RingPtr ring(std::size_t nv, std::uint32_t p) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  return RingContext::make(std::vector<std::string>(names, names + nv), p);
}

Polynomial fermat(const RingPtr& r, int d) {
  std::string text;
  for (const auto& v : r->variable_names()) text += (text.empty() ? "" : " + ") + v + "^" + std::to_string(d);
  return parse_polynomial(text, *r);
}

// Dense random forms in 3 variables; generic enough that the basis is not trivial.
std::vector<Polynomial> random_forms(const RingPtr& r, int count, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Term> terms;
    for (const auto& m : r->monomials_of_degree(degree)) {
      terms.push_back({r->field().from_int(static_cast<long long>(rng() % 1000)), m});
    }
    out.push_back(Polynomial::from_terms(*r, std::move(terms)));
  }
  return out;
}

}  // namespace

static void BM_GroebnerRandom(benchmark::State& state) {
  const auto r = ring(3, state.range(1) ? 0 : 32003);
  const auto gens = random_forms(r, 3, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(r, gens));
}
BENCHMARK(BM_GroebnerRandom)->ArgsProduct({{2, 3, 4}, {0, 1}})->ArgNames({"deg", "rational"})
    ->Unit(benchmark::kMillisecond);

static void BM_Saturate(benchmark::State& state) {
  const auto r = ring(3, 32003);
  const auto gens = jacobian_ideal(r, parse_polynomial("x^4 + y^4 + x^2*y*z", *r)).ideal.generators();
  for (auto _ : state) benchmark::DoNotOptimize(saturate(Ideal(r, gens)));
}
BENCHMARK(BM_Saturate)->Unit(benchmark::kMillisecond);

static void BM_FullReportFermat(benchmark::State& state) {
  const auto r = ring(static_cast<std::size_t>(state.range(0)), 32003);
  const Polynomial f = fermat(r, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(full_report(r, f));
}
BENCHMARK(BM_FullReportFermat)->Args({3, 3})->Args({4, 4})->Args({4, 5})->ArgNames({"vars", "deg"})
    ->Unit(benchmark::kMillisecond);

static void BM_FullReportCayley(benchmark::State& state) {
  const auto r = ring(4, 32003);
  const Polynomial f = parse_polynomial("x*y*z + x*y*w + x*z*w + y*z*w", *r);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(r, f));
}
BENCHMARK(BM_FullReportCayley)->Unit(benchmark::kMillisecond);

static void BM_OracleQuotientDim(benchmark::State& state) {
  const auto r = ring(4, 32003);
  const auto gens = jacobian_ideal(r, fermat(r, 4)).ideal.generators();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(macaulay_dim(*r, gens, k));
}
BENCHMARK(BM_OracleQuotientDim)->Arg(4)->Arg(6)->Arg(8)->ArgName("k")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
