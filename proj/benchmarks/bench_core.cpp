#include <benchmark/benchmark.h>

#include <memory>

#include "cetaev/analysis.hpp"
#include "cetaev/corpus.hpp"
#include "cetaev/hamiltonian.hpp"
#include "cetaev/hypotheses.hpp"
#include "cetaev/krasovskii.hpp"
#include "cetaev/regions.hpp"
#include "cetaev/sphere.hpp"

namespace {

using namespace cetaev;

void BM_PolynomialProduct(benchmark::State& state)
{
    const Polynomial p = paper_pi();
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * p);
    }
}
BENCHMARK(BM_PolynomialProduct);

void BM_RadialDerivative(benchmark::State& state)
{
    const Polynomial p = pow(paper_pi(), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_derivative(p));
    }
}
BENCHMARK(BM_RadialDerivative);

void BM_ExactEvaluation(benchmark::State& state)
{
    const Polynomial p = paper_pi();
    const std::vector<Rational> q = {Rational::from_double(0.731), Rational::from_double(-0.2875)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.evaluate_exact(q));
    }
}
BENCHMARK(BM_ExactEvaluation);

void BM_FloatEvaluation(benchmark::State& state)
{
    const FloatPolynomial p(paper_pi());
    const std::vector<double> q = {0.731, -0.2875};
    for (auto _ : state) {
        benchmark::DoNotOptimize(p(q));
    }
}
BENCHMARK(BM_FloatEvaluation);

void BM_DirectionSet(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        DirectionSet d(n, n == 2 ? 4096 : 5000);
        benchmark::DoNotOptimize(d.size());
    }
}
BENCHMARK(BM_DirectionSet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LabelRegions(benchmark::State& state)
{
    const auto dirs = std::make_shared<const DirectionSet>(2, static_cast<std::size_t>(state.range(0)));
    const auto field = PotentialField::from_polynomial(paper_pi(), 12);
    const auto pair = field_pair(field, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(label_regions(pair, dirs, 0.9, 1e-9));
    }
}
BENCHMARK(BM_LabelRegions)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_AnalyzePaperExample(benchmark::State& state)
{
    const auto& e = find_entry("paper-example");
    AnalysisRequest req{e.field, {}, e.name, e.s, e.epsilon, 0, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(req));
    }
}
BENCHMARK(BM_AnalyzePaperExample)->Unit(benchmark::kMillisecond);

void BM_IntegrateQuarticWell(benchmark::State& state)
{
    const HamiltonianSystem sys(find_entry("quartic-well").field);
    const std::vector<double> x = {0.01, 0.005, 0.0, 0.001};
    IntegrationOptions opts;
    opts.domain_bound = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(sys, x, 0.0, 50.0, TimeDirection::Forward, opts));
    }
}
BENCHMARK(BM_IntegrateQuarticWell)->Unit(benchmark::kMillisecond);

void BM_KrasovskiiQuarticWell(benchmark::State& state)
{
    const HamiltonianSystem sys(find_entry("quartic-well").field);
    const KrasovskiiRegion region{0.5, {1.0, 0.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_asymptotic_trajectory(sys, region));
    }
}
BENCHMARK(BM_KrasovskiiQuarticWell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
