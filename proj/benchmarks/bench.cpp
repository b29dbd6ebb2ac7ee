#include "oracles.hpp"

#include "sasaki/flat.hpp"
#include "sasaki/germ.hpp"
#include "sasaki/group.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sasaki;

static Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> u(-5, 5);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
    return m;
}

static void BM_Rank(benchmark::State& st) {
    const Matrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

static void BM_Rref(benchmark::State& st) {
    const Matrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_CEComplex(benchmark::State& st) {
    const auto d = oracle::heisenberg(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        CEComplex ce(d);
        benchmark::DoNotOptimize(betti_numbers(ce.complex()));
    }
}
BENCHMARK(BM_CEComplex)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TwistedComplex(benchmark::State& st) {
    const auto d = oracle::heisenberg(static_cast<int>(st.range(0)));
    std::vector<Gaussian> a(d.dim), b(d.dim);
    a[1] = 1;
    b[3 % d.dim] = 1;
    const auto bundle = FlatBundleDatum::diagonal({a, b});
    for (auto _ : st) benchmark::DoNotOptimize(attach_bundle(d, bundle).dim(1));
}
BENCHMARK(BM_TwistedComplex)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_DDcLemma(benchmark::State& st) {
    const auto d = oracle::heisenberg(static_cast<int>(st.range(0)));
    const auto tc = attach_bundle(d, FlatBundleDatum::trivial(d.dim, 2));
    for (auto _ : st) benchmark::DoNotOptimize(verify_ddc_lemma(tc).ok());
}
BENCHMARK(BM_DDcLemma)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FormalityChain(benchmark::State& st) {
    const auto d = oracle::heisenberg(2);
    const auto tc = attach_bundle(d, oracle::character(5, 1, Gaussian::i()));
    for (auto _ : st) benchmark::DoNotOptimize(formality_chain(tc).ok());
}
BENCHMARK(BM_FormalityChain)->Unit(benchmark::kMillisecond);

static void BM_GermModel(benchmark::State& st) {
    const auto d = oracle::heisenberg(2);
    const auto bundle = FlatBundleDatum::trivial(5, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) {
        const auto g = build_germ_model(d, bundle);
        benchmark::DoNotOptimize(quadraticity_check(g, 2).verdict);
    }
}
BENCHMARK(BM_GermModel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_CupVanishing(benchmark::State& st) {
    const auto d = oracle::heisenberg(3);
    const auto tc = attach_bundle(d, FlatBundleDatum::trivial(7, 1));
    for (auto _ : st) benchmark::DoNotOptimize(cup_vanishing_check(tc, tc, 2, 2).ok());
}
BENCHMARK(BM_CupVanishing)->Unit(benchmark::kMillisecond);

static void BM_FoxTangent(benchmark::State& st) {
    const GroupPresentation g5{"gamma5",
                               {"a", "b", "x", "y", "c"},
                               {"abABC", "xyXYC", "axAX", "ayAY", "bxBX", "byBY", "acAC", "bcBC", "xcXC", "ycYC"}};
    const auto rho = Representation::trivial(g5, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) {
        benchmark::DoNotOptimize(fox_tangent(g5, rho).h1);
        benchmark::DoNotOptimize(relator_order2(g5, rho).targets.size());
    }
}
BENCHMARK(BM_FoxTangent)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
