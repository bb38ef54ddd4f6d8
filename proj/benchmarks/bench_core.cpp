#include <benchmark/benchmark.h>

#include "crsym/equivalence.hpp"
#include "crsym/normal_form.hpp"

using namespace crsym;

namespace {

GaussianRational g(long re, long im = 0) { return {Rational(re), Rational(im)}; }

WeightedSeries dense_series(int k, int W) {
    WeightedSeries s(k, W);
    long n = 1;
    for (int gamma = 0; k * gamma <= W; ++gamma)
        for (int alpha = 0; alpha + k * gamma <= W; ++alpha)
            for (int beta = 0; alpha + beta + k * gamma <= W; ++beta) {
                ++n;
                s.add_term({alpha, beta, gamma}, GaussianRational(rat(n % 7 - 3, (n % 3) + 1)));
            }
    return s;
}

Hypersurface e5(int W) {
    return validate_surface(
        series_make({{{2, 2, 0}, g(1)}, {{6, 2, 0}, g(1)}, {{2, 6, 0}, g(1)}}, 4, W));
}

}  // namespace

static void BM_SeriesMul(benchmark::State& state) {
    const int W = static_cast<int>(state.range(0));
    auto a = dense_series(4, W);
    auto b = dense_series(4, W);
    for (auto _ : state) {
        auto c = series_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Arg(16);

static void BM_Substitute(benchmark::State& state) {
    const int W = static_cast<int>(state.range(0));
    auto F = dense_series(4, W);
    auto Z = series_add(series_z(4, W), series_make({{{2, 0, 0}, g(1)}}, 4, W));
    auto Zb = series_conjugate(Z);
    auto U = series_add(series_u(4, W), series_make({{{2, 2, 0}, g(1)}}, 4, W));
    for (auto _ : state) {
        auto r = series_substitute(F, Z, Zb, U);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Substitute)->Arg(8)->Arg(12);

static void BM_Pushforward(benchmark::State& state) {
    const int W = static_cast<int>(state.range(0));
    auto M = e5(W);
    auto m = ok_model_automorphism({Rational(2), ExactPhase::root(4, 1), Rational(1)}, 4, W);
    for (auto _ : state) {
        auto r = pushforward_series(M.F, m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Pushforward)->Arg(12)->Arg(16)->Arg(20);

static void BM_Normalize(benchmark::State& state) {
    const int W = static_cast<int>(state.range(0));
    auto M = e5(W);
    for (auto _ : state) {
        auto r = normalize(M);
        benchmark::DoNotOptimize(r.nf);
    }
}
BENCHMARK(BM_Normalize)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Equivalent(benchmark::State& state) {
    auto A = e5(16);
    auto B = pushforward(A, HoloMapPair::diagonal(g(2), Rational(16), 4, 16));
    for (auto _ : state) {
        auto cert = equivalent(A, B);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_Equivalent)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
