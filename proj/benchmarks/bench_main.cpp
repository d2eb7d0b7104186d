#include <benchmark/benchmark.h>

#include "hyp/hyperbolicity.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"

using namespace hyp;

namespace {

PointQ pt(std::initializer_list<long> c) {
    PointQ p;
    for (long x : c) p.push_back(Rational(x));
    return p;
}

const MultiPoly kQuartic = parse_poly("(x1^2+x2^2-2*x3^2)*(2*x1^2-x2^2-x3^2)", 3);

UniPoly random_poly(CounterRng& rng, int deg) {
    std::vector<Rational> c(deg + 1);
    for (int k = 0; k <= deg; ++k) c[k] = Rational(rng.uniform_int(-20, 20));
    if (c[deg] == 0) c[deg] = 1;
    return UniPoly(std::move(c));
}

void BM_CountRealRoots(benchmark::State& state) {
    CounterRng rng(1, 0);
    std::vector<UniPoly> polys;
    for (int i = 0; i < 64; ++i) polys.push_back(random_poly(rng, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_real_roots(polys[i % polys.size()]));
        ++i;
    }
}
BENCHMARK(BM_CountRealRoots)->Arg(4)->Arg(8);

void BM_RestrictLine(benchmark::State& state) {
    PointQ e = pt({1, 0, 1});
    PointQ v = pt({3, -2, 5});
    for (auto _ : state) benchmark::DoNotOptimize(restrict_line(kQuartic, e, v));
}
BENCHMARK(BM_RestrictLine);

void BM_InCone(benchmark::State& state) {
    PointQ e = pt({1, 0, 1});
    PointQ x = pt({5, 1, 4});
    for (auto _ : state) benchmark::DoNotOptimize(in_cone(kQuartic, e, x));
}
BENCHMARK(BM_InCone);

void BM_CheckHyperbolic(benchmark::State& state) {
    PointQ e = pt({1, 0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_hyperbolic(kQuartic, e, static_cast<int>(state.range(0)), 7));
}
BENCHMARK(BM_CheckHyperbolic)->Arg(16)->Arg(64);

void BM_CountComponents(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(count_components(kQuartic, static_cast<int>(state.range(0)), 7, 16));
}
BENCHMARK(BM_CountComponents)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
