#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ugkit/g0.hpp"
#include "ugkit/ideals.hpp"
#include "ugkit/paths.hpp"
#include "ugkit/permutative.hpp"
#include "ugkit/representation.hpp"
#include "ugkit/transfer.hpp"

namespace {

using namespace ugkit;

/// A chain of n vertices where vertex i emits to {i+1, i+2}.
Ultragraph ladder(std::size_t n) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        EdgeSpec e{"e" + std::to_string(i), vs[i], {vs[i + 1]}, {}};
        if (i + 2 < n) e.range.push_back(vs[i + 2]);
        es.push_back(std::move(e));
    }
    return make_graph(vs, es);
}

/// Complete composability on k vertices: every vertex loops to all others.
Ultragraph dense(std::size_t k) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) es.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), vs[i], {vs[j]}, {}});
    return make_graph(vs, es);
}

void BM_SimpleCycles(benchmark::State& state) {
    auto g = dense(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles(g));
}
BENCHMARK(BM_SimpleCycles)->DenseRange(2, 4);

void BM_HsClosure(benchmark::State& state) {
    auto g = ladder(static_cast<std::size_t>(state.range(0)));
    const std::set<VertexId> seed{g.vertices().back()};
    for (auto _ : state) benchmark::DoNotOptimize(hs_closure(g, seed));
}
BENCHMARK(BM_HsClosure)->RangeMultiplier(4)->Range(8, 512);

void BM_Peel(benchmark::State& state) {
    auto g = ladder(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(peel_sequence(g));
}
BENCHMARK(BM_Peel)->RangeMultiplier(4)->Range(8, 128);

void BM_G0Enumerate(benchmark::State& state) {
    auto g = ladder(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(g0_enumerate(g, 1));
}
BENCHMARK(BM_G0Enumerate)->DenseRange(6, 14, 4);

void BM_CkInterval(benchmark::State& state) {
    auto bs = build_standard_interval_bs(ladder(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(verify_ck_relations(bs));
}
BENCHMARK(BM_CkInterval)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_CkDiscrete(benchmark::State& state) {
    auto bs = build_discrete_bs_from_peeling(ladder(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(verify_ck_relations(bs));
}
BENCHMARK(BM_CkDiscrete)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PfViaRep(benchmark::State& state) {
    auto bs = build_standard_interval_bs(ladder(static_cast<std::size_t>(state.range(0))));
    IntervalSet all;
    for (const auto& r : bs.R) all = all.unite(r);
    std::vector<StepPiece> pieces;
    const Rational w = dyadic(4);
    for (const auto& part : all.parts())
        for (Rational x = part.lo; x < part.hi; x += w) pieces.push_back(StepPiece{Interval(x, x + w), 1.0});
    StepFunction phi(std::move(pieces));
    for (auto _ : state) benchmark::DoNotOptimize(pf_via_rep(bs, phi, PfMode::Squared));
}
BENCHMARK(BM_PfViaRep)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
