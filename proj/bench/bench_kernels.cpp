// Serial reference vs OpenMP versions of the element-level kernels.

#include <benchmark/benchmark.h>

#include "partalg/kernels.hpp"
#include "partalg/partitions.hpp"

using namespace partalg;

namespace {

struct Fixture {
    FiniteGroup g;
    GoodPartition p;
};

const Fixture& fixture(int which) {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        for (const char* id : {"Sn:5", "SL2:5", "Sn:6"}) {
            FiniteGroup g = builtin_group(id);
            const ClassData cd = conjugacy_classes(g);
            GoodPartition p = build_partition(g, cd, PartitionSpec::trivial());
            v.push_back({std::move(g), std::move(p)});
        }
        return v;
    }();
    return all.at(which);
}

template <bool Parallel>
void BM_block_products(benchmark::State& st) {
    const auto& f = fixture(st.range(0));
    for (auto _ : st) {
        auto r = Parallel ? kernels::block_products(f.g, f.p.elements, f.p.elem_block)
                          : kernels::serial::block_products(f.g, f.p.elements, f.p.elem_block);
        benchmark::DoNotOptimize(r.a.data());
    }
    st.SetLabel(f.g.origin());
}

template <bool Parallel>
void BM_commutator_multiplicity(benchmark::State& st) {
    const auto& f = fixture(st.range(0));
    for (auto _ : st) {
        auto r = Parallel ? kernels::commutator_multiplicity(f.g) : kernels::serial::commutator_multiplicity(f.g);
        benchmark::DoNotOptimize(r.data());
    }
    st.SetLabel(f.g.origin());
}

template <bool Parallel>
void BM_pair_weights(benchmark::State& st) {
    const auto& f = fixture(st.range(0));
    for (auto _ : st) {
        std::uint64_t scale = 1;
        auto r = Parallel ? kernels::pair_weights(f.g, f.p.elements, f.p.inverse_block, scale)
                          : kernels::serial::pair_weights(f.g, f.p.elements, f.p.inverse_block, scale);
        benchmark::DoNotOptimize(r.data());
    }
    st.SetLabel(f.g.origin());
}

template <bool Parallel>
void BM_tuple_sums(benchmark::State& st) {
    const auto& f = fixture(st.range(0));
    const unsigned r = static_cast<unsigned>(st.range(1));
    const auto w = kernels::serial::commutator_multiplicity(f.g);
    for (auto _ : st) {
        auto s = Parallel ? kernels::tuple_sums(f.g, f.p.elem_block, f.p.n(), w, r)
                          : kernels::serial::tuple_sums(f.g, f.p.elem_block, f.p.n(), w, r);
        benchmark::DoNotOptimize(s.data());
    }
    st.SetLabel(f.g.origin() + " r=" + std::to_string(r));
}

template <bool Parallel>
void BM_associativity(benchmark::State& st) {
    const auto& f = fixture(st.range(0));
    for (auto _ : st) {
        auto v = Parallel ? kernels::associativity_violation(f.g.order(), f.g.table(), 0, 1)
                          : kernels::serial::associativity_violation(f.g.order(), f.g.table(), 0, 1);
        benchmark::DoNotOptimize(v);
    }
    st.SetLabel(f.g.origin());
}

}  // namespace

BENCHMARK(BM_block_products<false>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_block_products<true>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_commutator_multiplicity<false>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_commutator_multiplicity<true>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_pair_weights<false>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_weights<true>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_tuple_sums<false>)->Args({0, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tuple_sums<true>)->Args({0, 3})->Args({2, 2})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_associativity<false>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_associativity<true>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
