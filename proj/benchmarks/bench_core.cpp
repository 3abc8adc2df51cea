#include "eqcfk/surgery.hpp"

#include <benchmark/benchmark.h>

using namespace eqcfk;

namespace {

const KnotLibrary& lib()
{
    static const KnotLibrary l = KnotLibrary::builtin();
    return l;
}

void BM_HomologyStaircase(benchmark::State& state)
{
    std::vector<int> e;
    for (int i = 1; i <= state.range(0); ++i) e.push_back(2 * i - 1);
    AComplex a = a_minus(share(staircase_from_alexander({e})), 0);
    for (auto _ : state) benchmark::DoNotOptimize(homology_over_U(a.presentation));
    state.SetComplexityN(static_cast<long>(a.presentation.size()));
}
BENCHMARK(BM_HomologyStaircase)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_HomologyTensor(benchmark::State& state)
{
    auto c = lib().get("KsumKr").complex;
    KnotComplex t = tensor(*c, *lib().get("4_1").complex);
    AComplex a = a_minus(share(std::move(t)), 0);
    for (auto _ : state) benchmark::DoNotOptimize(homology_over_U(a.presentation));
}
BENCHMARK(BM_HomologyTensor);

void BM_Classifier(benchmark::State& state)
{
    const char* names[] = {"4_1", "6_2bar", "6_1"};
    auto c = lib().get(names[state.range(0)]).complex;
    for (auto _ : state) {
        Classifier cl(c, MapClass::filtered);
        benchmark::DoNotOptimize(cl.classes().size());
    }
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Classifier)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ConeInvariants(benchmark::State& state)
{
    AComplex a = induce_action_on_A(library_action(lib().get("KsumKr"), ActionKind::composite, lib()));
    for (auto _ : state) benchmark::DoNotOptimize(cone_invariants(a, Flavor::iotatau));
}
BENCHMARK(BM_ConeInvariants);

void BM_CompareLocal(benchmark::State& state)
{
    IotaComplex m = iota_complex(induce_action_on_A(library_action(lib().get("4_1"), ActionKind::periodic, lib())));
    IotaComplex t = trivial_iota_complex();
    for (auto _ : state) benchmark::DoNotOptimize(compare_local(m, t));
}
BENCHMARK(BM_CompareLocal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
