#include "baxterlab/combinatorics.hpp"
#include "baxterlab/identities.hpp"
#include "baxterlab/sampling.hpp"
#include "baxterlab/shuffle_oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace baxterlab;

void BM_ExpandP1X(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_p1x(n));
    }
}
BENCHMARK(BM_ExpandP1X)->Arg(4)->Arg(8)->Arg(12);

void BM_ProductSmallElements(benchmark::State& state) {
    const Ring ring = Ring::lambda_int();
    SplitMix64 rng(1);
    const BaxterElement a = sample_element(ring, BaseAlgebra::poly(), rng);
    const BaxterElement b = sample_element(ring, BaseAlgebra::poly(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_ProductSmallElements);

void BM_ProductLongWords(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const Ring ring = Ring::lambda_int();
    const BaxterElement a =
        BaxterElement::from_word(ring, TensorWord(std::vector<std::uint32_t>(len, 1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * a);
    }
}
BENCHMARK(BM_ProductLongWords)->Arg(4)->Arg(6)->Arg(8);

void BM_ProductOracleLongWords(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const Ring ring = Ring::lambda_int();
    const BaxterElement a =
        BaxterElement::from_word(ring, TensorWord(std::vector<std::uint32_t>(len, 1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(product_oracle(a, a));
    }
}
BENCHMARK(BM_ProductOracleLongWords)->Arg(4)->Arg(6)->Arg(8);

void BM_FrobeniusPower(benchmark::State& state) {
    const std::uint64_t p = 5;
    const Ring ring = Ring::mod_p(p, BigInt(1));
    const BaseAlgebra base = BaseAlgebra::quotient(p);
    SplitMix64 rng(7);
    const BaxterElement a = sample_element(ring, base, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(power(a, p));
    }
}
BENCHMARK(BM_FrobeniusPower);

void BM_StirlingTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        StirlingTable table(StirlingTable::Kind::Second);
        table.grow(n);
        benchmark::DoNotOptimize(table.at(n, n / 2));
    }
}
BENCHMARK(BM_StirlingTable)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
