#include <benchmark/benchmark.h>

#include <random>

#include "paramodular/ring.hpp"
#include "paramodular/tables.hpp"

using namespace paramodular;

namespace {

RingElt random_elt(std::mt19937& rng, int terms) {
    static const char* pool[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<int> expo(-5, 5);
    std::uniform_int_distribution<int> num(-9, 9);
    RingElt out;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int j = 0; j < 3; ++j) {
            int e = expo(rng);
            if (e) m[pool[pick(rng)]] += e;
        }
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
        out += RingElt::monomial(Rational(num(rng)), m);
    }
    return out;
}

} // namespace

static void MulLaurent(benchmark::State& state) {
    std::mt19937 rng(7);
    RingElt a = random_elt(rng, static_cast<int>(state.range(0)));
    RingElt b = random_elt(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RingElt c = a * b;
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MulLaurent)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void SubstituteQuadratic(benchmark::State& state) {
    std::mt19937 rng(11);
    RingElt e = random_elt(rng, static_cast<int>(state.range(0)));
    std::map<std::string, RingElt> bind = {{"a", RingElt::from_int(-1)},
                                           {"b", RingElt::from_int(1)}};
    for (auto _ : state) {
        RingElt c = e.substitute(bind);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(SubstituteQuadratic)->Arg(16)->Arg(64);

static void ReduceSqrt(benchmark::State& state) {
    std::mt19937 rng(13);
    RingElt e = random_elt(rng, 32) * sym::r(3);
    for (auto _ : state) {
        RingElt c = e.reduce_sqrt(5);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(ReduceSqrt);

static void QuarticFactorExpansion(benchmark::State& state) {
    RingElt a = RingElt::variable("a"), b = RingElt::variable("b");
    RingElt lam = sym::q_half(3) * (a + a.pow(-1) + b + b.pow(-1));
    RingElt mu = sym::q(2) * (RingElt::one() - sym::q_half(-4) +
                              (a + a.pow(-1)) * (b + b.pow(-1)));
    for (auto _ : state) {
        EulerFactor f = paramodular_euler_factor(0, RingElt::one(), lam, mu);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(QuarticFactorExpansion);
