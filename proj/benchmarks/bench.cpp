#include <benchmark/benchmark.h>

#include <oca/abundant.hpp>
#include <oca/criteria.hpp>
#include <oca/divisors.hpp>
#include <oca/expr.hpp>
#include <oca/primes.hpp>
#include <oca/sigma_sieve.hpp>

using namespace oca;

static void BM_sieve(benchmark::State& state) {
    const std::uint64_t limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        PrimeTable t = sieve(limit);
        benchmark::DoNotOptimize(t.primes.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(limit));
}
BENCHMARK(BM_sieve)->Arg(100000)->Arg(1000000)->Arg(10000000);

static void BM_sigma_range(benchmark::State& state) {
    PrimeTable base = sieve(1024);
    const std::uint64_t span = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto s = sigma_range(1000000 - span + 1, 1000000, base);
        benchmark::DoNotOptimize(s.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(span));
}
BENCHMARK(BM_sigma_range)->Arg(10000)->Arg(100000);

static void BM_theta(benchmark::State& state) {
    PrimeTable t = sieve(static_cast<std::uint64_t>(state.range(0)));
    mpq_class tol(1, 1000000000);
    for (auto _ : state) {
        Interval v = theta(t, mpq_class(static_cast<unsigned long>(state.range(0))), false, tol);
        benchmark::DoNotOptimize(&v);
    }
}
BENCHMARK(BM_theta)->Arg(100000)->Arg(1000000);

static void BM_critical_epsilons(benchmark::State& state) {
    for (auto _ : state) {
        auto evs = critical_epsilons(static_cast<std::uint64_t>(state.range(0)), Parity::Odd);
        benchmark::DoNotOptimize(evs.data());
    }
}
BENCHMARK(BM_critical_epsilons)->Arg(70)->Arg(200);

static void BM_robin_check_c0(benchmark::State& state) {
    Factorization c0 =
        Factorization::parse("3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67");
    for (auto _ : state) {
        CheckReport rep = robin_check(c0, ThresholdKind::HalfEgamma);
        benchmark::DoNotOptimize(&rep);
    }
}
BENCHMARK(BM_robin_check_c0);

static void BM_scan_robin(benchmark::State& state) {
    for (auto _ : state) {
        ScanResult r = scan_robin(5041, static_cast<std::uint64_t>(state.range(0)),
                                  ThresholdKind::Egamma, Parity::All, 0);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_scan_robin)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
