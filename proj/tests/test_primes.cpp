#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <vector>

#include <oca/primes.hpp>

#include "test_util.hpp"

using namespace oca;
using oca_test::decq;

namespace {

std::vector<std::uint64_t> brute_primes(std::uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

}  // namespace

TEST_SUITE("primes") {

TEST_CASE("sieve matches a direct sieve") {
    for (std::uint64_t limit : {2ULL, 3ULL, 10ULL, 97ULL, 100ULL, 10000ULL, 65537ULL}) {
        PrimeTable t = sieve(limit);
        CHECK(t.primes == brute_primes(limit));
    }
    CHECK(sieve(100).primes.size() == 25);
    CHECK(sieve(1000000).primes.size() == 78498);
    CHECK_THROWS_AS(sieve(1), DomainError);
}

TEST_CASE("count_below") {
    PrimeTable t = sieve(100);
    CHECK(t.count_below(mpq_class(2)) == 1);
    CHECK(t.count_below(mpq_class(97)) == 25);
    CHECK(t.count_below(mpq_class(193, 2)) == 24);  // 96.5
    CHECK(t.count_below(1.5) == 0);
    CHECK(t.contains(89));
    CHECK(!t.contains(91));
}

TEST_CASE("cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "oca_sieve_test";
    std::filesystem::remove_all(dir);
    set_sieve_cache_dir(dir);
    PrimeTable a = sieve(20000);
    CHECK(std::filesystem::exists(dir));
    PrimeTable b = sieve(20000);  // loaded from the cache file
    CHECK(a.primes == b.primes);
    set_sieve_cache_dir(std::nullopt);
    std::filesystem::remove_all(dir);
}

TEST_CASE("theta basics and monotonicity") {
    PrimeTable t = sieve(1000);
    mpq_class tol(1, 1000000000);
    Interval t10 = theta(t, mpq_class(10), false, tol);
    // log 2 + log 3 + log 5 + log 7 = log 210
    CHECK(oca_test::within_dec(t10, "5.34710753071747", "0.00000000000001"));
    Interval t10o = theta(t, mpq_class(10), true, tol);  // log 105
    CHECK(oca_test::within_dec(t10o, "4.65396035015752", "0.00000000000001"));
    Interval a = theta(t, mpq_class(100), false, tol);
    Interval b = theta(t, mpq_class(1000), false, tol);
    CHECK(Interval::certainly_less(a, b));
}

TEST_CASE("theta bounds: x - 2.05282 sqrt(x) < theta(x) < 1.000081 x") {
    PrimeTable t = sieve(1000000);
    mpq_class tol(1, 1000000);
    for (std::uint64_t x :
         {149ULL, 1000ULL, 5000ULL, 20000ULL, 100000ULL, 500000ULL, 1000000ULL}) {
        Interval th = theta(t, mpq_class(x), false, tol);
        Interval lo = Interval::from_mpq(mpq_class(x), 96) -
                      Interval::from_mpq(decq("2.05282"), 96) *
                          sqrt(Interval::from_mpq(mpq_class(x), 96));
        Interval hi = Interval::from_mpq(decq("1.000081") * x, 96);
        CHECK(Interval::certainly_less(lo, th));
        CHECK(Interval::certainly_less(th, hi));
    }
}

TEST_CASE("a_func combines three theta terms") {
    PrimeTable t = sieve(2000);
    mpq_class tol(1, 1000000);
    Interval a = a_func(t, mpq_class(500), tol);
    // A(x) >= theta'(x) alone.
    Interval th = theta(t, mpq_class(500), true, tol);
    CHECK(!Interval::certainly_less(a, th));
    CHECK(a.is_positive());
    CHECK_THROWS_AS(a_func(t, mpq_class(2), tol), DomainError);
}

}  // TEST_SUITE
