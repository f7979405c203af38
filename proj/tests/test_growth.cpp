#include <doctest.h>

#include <cstdint>
#include <random>

#include <oca/divisors.hpp>
#include <oca/growth.hpp>

#include "test_util.hpp"

using namespace oca;
using oca_test::decq;

TEST_SUITE("growth") {

TEST_CASE("g at k = 0 is exactly one") {
    Interval g = g_factor(factorize(mpz_class(15)), 0, 2, mpq_class(1, 1000000));
    CHECK(g.contains(mpq_class(1)));
    CHECK(g.width_d() == 0.0);
}

TEST_CASE("multiplicative identity f(p^k n) = g(n,k,p) f(n) on random triples") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint64_t> nd(3, 100000);
    std::uniform_int_distribution<int> kd(1, 4), pi(0, 5);
    std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    mpq_class tol(1, 1000000000);
    int done = 0;
    while (done < 60) {
        std::uint64_t n = nd(rng), p = primes[pi(rng)];
        if (n % p == 0) continue;
        unsigned k = static_cast<unsigned>(kd(rng));
        ++done;
        Factorization fn = factorize(mpz_class(static_cast<unsigned long>(n)));
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        Factorization fpn = factorize(pk * n);
        Interval lhs = f_ratio(fpn, tol);
        Interval rhs = g_factor(fn, k, p, tol) * f_ratio(fn, tol);
        CHECK(oca_test::overlaps(lhs, rhs));
    }
}

TEST_CASE("g rejects non-coprime prime") {
    CHECK_THROWS_AS(g_factor(factorize(mpz_class(10)), 1, 5, mpq_class(1, 1000)), DomainError);
}

TEST_CASE("k_bound certifies decay of g below c") {
    Factorization n = factorize(mpz_class(100001));
    mpq_class c(9, 10), tol(1, 1000000);
    Interval b = k_bound(n, 3, c, tol);
    mpz_class floor_hi;
    b.floor_hi(floor_hi);
    unsigned long L = floor_hi.get_ui() + 1;
    // Any integer exponent above the bound has g(n, k, p) < c.
    for (unsigned long k = L; k < L + 3; ++k) {
        Interval g = g_factor(n, static_cast<unsigned>(k), 3, tol);
        CHECK(Interval::certainly_less(g, Interval::from_mpq(c, 64)));
    }
}

TEST_CASE("ca-like construction on the x = 17 worked example") {
    std::vector<std::pair<std::uint64_t, mpq_class>> schedule = {
        {13, decq("0.67")}, {11, decq("0.91")}, {7, decq("1.06")},
        {5, decq("1.12")},  {3, decq("1.38")},  {2, decq("1.75")}};
    auto res = build_ca_like(17, schedule);
    REQUIRE(res.steps.size() == 6);
    std::vector<unsigned long> L = {1, 1, 1, 2, 3, 12};
    for (std::size_t i = 0; i < 6; ++i) CHECK(res.steps[i].L == L[i]);
    CHECK(res.n.value() == mpz_class("17") * 13 * 11 * 7 * 25 * 27 * 4096);
    CHECK(res.verdict == CaLikeResult::Verdict::CertifiedRobin);
    // Schedule primes must strictly decrease.
    std::vector<std::pair<std::uint64_t, mpq_class>> bad = {{13, decq("0.9")}, {13, decq("0.8")}};
    CHECK_THROWS_AS(build_ca_like(17, bad), DomainError);
    CHECK_THROWS_AS(build_ca_like(16, schedule), DomainError);  // x must be prime
}

TEST_CASE("max_k stationary point") {
    Interval k = max_k(mpz_class(135135), mpq_class(1, 1000000));
    CHECK(oca_test::within_dec(k, "4.3578", "0.0005"));
    // Small n: the root is negative.
    Interval k3 = max_k(mpz_class(3), mpq_class(1, 1000000));
    CHECK(k3.is_negative());
}

TEST_CASE("g curve rises to the stationary point then falls") {
    auto rows = emit_g_curve(factorize(mpz_class(135135)), 2, 8, mpq_class(1, 1000000000));
    REQUIRE(rows.size() == 9);
    // Certified ordering around k* in (4, 5): increasing to k=4, g(5) > g(6) > ...
    for (unsigned k = 0; k < 4; ++k)
        CHECK(Interval::certainly_less(rows[k].g, rows[k + 1].g));
    for (unsigned k = 5; k < 8; ++k)
        CHECK(Interval::certainly_less(rows[k + 1].g, rows[k].g));
}

}  // TEST_SUITE
