#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include <oca/divisors.hpp>
#include <oca/primes.hpp>
#include <oca/sigma_sieve.hpp>

#include "test_util.hpp"

using namespace oca;

namespace {

std::uint64_t brute_sigma(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

std::uint64_t brute_phi(std::uint64_t n) {
    std::uint64_t c = 0;
    auto gcd = [](std::uint64_t a, std::uint64_t b) {
        while (b) { std::uint64_t t = a % b; a = b; b = t; }
        return a;
    };
    for (std::uint64_t k = 1; k <= n; ++k)
        if (gcd(k, n) == 1) ++c;
    return c;
}

bool brute_squarefree(std::uint64_t n) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

}  // namespace

TEST_SUITE("divisors") {

TEST_CASE("factorize round trip and parse") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)));
        CHECK(f.value() == n);
        CHECK(Factorization::parse(f.str()).value() == n);
        CHECK(Factorization::parse_json(f.json()).value() == n);
    }
    Factorization big = Factorization::parse("3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67");
    CHECK(big.value() == mpz_class("18565284664427130919514350125"));
    CHECK(big.is_odd());
    CHECK_THROWS(Factorization::parse("4^2"));   // 4 is not prime
    CHECK_THROWS(Factorization::parse("5*3"));   // wrong order
}

TEST_CASE("sigma matches brute force up to 10^4") {
    for (std::uint64_t n = 1; n <= 10000; ++n)
        CHECK(sigma(factorize(mpz_class(static_cast<unsigned long>(n)))) == brute_sigma(n));
}

TEST_CASE("sigma is multiplicative on coprime pairs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> d(2, 5000);
    auto gcd = [](std::uint64_t a, std::uint64_t b) {
        while (b) { std::uint64_t t = a % b; a = b; b = t; }
        return a;
    };
    int done = 0;
    while (done < 200) {
        std::uint64_t a = d(rng), b = d(rng);
        if (gcd(a, b) != 1) continue;
        ++done;
        mpz_class sa = sigma(factorize(mpz_class(static_cast<unsigned long>(a))));
        mpz_class sb = sigma(factorize(mpz_class(static_cast<unsigned long>(b))));
        mpz_class sab = sigma(factorize(mpz_class(static_cast<unsigned long>(a * b))));
        CHECK(sab == sa * sb);
    }
}

TEST_CASE("segmented sigma sieve agrees with factorization") {
    PrimeTable base = sieve(1000);
    auto block = sigma_range(999001, 1000000, base);
    for (std::uint64_t n = 999001; n <= 1000000; n += 97)
        CHECK(mpz_class(block[n - 999001]) ==
              sigma(factorize(mpz_class(static_cast<unsigned long>(n)))));
    auto small = sigma_range(1, 300, sieve(100));
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(small[n - 1] == brute_sigma(n));
}

TEST_CASE("sigma_mod restricts to a residue class") {
    // 45 = 3^2 * 5: primes 3 (3 mod 4) and 5 (1 mod 4).
    Factorization f = factorize(mpz_class(45));
    CHECK(sigma_mod(f, 4, 3) == 13);  // sigma(3^2)
    CHECK(sigma_mod(f, 4, 1) == 6);   // sigma(5)
    CHECK(sigma_mod(f, 4, 3) * sigma_mod(f, 4, 1) == sigma(f));
    CHECK(sigma_mod(factorize(mpz_class(1)), 4, 1) == 1);
    CHECK_THROWS_AS(sigma_mod(f, 0, 1), DomainError);
}

TEST_CASE("euler_phi and is_squarefree match brute force") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)));
        CHECK(euler_phi(f) == brute_phi(n));
        CHECK(is_squarefree(f) == brute_squarefree(n));
    }
}

TEST_CASE("f_ratio encloses known values") {
    mpq_class tol(1, 100000000);
    Interval f5040 = f_ratio(factorize(mpz_class(5040)), tol);
    CHECK(oca_test::within_dec(f5040, "1.790973366534881", "0.000000000000001"));
    // Interval and expression forms agree.
    Interval viaExpr = eval(f_ratio_expr(factorize(mpz_class(5040))), tol);
    CHECK(oca_test::overlaps(f5040, viaExpr));
    CHECK_THROWS_AS(f_ratio(factorize(mpz_class(2)), tol), DomainError);
}

}  // TEST_SUITE
