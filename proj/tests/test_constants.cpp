#include <doctest.h>

#include <cmath>

#include <oca/constants.hpp>
#include <oca/expr.hpp>
#include <oca/primes.hpp>

#include "test_util.hpp"

using namespace oca;
using oca_test::decq;

TEST_SUITE("constants") {

TEST_CASE("gamma and egamma against validated digits") {
    Interval g = gamma_const(30);
    CHECK(oca_test::within_dec(g, "0.577215664901532860606512090082",
                               "0.000000000000000000000000000001"));
    Interval eg = egamma_const(20);
    CHECK(oca_test::within_dec(eg, "1.78107241799019798524", "0.0000000000000000001"));
    // Nested refinement: more digits gives a contained enclosure.
    CHECK(gamma_const(10).contains_interval(gamma_const(20)));
    CHECK_THROWS_AS(gamma_const(0), DomainError);
    CHECK_THROWS_AS(gamma_const(201), DomainError);
}

TEST_CASE("meissel-mertens enclosure and refinement") {
    Interval b4 = meissel_mertens(4);
    CHECK(b4.contains(decq("0.26149721284764278375")));
    Interval b6 = meissel_mertens(6);
    CHECK(b4.contains_interval(b6));
    // The validated digit string lies inside the runtime series result.
    CHECK(oca_test::overlaps(b6, meissel_mertens_interval(128)));
    CHECK_THROWS_AS(meissel_mertens(0), DomainError);
    CHECK_THROWS_AS(meissel_mertens(15), PrecisionExhausted);
}

TEST_CASE("mertens sum bound at 10^5") {
    // sum_{p<=x} 1/p - log log x - B lies in (-1e-3, 1e-3 + 1/(2 log^2 x)).
    PrimeTable t = sieve(100000);
    mpq_class s = 0;
    for (auto p : t.primes) s += mpq_class(1, p);
    Expr diff = lit(s) - log_e(log_e(lit(100000L))) - lit(decq("0.26149721284764278375"));
    Interval d = eval(diff, mpq_class(1, 1000000000));
    double ll = std::log(std::log(100000.0));
    (void)ll;
    CHECK(d.lo_d() > -1e-3);
    CHECK(d.hi_d() < 1e-3 + 1.0 / (2.0 * std::log(100000.0) * std::log(100000.0)));
}

TEST_CASE("alpha constants: enclosures, identity, refinement") {
    Interval a41 = alpha_4_1(1000000);
    Interval a43 = alpha_4_3(1000000);
    CHECK(oca_test::within_dec(a41, "0.7738", "0.00005"));
    CHECK(oca_test::within_dec(a43, "1.1508", "0.0001"));
    // alpha_41 * alpha_43 = e^gamma / 2.
    Interval prod = a41 * a43;
    Interval half_eg = eval(exp_e(gamma_expr()) * lit(mpq_class(1, 2)), mpq_class(1, 1000000000));
    CHECK(oca_test::overlaps(prod, half_eg));
    // A larger prime limit tightens the enclosure and still overlaps.
    Interval fine = alpha_4_1(4000000);
    CHECK(fine.width_d() < a41.width_d());
    CHECK(oca_test::overlaps(fine, a41));
    CHECK_THROWS_AS(alpha_4_1(100), DomainError);
}

TEST_CASE("odd-prime zeta product approaches pi^2/8") {
    // prod_{3<=p<=X} (1 - p^-2)^-1 with tail correction lands within 1e-5.
    const mpfr_prec_t prec = 128;
    PrimeTable t = sieve(1000000);
    Interval prod = Interval::exact(1, prec);
    for (auto p : t.primes) {
        if (p == 2) continue;
        mpq_class f(p * p, p * p - 1);
        f.canonicalize();
        prod = prod * Interval::from_mpq(f, prec);
    }
    // Remaining factors multiply by something in [1, 1 + 2/X].
    Interval tail = Interval::hull(
        Interval::exact(1, prec),
        Interval::from_mpq(mpq_class(1000002, 1000000), prec));
    Interval approx = prod * tail;
    Interval target = pi_interval(prec) * pi_interval(prec) / Interval::exact(8, prec);
    Interval diff = approx - target;
    CHECK(diff.lo_d() > -1e-5);
    CHECK(diff.hi_d() < 1e-5);
}

TEST_CASE("mertens odd-prime product vs (e^gamma/2) log x") {
    const mpfr_prec_t prec = 128;
    PrimeTable t = sieve(1000000);
    Interval prod = Interval::exact(1, prec);
    for (auto p : t.primes) {
        if (p == 2) continue;
        mpq_class f(p, p - 1);
        f.canonicalize();
        prod = prod * Interval::from_mpq(f, prec);
    }
    Interval denom = exp(gamma_interval(prec)) / Interval::exact(2, prec) *
                     log(Interval::exact(1000000, prec));
    Interval ratio = prod / denom;
    CHECK(ratio.lo_d() > 0.98);
    CHECK(ratio.hi_d() < 1.02);
}

TEST_CASE("all_constants reports five entries") {
    auto cs = all_constants(6, 100000);
    REQUIRE(cs.size() == 5);
    CHECK(cs[0].name == "gamma");
    CHECK(cs[4].name == "alpha_4_3");
    for (const auto& c : cs) CHECK(!c.derivation.empty());
}

}  // TEST_SUITE
