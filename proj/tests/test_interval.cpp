#include <doctest.h>

#include <random>

#include <oca/expr.hpp>
#include <oca/interval.hpp>

#include "test_util.hpp"

using namespace oca;
using oca_test::decq;

TEST_SUITE("interval") {

TEST_CASE("arithmetic soundness on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-10000, 10000), den(1, 9999);
    for (int i = 0; i < 500; ++i) {
        mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        Interval ia = Interval::from_mpq(a, 64), ib = Interval::from_mpq(b, 64);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        if (b != 0) CHECK((ia / ib).contains(mpq_class(a / b)));
        CHECK((-ia).contains(mpq_class(-a)));
    }
}

TEST_CASE("division by an interval containing zero is rejected") {
    Interval one = Interval::exact(1, 64);
    Interval z = Interval::from_mpq(mpq_class(0), 64);
    CHECK_THROWS_AS(one / z, DomainError);
}

TEST_CASE("log and exp enclose known values") {
    Interval e1 = exp(Interval::exact(1, 96));
    CHECK(oca_test::within_dec(e1, "2.718281828459045", "0.000000000000001"));
    Interval l2 = log(Interval::exact(2, 96));
    CHECK(oca_test::within_dec(l2, "0.693147180559945", "0.000000000000001"));
    CHECK_THROWS_AS(log(Interval::from_mpq(mpq_class(-1), 64)), DomainError);
}

TEST_CASE("sqrt and rational powers") {
    Interval s = sqrt(Interval::exact(2, 96));
    CHECK(oca_test::within_dec(s, "1.414213562373095", "0.000000000000001"));
    Interval p = pow_q(Interval::exact(8, 96), mpq_class(2, 3));
    CHECK(p.contains(mpq_class(4)));
}

TEST_CASE("named constants against validated digit strings") {
    Interval g = gamma_interval(256);
    CHECK(oca_test::within_dec(g, "0.57721566490153286060651209008240243104215933593992",
                               "0.00000000000000000000000000000000000000000000000001"));
    Interval pi = pi_interval(256);
    CHECK(oca_test::within_dec(pi, "3.14159265358979323846", "0.00000000000000000001"));
    Interval b = meissel_mertens_interval(256);
    CHECK(oca_test::within_dec(b, "0.26149721284764278375", "0.0000000000000000001"));
}

TEST_CASE("from_decimal is an enclosure and hull merges") {
    Interval d = Interval::from_decimal("0.1", 64);
    CHECK(d.contains(mpq_class(1, 10)));
    Interval h = Interval::hull(Interval::exact(1, 64), Interval::exact(3, 64));
    CHECK(h.contains(mpq_class(2)));
}

}  // TEST_SUITE

TEST_SUITE("expr") {

TEST_CASE("refinement: higher precision nests inside lower") {
    Expr e = log_e(lit(10L)) * exp_e(gamma_expr()) / (lit(3L) + log_e(lit(7L)));
    Interval coarse = eval_at(e, 64);
    Interval fine = eval_at(e, 256);
    CHECK(coarse.contains_interval(fine));
    Interval tight = eval(e, mpq_class(1, mpz_class("1000000000000000000000000")));
    CHECK(coarse.contains_interval(tight));
}

TEST_CASE("certified comparisons") {
    CHECK(compare(lit(1L), lit(2L)) == Ordering::Less);
    CHECK(compare(exp_e(lit(1L)), lit(mpq_class(27, 10))) == Ordering::Greater);
    // log(2^3)/log 2 canonicalizes to the exact integer 3.
    CHECK(compare(log_e(lit(8L)) / log_e(lit(2L)), lit(3L)) == Ordering::Equal);
}

TEST_CASE("floor_exact") {
    CHECK(floor_exact(log_e(lit(100L)) / log_e(lit(10L)) - lit(mpq_class(1, 1000))) == 1);
    CHECK(floor_exact(exp_e(lit(1L))) == 2);
    CHECK(floor_exact(lit(mpq_class(-1, 2))) == -1);
}

TEST_CASE("exp(gamma)/2 encloses 0.8905") {
    Interval h = eval(exp_e(gamma_expr()) * lit(mpq_class(1, 2)), mpq_class(1, 100000000));
    CHECK(oca_test::within_dec(h, "0.8905", "0.00005"));
}

TEST_CASE("precision ceiling is respected") {
    mpfr_prec_t saved = default_precision_ceiling();
    set_default_precision_ceiling(128);
    CHECK(default_precision_ceiling() == 128);
    // A comparison of two distinct writings of the same number cannot
    // resolve and must report Unresolved rather than loop.
    Expr a = log_e(lit(2L)) + log_e(lit(3L));
    Expr b = log_e(lit(6L));
    CHECK(compare(a, b) == Ordering::Unresolved);
    set_default_precision_ceiling(saved);
}

}  // TEST_SUITE
