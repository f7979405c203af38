#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include <oca/abundant.hpp>
#include <oca/divisors.hpp>

#include "test_util.hpp"

using namespace oca;
using oca_test::decq;

TEST_SUITE("abundant") {

TEST_CASE("critical thresholds and min epsilon") {
    // eps(2,1) = log_2(3/2); eps(3,1) = log_3(4/3).
    Interval e21 = eval(critical_threshold(2, 1), mpq_class(1, 1000000000000L));
    CHECK(oca_test::within_dec(e21, "0.584962500721156", "0.000000000000001"));
    Interval e31 = eval(critical_threshold(3, 1), mpq_class(1, 1000000000000L));
    CHECK(oca_test::within_dec(e31, "0.261859507142915", "0.000000000000001"));
    // Thresholds decrease in a for fixed p.
    CHECK(compare(critical_threshold(2, 3), critical_threshold(2, 2)) == Ordering::Less);
    // min_epsilon(P) equals the (P, 1) threshold as a real number (the
    // two syntactic forms differ, so only numeric agreement is testable).
    mpq_class w(1, mpz_class("10000000000000000000000000000000000000000"));
    CHECK(oca_test::overlaps(eval(min_epsilon(13), w), eval(critical_threshold(13, 1), w)));
}

TEST_CASE("alpha_p at eps = 0.021") {
    Expr eps = lit_decimal("0.021");
    std::vector<unsigned> expect = {5, 3, 1, 1, 1, 1};
    std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13};
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(alpha_p(ps[i], eps) == expect[i]);
    CHECK(alpha_p(17, eps) == 0);
}

TEST_CASE("critical epsilon stream is strictly descending") {
    std::vector<ThresholdTie> ties;
    auto evs = critical_epsilons(70, Parity::Odd, &ties);
    CHECK(ties.empty());
    mpq_class tol(1, mpz_class("100000000000000000000"));
    for (std::size_t i = 1; i < evs.size(); ++i)
        CHECK(compare(evs[i].threshold, evs[i - 1].threshold) == Ordering::Less);
}

TEST_CASE("colossally abundant enumeration: classic list below 10^7") {
    auto recs = enumerate_abundant(20, Parity::All, nullptr);
    std::vector<unsigned long> expect = {2,    6,     12,     60,      120,     360,
                                         2520, 5040,  55440,  720720,  1441440, 4324320};
    REQUIRE(recs.size() >= expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(recs[i].n == expect[i]);
        // Incremental sigma equals sigma of the factorization.
        CHECK(recs[i].sigma == sigma(recs[i].factorization));
        CHECK(recs[i].factorization.value() == recs[i].n);
    }
}

TEST_CASE("odd colossally abundant records up to c0") {
    mpz_class c0("18565284664427130919514350125");
    auto recs = enumerate_abundant(80, Parity::Odd, &c0);
    REQUIRE(recs.size() == 24);
    CHECK(recs[0].n == 3);
    CHECK(recs[12].n == mpz_class("4512611027925"));
    CHECK(recs[22].n == mpz_class("277093800961598968947975375"));
    CHECK(recs[23].n == c0);
    CHECK(recs[23].factorization.str() ==
          "3^4*5^3*7^2*11*13*17*19*23*29*31*37*41*43*47*53*59*61*67");
    for (const auto& r : recs) {
        CHECK(r.factorization.is_odd());
        CHECK(r.sigma == sigma(r.factorization));
        // The record's generating epsilon range is nonempty.
        CHECK(compare(r.eps_lo, r.eps_hi) == Ordering::Less);
    }
}

TEST_CASE("x_k certified roots at eps = 0.021") {
    Expr eps = lit_decimal("0.021");
    mpq_class tol(1, 10000000);
    struct Row { unsigned k; const char* val; };
    // Independently certified roots of F(x, k) = 0.021; the defining
    // equation is the authority for these values.
    for (Row r : {Row{1, "16.4936532"}, Row{2, "4.9379661"}, Row{3, "3.0810064"},
                  Row{4, "2.3878085"}, Row{5, "2.0342930"}}) {
        Interval x = x_k(eps, r.k, tol);
        CHECK(oca_test::within(x, decq(r.val), mpq_class(1, 1000000)));
    }
}

TEST_CASE("x_k satisfies its defining equation") {
    Expr eps = lit_decimal("0.04");
    for (unsigned k : {1u, 2u, 3u}) {
        Interval x = x_k(eps, k, mpq_class(1, 1000000000));
        // The enclosure endpoints are dyadic rationals; F at the exact
        // midpoint must sit within the bisection tolerance of eps.
        mpf_class lo_f(0, 256), hi_f(0, 256);
        mpfr_get_f(lo_f.get_mpf_t(), x.lo(), MPFR_RNDN);
        mpfr_get_f(hi_f.get_mpf_t(), x.hi(), MPFR_RNDN);
        mpq_class mid = mpq_class(lo_f) / 2 + mpq_class(hi_f) / 2;
        Expr powsum = lit(0L);
        mpq_class acc = 1;
        for (unsigned j = 1; j <= k; ++j) {
            acc *= mid;
            powsum = powsum + lit(acc);
        }
        Expr F = log_e(lit(1L) + lit(1L) / powsum) / log_e(lit(mid));
        Interval diff = eval(F - eps, mpq_class(1, 1000000000000L));
        CHECK(oca_test::within(diff, mpq_class(0), mpq_class(1, 10000000)));
    }
}

TEST_CASE("exponent / x_k duality on 50 random epsilons") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(30, 600);
    mpq_class tol(1, 1000000000);
    std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int t = 0; t < 50; ++t) {
        mpq_class eq(num(rng), 1000);  // eps in [0.03, 0.6]
        eq.canonicalize();
        Expr eps = lit(eq);
        for (std::uint64_t p : ps) {
            unsigned a = alpha_p(p, eps);
            // Primes in (x_{k+1}, x_k] receive exponent k.
            if (a >= 1) {
                Interval xa = x_k(eps, a, tol);
                CHECK(mpfr_cmp_ui(xa.hi(), p) >= 0);  // p <= x_a
            }
            Interval xnext = x_k(eps, a + 1, tol);
            CHECK(mpfr_cmp_ui(xnext.lo(), p) < 0);  // p > x_{a+1}
        }
    }
}

TEST_CASE("x_k lemma inequalities at two epsilons") {
    for (const char* e : {"0.021", "0.1"}) {
        auto rep = verify_xk_lemma(lit_decimal(e));
        CHECK(rep.power_bound);
        CHECK(rep.sqrt_sandwich);
    }
    // Tiny eps drives x_1 >= 1530 and enables the refined bound.
    auto rep = verify_xk_lemma(lit_decimal("0.00008"));
    REQUIRE(rep.refined_lower.has_value());
    CHECK(*rep.refined_lower);
}

}  // TEST_SUITE
