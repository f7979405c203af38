#include "oca/constants.hpp"

#include <algorithm>

#include "oca/expr.hpp"
#include "oca/primes.hpp"

namespace oca {

namespace {

mpq_class pow10_inv(unsigned digits) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, digits);
    return mpq_class(1, d);
}

mpfr_prec_t digits_to_bits(unsigned digits) {
    return static_cast<mpfr_prec_t>(digits * 10 / 3 + 32);
}

}  // namespace

Interval gamma_const(unsigned digits) {
    if (digits < 1 || digits > 200) throw DomainError("gamma_const: digits in [1, 200]");
    mpq_class tol = pow10_inv(digits);
    for (mpfr_prec_t prec = digits_to_bits(digits);; prec *= 2) {
        Interval g = gamma_interval(prec);
        if (g.width_leq(tol)) return g;
        if (prec > 4096) throw PrecisionExhausted("gamma_const");
    }
}

Interval egamma_const(unsigned digits) {
    if (digits < 1 || digits > 200) throw DomainError("egamma_const: digits in [1, 200]");
    mpq_class tol = pow10_inv(digits);
    for (mpfr_prec_t prec = digits_to_bits(digits) + 8;; prec *= 2) {
        Interval g = exp(gamma_interval(prec));
        if (g.width_leq(tol)) return g;
        if (prec > 4096) throw PrecisionExhausted("egamma_const");
    }
}

Interval meissel_mertens(unsigned digits) {
    if (digits < 1 || digits > 15) throw DomainError("meissel_mertens: digits in [1, 15]");
    mpq_class tol = pow10_inv(digits);
    // Tail beyond X is within [-1/X, 0]; aim 1/X <= tol/2.
    mpz_class want;
    mpz_ui_pow_ui(want.get_mpz_t(), 10, digits);
    want *= 2;
    const std::uint64_t cap = 1ULL << 26;
    if (want > cap)
        throw PrecisionExhausted("meissel_mertens: digits beyond truncation capability");
    std::uint64_t X = want.get_ui();
    mpfr_prec_t prec = digits_to_bits(digits) + 32;
    PrimeTable table = sieve(X);
    mpfr_t lo, hi, t_lo, t_hi, q;
    mpfr_inits2(prec, lo, hi, t_lo, t_hi, q, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (std::uint64_t p : table.primes) {
        // log(1 - 1/p) + 1/p, directed both ways.
        mpq_class r(p - 1, p);
        mpfr_set_q(t_lo, r.get_mpq_t(), MPFR_RNDD);
        mpfr_log(t_lo, t_lo, MPFR_RNDD);
        mpfr_set_q(t_hi, r.get_mpq_t(), MPFR_RNDU);
        mpfr_log(t_hi, t_hi, MPFR_RNDU);
        mpq_class inv(1, p);
        mpfr_set_q(q, inv.get_mpq_t(), MPFR_RNDD);
        mpfr_add(t_lo, t_lo, q, MPFR_RNDD);
        mpfr_set_q(q, inv.get_mpq_t(), MPFR_RNDU);
        mpfr_add(t_hi, t_hi, q, MPFR_RNDU);
        mpfr_add(lo, lo, t_lo, MPFR_RNDD);
        mpfr_add(hi, hi, t_hi, MPFR_RNDU);
    }
    // Tail in [-1/X, 0].
    mpq_class tail(1, X);
    mpfr_set_q(q, tail.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(lo, lo, q, MPFR_RNDD);
    Interval sum = Interval::from_endpoints(lo, hi, prec);
    mpfr_clears(lo, hi, t_lo, t_hi, q, static_cast<mpfr_ptr>(nullptr));
    Interval b = gamma_interval(prec) + sum;
    if (!b.width_leq(tol))
        throw PrecisionExhausted("meissel_mertens: tolerance not reached");
    return b;
}

Interval alpha_4_1(std::uint64_t prime_limit) {
    if (prime_limit < 10000) throw DomainError("alpha_4_1 requires prime_limit >= 10^4");
    const mpfr_prec_t prec = 128;
    PrimeTable table = sieve(prime_limit);
    Interval prod = Interval::exact(1, prec);
    for (std::uint64_t p : table.primes) {
        if (p % 4 != 3) continue;
        mpq_class f(p * p - 1, p * p);
        f.canonicalize();
        prod = prod * Interval::from_mpq(f, prec);
    }
    // Remaining factors lie in [1 - 1/X, 1].
    Interval tail = Interval::hull(
        Interval::from_mpq(mpq_class(prime_limit - 1, prime_limit), prec),
        Interval::exact(1, prec));
    Interval inner = pi_interval(prec) * exp(gamma_interval(prec)) /
                     Interval::exact(8, prec) * prod * tail;
    return sqrt(inner);
}

Interval alpha_4_3(std::uint64_t prime_limit) {
    const mpfr_prec_t prec = 128;
    return exp(gamma_interval(prec)) / (Interval::exact(2, prec) * alpha_4_1(prime_limit));
}

std::vector<NamedConstant> all_constants(unsigned digits, std::uint64_t prime_limit) {
    std::vector<NamedConstant> out;
    out.push_back({"gamma", gamma_const(digits),
                   "directed-rounding evaluation cross-checked against an embedded "
                   "200-digit literal"});
    out.push_back({"egamma", egamma_const(digits), "exp of the gamma enclosure"});
    unsigned bdig = std::min(digits, 7u);
    out.push_back({"meissel_mertens", meissel_mertens(bdig),
                   "gamma + sum_p(log(1-1/p)+1/p) truncated, tail bounded by 1/X"});
    out.push_back({"alpha_4_1", alpha_4_1(prime_limit),
                   "sqrt(pi e^gamma/8 prod_{p=3 mod 4}(1-1/p^2)), truncated product with "
                   "tail in [1-1/X, 1]"});
    out.push_back({"alpha_4_3", alpha_4_3(prime_limit), "e^gamma/(2 alpha_4_1)"});
    return out;
}

}  // namespace oca
