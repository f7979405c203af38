#ifndef OCA_INTERVAL_HPP
#define OCA_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "oca/errors.hpp"

namespace oca {

/// Enclosure [lo, hi] of a real value. Endpoints are binary floats at
/// `precision_bits` working precision (hence dyadic rationals); every
/// operation rounds lo down and hi up, so the true value never escapes.
class Interval {
public:
    Interval() : Interval(64) {}
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o) noexcept;
    ~Interval();

    static Interval exact(long v, mpfr_prec_t prec);
    static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
    static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
    // Decimal string rounded outward; `ulps_up` widens hi by that many
    // last-place units of the parsed value (for digit-string literals
    // known to be truncations).
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec, unsigned long ulps_up = 0);
    static Interval hull(const Interval& a, const Interval& b);
    static Interval from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);

    mpfr_prec_t precision_bits() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return (lo_d() + hi_d()) / 2; }

    // hi - lo, rounded up, as a double (inf if not representable).
    double width_d() const;
    bool width_leq(const mpq_class& tol) const;

    bool contains(const mpq_class& v) const;
    bool contains_zero() const;
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_interval(const Interval& inner) const;

    // a.hi < b.lo: every value of a is below every value of b.
    static bool certainly_less(const Interval& a, const Interval& b);

    int floor_lo(mpz_class& out) const;  // floor of lo endpoint
    int floor_hi(mpz_class& out) const;

    std::string str(size_t digits = 20) const;       // "[lo, hi]"
    std::string lo_str(size_t digits = 20) const;
    std::string hi_str(size_t digits = 20) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    friend Interval log(const Interval& a);
    friend Interval exp(const Interval& a);
    friend Interval sqrt(const Interval& a);
    friend Interval pow_si(const Interval& a, long e);
    friend Interval pow_q(const Interval& a, const mpq_class& e);

    friend Interval gamma_interval(mpfr_prec_t prec);
    friend Interval pi_interval(mpfr_prec_t prec);
    friend Interval log2_interval(mpfr_prec_t prec);

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    void assert_valid() const;
};

Interval gamma_interval(mpfr_prec_t prec);
Interval pi_interval(mpfr_prec_t prec);
Interval log2_interval(mpfr_prec_t prec);
// Meissel-Mertens constant from the embedded validated digit string.
Interval meissel_mertens_interval(mpfr_prec_t prec);

// 200-digit validated literals (used for the constants above and for
// build-time cross-checks against MPFR's own evaluations).
extern const char* const kGammaDigits200;
extern const char* const kMeisselMertensDigits50;

}  // namespace oca

#endif
