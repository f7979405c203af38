#ifndef OCA_TEST_UTIL_HPP
#define OCA_TEST_UTIL_HPP

#include <gmpxx.h>

#include <string>

#include <oca/interval.hpp>

namespace oca_test {

// Exact rational from a decimal literal like "-1.625".
inline mpq_class decq(const std::string& s) {
    std::size_t dot = s.find('.');
    std::string digits = s;
    unsigned long frac = 0;
    if (dot != std::string::npos) {
        frac = s.size() - dot - 1;
        digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    mpz_class num(digits, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline bool contains_dec(const oca::Interval& iv, const std::string& s) {
    return iv.contains(decq(s));
}

// Whole enclosure within +-tol of the reference value: certifies the
// reference as a rounding of the true value.
inline bool within(const oca::Interval& iv, const mpq_class& ref, const mpq_class& tol) {
    mpq_class lo = ref - tol, hi = ref + tol;
    return mpfr_cmp_q(iv.lo(), lo.get_mpq_t()) >= 0 && mpfr_cmp_q(iv.hi(), hi.get_mpq_t()) <= 0;
}

inline bool within_dec(const oca::Interval& iv, const std::string& ref, const std::string& tol) {
    return within(iv, decq(ref), decq(tol));
}

inline bool overlaps(const oca::Interval& a, const oca::Interval& b) {
    return !oca::Interval::certainly_less(a, b) && !oca::Interval::certainly_less(b, a);
}

}  // namespace oca_test

#endif
