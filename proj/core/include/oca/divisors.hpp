#ifndef OCA_DIVISORS_HPP
#define OCA_DIVISORS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oca/expr.hpp"
#include "oca/interval.hpp"

namespace oca {

/// Exact prime-power decomposition. Primes strictly increasing,
/// exponents >= 1; the empty list is n = 1.
struct Factorization {
    std::vector<std::pair<mpz_class, unsigned>> factors;

    mpz_class value() const;
    bool is_odd() const;

    // "2^5*3^3*5*7*11*13"; "1" for the unit.
    std::string str() const;
    static Factorization parse(const std::string& s);

    // JSON array of [p, e] pairs (decimal strings for p).
    std::string json() const;
    static Factorization parse_json(const std::string& s);
};

Factorization factorize(const mpz_class& n);

mpz_class sigma(const Factorization& f);

// sigma restricted to primes congruent to l mod k; empty product is 1.
mpz_class sigma_mod(const Factorization& f, unsigned long k, unsigned long l);

mpz_class euler_phi(const Factorization& f);

bool is_squarefree(const Factorization& f);

// f(n) = sigma(n) / (n log log n), n >= 3. sigma(n)/n is formed as an
// exact rational before interval conversion.
Interval f_ratio(const Factorization& f, const mpq_class& tol);
// Expression form, for certified comparisons against thresholds.
Expr f_ratio_expr(const Factorization& f);

// f_{k,l}(n) = sigma_{k,l}(n) / (n (log(phi(k) log n))^{1/phi(k)}).
Interval f_mod(const Factorization& f, unsigned long k, unsigned long l, const mpq_class& tol);

}  // namespace oca

#endif
