#ifndef OCA_ABUNDANT_HPP
#define OCA_ABUNDANT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oca/divisors.hpp"
#include "oca/expr.hpp"
#include "oca/primes.hpp"

namespace oca {

enum class Parity { All, Odd };

/// One exponent-increment event: when epsilon drops past `threshold`,
/// prime p's exponent rises from a-1 to a.
struct CriticalEpsilon {
    std::uint64_t p = 0;
    unsigned a = 0;
    Expr threshold;  // log_p((p^{a+1}-1)/(p^{a+1}-p))
};

Expr critical_threshold(std::uint64_t p, unsigned a);
// Smallest admissible epsilon for largest prime P: log_P(P+1) - 1.
Expr min_epsilon(std::uint64_t largest_prime);

// Exponent formula: floor((log(p^{1+eps}-1) - log(p^eps-1))/log p) - 1.
// Throws UnresolvedFloor at an exact threshold (tie).
unsigned alpha_p(std::uint64_t p, const Expr& eps);

// Thresholds above could not be certified distinct; ordering fell back
// to smaller-prime-first.
struct ThresholdTie {
    CriticalEpsilon first, second;
};

// All events with threshold > minEpsilon for the largest prime <=
// prime_limit, sorted by threshold strictly descending. Unresolvable
// orderings are surfaced through `ties`, never silently dropped.
std::vector<CriticalEpsilon> critical_epsilons(std::uint64_t prime_limit, Parity parity,
                                               std::vector<ThresholdTie>* ties = nullptr);

struct AbundantRecord {
    Factorization factorization;
    mpz_class n;
    mpz_class sigma;
    Parity parity = Parity::All;
    std::size_t index = 0;
    // Half-open epsilon range (eps_lo, eps_hi] generating this number.
    Expr eps_hi, eps_lo;
};

// Incremental enumeration along the descending critical-epsilon stream.
// Emits records with n <= n_limit (no limit when n_limit is null),
// at most max_records when nonzero.
std::vector<AbundantRecord> enumerate_abundant(std::uint64_t prime_limit, Parity parity,
                                               const mpz_class* n_limit = nullptr,
                                               std::size_t max_records = 0,
                                               std::vector<ThresholdTie>* ties = nullptr);

// Unique root x of F(x, k) = eps with F(x,k) = log(1 + 1/(x + x^2 +
// ... + x^k))/log x, by bisection; result width <= tol.
Interval x_k(const Expr& eps, unsigned k, const mpq_class& tol);

struct XkLemmaReport {
    bool power_bound = false;        // x_k > x_1^{1/k} for k = 2, 3
    bool sqrt_sandwich = false;      // sqrt(2 x_1) > x_2 > sqrt(x_1)
    std::optional<bool> refined_lower;  // Eq-style refinement, only when x_1 >= 1530
    double x1 = 0, x2 = 0, x3 = 0;
};

XkLemmaReport verify_xk_lemma(const Expr& eps);

}  // namespace oca

#endif
