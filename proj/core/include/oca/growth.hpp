#ifndef OCA_GROWTH_HPP
#define OCA_GROWTH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oca/divisors.hpp"
#include "oca/expr.hpp"

namespace oca {

// g(n, k, p) = (sigma(p^k)/p^k)(1 + log(1 + k log p/log n)/log log n)^{-1},
// the factor by which f changes when n is multiplied by p^k. Requires
// p coprime to n, n >= 3; k = 0 gives exactly 1.
Interval g_factor(const Factorization& n, unsigned k, std::uint64_t p, const mpq_class& tol);
Expr g_factor_expr(const Factorization& n, unsigned k, std::uint64_t p);

// (log n/log p)((log n)^{(p+c-cp)/(c(p-1))} - 1): any integer k above
// this certified bound gives g(n, k, p) < c.
Interval k_bound(const Factorization& n, std::uint64_t p, const mpq_class& c,
                 const mpq_class& tol);
Expr k_bound_expr(const Factorization& n, std::uint64_t p, const mpq_class& c);

struct CaLikeStep {
    std::uint64_t p = 0;
    mpq_class c;
    Interval k_bound{64};
    unsigned long L = 0;            // certified ceiling of the bound
    mpq_class running_product_c;
};

struct CaLikeResult {
    std::vector<CaLikeStep> steps;
    Factorization n;
    mpq_class product_c;
    Interval egamma_over_fx{64};    // e^gamma / f(x)
    enum class Verdict { CertifiedRobin, Inconclusive } verdict = Verdict::Inconclusive;
};

// The colossally-abundant-like construction: N starts at the prime x;
// each (p, c) step multiplies N by p^L with L the certified ceiling of
// k_bound for the current N. Schedule primes must strictly decrease
// below x. Verdict CertifiedRobin iff prod c_i < e^gamma/f(x), certified.
CaLikeResult build_ca_like(std::uint64_t x,
                           const std::vector<std::pair<std::uint64_t, mpq_class>>& schedule);

// Root k of (log(2^k n))(log log(2^k n)) - 2^{k+1} + 1 = 0, the
// stationary point of k -> g(n, k, 2). Negative for small n (< 7).
Interval max_k(const mpz_class& n, const mpq_class& tol);

struct GCurveRow {
    unsigned k = 0;
    Interval g{64};
};

std::vector<GCurveRow> emit_g_curve(const Factorization& n, std::uint64_t p, unsigned k_max,
                                    const mpq_class& tol);

}  // namespace oca

#endif
