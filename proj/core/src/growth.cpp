#include "oca/growth.hpp"

#include <algorithm>

namespace oca {

namespace {

void require_coprime(const Factorization& n, std::uint64_t p) {
    for (const auto& [q, e] : n.factors)
        if (q == mpz_class(static_cast<unsigned long>(p)))
            throw DomainError("g/k_bound require p coprime to n");
}

}  // namespace

Expr g_factor_expr(const Factorization& nf, unsigned k, std::uint64_t p) {
    mpz_class n = nf.value();
    if (n < 3) throw DomainError("g_factor requires n >= 3");
    if (p < 2) throw DomainError("g_factor requires a prime p");
    require_coprime(nf, p);
    if (k == 0) return lit(1L);
    mpz_class pz(static_cast<unsigned long>(p)), pk, pk1;
    mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
    pk1 = pk * pz;
    mpq_class sig_ratio(pk1 - 1, pk * (pz - 1));
    sig_ratio.canonicalize();
    Expr ln = log_e(lit(n));
    Expr inner = lit(1L) + lit(static_cast<long>(k)) * log_e(lit(pz)) / ln;
    return lit(sig_ratio) / (lit(1L) + log_e(inner) / log_e(ln));
}

Interval g_factor(const Factorization& nf, unsigned k, std::uint64_t p, const mpq_class& tol) {
    if (k == 0) {
        g_factor_expr(nf, 0, p);  // domain checks
        return Interval::exact(1, 64);
    }
    return eval(g_factor_expr(nf, k, p), tol);
}

Expr k_bound_expr(const Factorization& nf, std::uint64_t p, const mpq_class& c) {
    mpz_class n = nf.value();
    if (n < 3) throw DomainError("k_bound requires n >= 3");
    if (p < 2) throw DomainError("k_bound requires a prime p");
    if (sgn(c) <= 0) throw DomainError("k_bound requires c > 0");
    require_coprime(nf, p);
    mpz_class pz(static_cast<unsigned long>(p));
    mpq_class expo = (mpq_class(pz) + c - c * mpq_class(pz)) / (c * (mpq_class(pz) - 1));
    expo.canonicalize();
    Expr ln = log_e(lit(n));
    return ln / log_e(lit(pz)) * (exp_e(lit(expo) * log_e(ln)) - lit(1L));
}

Interval k_bound(const Factorization& nf, std::uint64_t p, const mpq_class& c,
                 const mpq_class& tol) {
    return eval(k_bound_expr(nf, p, c), tol);
}

CaLikeResult build_ca_like(std::uint64_t x,
                           const std::vector<std::pair<std::uint64_t, mpq_class>>& schedule) {
    mpz_class xz(static_cast<unsigned long>(x));
    if (mpz_probab_prime_p(xz.get_mpz_t(), 40) == 0)
        throw DomainError("build_ca_like: x must be prime");
    CaLikeResult res;
    res.n.factors.emplace_back(xz, 1);
    res.product_c = 1;
    std::uint64_t prev = x;
    for (const auto& [p, c] : schedule) {
        if (p >= prev) throw DomainError("build_ca_like: schedule primes must strictly decrease");
        mpz_class pz(static_cast<unsigned long>(p));
        if (mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
            throw DomainError("build_ca_like: schedule entry is not prime");
        prev = p;
        CaLikeStep step;
        step.p = p;
        step.c = c;
        // Certify floor of the bound, then take L = floor + 1: always
        // strictly above the bound, and equal to the ceiling whenever
        // the bound is not an integer.
        mpq_class tol(1, 1000000000L);
        mpz_class fl_lo, fl_hi;
        bool settled = false;
        for (int attempt = 0; attempt < 4; ++attempt) {
            step.k_bound = k_bound(res.n, p, c, tol);
            step.k_bound.floor_lo(fl_lo);
            step.k_bound.floor_hi(fl_hi);
            if (fl_lo == fl_hi) {
                settled = true;
                break;
            }
            tol /= 1000000;
        }
        if (!settled) throw TieError("build_ca_like: k bound straddles an integer");
        mpz_class L = fl_hi + 1;
        if (L < 1) L = 1;
        step.L = L.get_ui();
        res.product_c = res.product_c * c;
        step.running_product_c = res.product_c;
        res.steps.push_back(step);
        // Schedule descends, so the new prime slots in front.
        res.n.factors.insert(res.n.factors.begin(), {pz, static_cast<unsigned>(step.L)});
    }
    Factorization xf;
    xf.factors.emplace_back(xz, 1);
    Expr target = exp_e(gamma_expr()) / f_ratio_expr(xf);
    res.egamma_over_fx = eval(target, mpq_class(1, 1000000000L));
    Ordering ord = compare(lit(res.product_c), target);
    res.verdict = ord == Ordering::Less ? CaLikeResult::Verdict::CertifiedRobin
                                        : CaLikeResult::Verdict::Inconclusive;
    return res;
}

namespace {

// Sign of (log(xn))(log log(xn)) - 2x + 1 at rational x with xn > 1.
Ordering max_k_sign(const mpq_class& x, const mpz_class& n) {
    mpq_class xn = x * mpq_class(n);
    xn.canonicalize();
    Expr lx = log_e(lit(xn));
    Expr G = lx * log_e(lx) - lit(2L) * lit(x) + lit(1L);
    return compare(G, lit(0L));
}

}  // namespace

Interval max_k(const mpz_class& n, const mpq_class& tol) {
    if (n < 3) throw DomainError("max_k requires n >= 3");
    if (sgn(tol) <= 0) throw DomainError("max_k requires tol > 0");
    // Work in x = 2^k. Near x = 1/n the LHS tends to 1 - 2/n > 0; it is
    // eventually dominated by -2x.
    mpq_class lo = (mpq_class(1) + mpq_class(1, 1024)) / mpq_class(n);
    lo.canonicalize();
    if (max_k_sign(lo, n) != Ordering::Greater)
        throw DomainError("max_k: left bracket not positive");
    mpq_class hi = 2;
    while (max_k_sign(hi, n) == Ordering::Greater) hi *= 2;

    auto k_enclosure = [&]() {
        Interval ix = Interval::hull(Interval::from_mpq(lo, 192), Interval::from_mpq(hi, 192));
        return log(ix) / log2_interval(192);
    };
    while (true) {
        Interval k = k_enclosure();
        if (k.width_leq(tol)) return k;
        mpq_class mid = (lo + hi) / 2;
        Ordering ord = max_k_sign(mid, n);
        if (ord == Ordering::Unresolved) {
            mid = lo + (hi - lo) * mpq_class(3, 7);
            ord = max_k_sign(mid, n);
            if (ord == Ordering::Unresolved)
                throw PrecisionExhausted("max_k: bisection point indistinguishable from root");
        }
        if (ord == Ordering::Greater)
            lo = mid;
        else
            hi = mid;
    }
}

std::vector<GCurveRow> emit_g_curve(const Factorization& n, std::uint64_t p, unsigned k_max,
                                    const mpq_class& tol) {
    if (k_max < 1) throw DomainError("emit_g_curve requires k_max >= 1");
    std::vector<GCurveRow> rows;
    rows.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) rows.push_back({k, g_factor(n, k, p, tol)});
    return rows;
}

}  // namespace oca
