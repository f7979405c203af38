#include "oca/abundant.hpp"

#include <algorithm>
#include <map>

namespace oca {

Expr critical_threshold(std::uint64_t p, unsigned a) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class pa1;
    mpz_pow_ui(pa1.get_mpz_t(), pz.get_mpz_t(), a + 1);
    mpq_class q(pa1 - 1, pa1 - pz);
    q.canonicalize();
    return log_e(lit(q)) / log_e(lit(pz));
}

Expr min_epsilon(std::uint64_t largest_prime) {
    mpz_class p(static_cast<unsigned long>(largest_prime));
    return log_e(lit(mpz_class(p + 1))) / log_e(lit(p)) - lit(1L);
}

unsigned alpha_p(std::uint64_t p, const Expr& eps) {
    if (p < 2) throw DomainError("alpha_p requires a prime p >= 2");
    Expr lp = log_e(lit(mpz_class(static_cast<unsigned long>(p))));
    Expr one = lit(1L);
    Expr num = log_e(exp_e((one + eps) * lp) - one) - log_e(exp_e(eps * lp) - one);
    mpz_class fl = floor_exact(num / lp);
    fl -= 1;
    if (fl < 0) throw DomainError("alpha_p: epsilon outside admissible range");
    return static_cast<unsigned>(fl.get_ui());
}

namespace {

struct Event {
    CriticalEpsilon ce;
    Interval enclosure{96};
    double mid = 0;
};

Interval threshold_interval(const Expr& t, mpfr_prec_t prec) { return eval_at(canonicalize(t), prec); }

}  // namespace

std::vector<CriticalEpsilon> critical_epsilons(std::uint64_t prime_limit, Parity parity,
                                               std::vector<ThresholdTie>* ties) {
    if ((parity == Parity::Odd && prime_limit < 3) || prime_limit < 2)
        throw DomainError("critical_epsilons: prime_limit too small");
    PrimeTable table = sieve(prime_limit);
    std::vector<std::uint64_t> ps;
    for (auto p : table.primes)
        if (parity == Parity::All || p != 2) ps.push_back(p);
    if (ps.empty()) throw DomainError("critical_epsilons: no admissible primes");
    std::uint64_t largest = ps.back();

    Expr min_eps = min_epsilon(largest);
    Interval min_iv = threshold_interval(min_eps, 96);

    std::vector<Event> events;
    for (auto p : ps) {
        for (unsigned a = 1;; ++a) {
            CriticalEpsilon ce{p, a, critical_threshold(p, a)};
            // threshold(P, 1) equals minEpsilon by definition; the event
            // for the largest prime itself is always part of the stream.
            if (p == largest && a == 1) {
                Event ev{ce, threshold_interval(ce.threshold, 96), 0};
                ev.mid = ev.enclosure.mid_d();
                events.push_back(std::move(ev));
                continue;
            }
            Interval iv = threshold_interval(ce.threshold, 96);
            bool above;
            if (Interval::certainly_less(min_iv, iv)) {
                above = true;
            } else if (Interval::certainly_less(iv, min_iv)) {
                above = false;
            } else {
                Ordering ord = compare(ce.threshold, min_eps);
                if (ord == Ordering::Greater)
                    above = true;
                else if (ord == Ordering::Less)
                    above = false;
                else {
                    // Indistinguishable from the cutoff: keep it, surface it.
                    above = true;
                    if (ties) ties->push_back({ce, CriticalEpsilon{largest, 1, min_eps}});
                }
            }
            if (!above) break;
            Event ev{ce, std::move(iv), 0};
            ev.mid = ev.enclosure.mid_d();
            events.push_back(std::move(ev));
        }
    }

    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.mid > b.mid; });

    // Certify the descending order on adjacent pairs; near-equal
    // midpoints fall back to certified comparison.
    for (std::size_t i = 1; i < events.size();) {
        const Event& a = events[i - 1];
        const Event& b = events[i];
        bool ordered;
        if (Interval::certainly_less(b.enclosure, a.enclosure)) {
            ordered = true;
        } else if (Interval::certainly_less(a.enclosure, b.enclosure)) {
            ordered = false;
        } else {
            Ordering ord = compare(a.ce.threshold, b.ce.threshold);
            if (ord == Ordering::Greater)
                ordered = true;
            else if (ord == Ordering::Less)
                ordered = false;
            else {
                // Tie at the ceiling: smaller prime first, recorded.
                if (ties) ties->push_back({a.ce, b.ce});
                ordered = a.ce.p <= b.ce.p;
            }
        }
        if (ordered) {
            ++i;
        } else {
            std::swap(events[i - 1], events[i]);
            if (i > 1)
                --i;
            else
                ++i;
        }
    }

    std::vector<CriticalEpsilon> out;
    out.reserve(events.size());
    for (auto& ev : events) out.push_back(std::move(ev.ce));
    return out;
}

std::vector<AbundantRecord> enumerate_abundant(std::uint64_t prime_limit, Parity parity,
                                               const mpz_class* n_limit, std::size_t max_records,
                                               std::vector<ThresholdTie>* ties) {
    auto events = critical_epsilons(prime_limit, parity, ties);
    std::vector<AbundantRecord> out;
    std::map<std::uint64_t, unsigned> exponents;
    mpz_class n = 1, sig = 1;
    std::uint64_t largest = 0;
    for (const auto& ev : events) largest = std::max(largest, ev.p);
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& ev = events[i];
        mpz_class p(static_cast<unsigned long>(ev.p));
        unsigned& e = exponents[ev.p];
        if (e + 1 != ev.a)
            throw TieError("critical-epsilon stream out of order for p=" + std::to_string(ev.p));
        e = ev.a;
        n *= p;
        // sigma gains the factor (p^{a+1}-1)/(p^a-1), exactly.
        mpz_class pa;
        mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), ev.a);
        sig *= pa * p - 1;
        mpz_class den = pa - 1;
        mpz_divexact(sig.get_mpz_t(), sig.get_mpz_t(), den.get_mpz_t());
        if (n_limit && n > *n_limit) break;
        AbundantRecord rec;
        for (const auto& [pp, ee] : exponents)
            if (ee > 0)
                rec.factorization.factors.emplace_back(mpz_class(static_cast<unsigned long>(pp)), ee);
        rec.n = n;
        rec.sigma = sig;
        rec.parity = parity;
        rec.index = out.size();
        rec.eps_hi = ev.threshold;
        rec.eps_lo = i + 1 < events.size() ? events[i + 1].threshold : min_epsilon(largest);
        out.push_back(std::move(rec));
        if (max_records && out.size() >= max_records) break;
    }
    return out;
}

namespace {

// F(x, k) at rational x, as an expression over exact rationals.
Expr f_at(const mpq_class& x, unsigned k) {
    mpq_class s = 0, px = 1;
    for (unsigned i = 1; i <= k; ++i) {
        px *= x;
        s += px;
    }
    mpq_class arg = 1 + 1 / s;
    arg.canonicalize();
    return log_e(lit(arg)) / log_e(lit(x));
}

// Certified sign of F(x,k) - eps at rational x > 1.
Ordering f_vs_eps(const mpq_class& x, unsigned k, const Expr& eps) {
    return compare(f_at(x, k), eps);
}

}  // namespace

Interval x_k(const Expr& eps, unsigned k, const mpq_class& tol) {
    if (k < 1) throw DomainError("x_k requires k >= 1");
    if (sgn(tol) <= 0) throw DomainError("x_k requires tol > 0");
    Interval eiv = eval(eps, mpq_class(1, 1000000));
    if (!eiv.is_positive()) throw DomainError("x_k requires eps > 0");
    double ed = eiv.lo_d();

    mpq_class lo(1);
    lo += mpq_class(1, 1 << 20);
    double hint = std::max(4.0, 4.0 / (ed * ed));
    mpq_class hi(static_cast<unsigned long>(std::min(hint, 1e18)) + 1);
    // F decreases from +inf to 0 on (1, inf): widen until it brackets.
    while (f_vs_eps(hi, k, eps) == Ordering::Greater) hi *= 2;

    while (mpq_class(hi - lo) > tol) {
        mpq_class mid = (lo + hi) / 2;
        Ordering ord = f_vs_eps(mid, k, eps);
        if (ord == Ordering::Unresolved) {
            // Midpoint indistinguishable from the root; nudge it.
            mid = lo + (hi - lo) * mpq_class(3, 7);
            ord = f_vs_eps(mid, k, eps);
            if (ord == Ordering::Unresolved)
                throw PrecisionExhausted("x_k: bisection point indistinguishable from root");
        }
        if (ord == Ordering::Greater)
            lo = mid;
        else
            hi = mid;
    }

    mpfr_prec_t prec = 128;
    mpfr_t l, h;
    mpfr_init2(l, prec);
    mpfr_init2(h, prec);
    mpfr_set_q(l, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h, hi.get_mpq_t(), MPFR_RNDU);
    Interval out = Interval::from_endpoints(l, h, prec);
    mpfr_clear(l);
    mpfr_clear(h);
    return out;
}

XkLemmaReport verify_xk_lemma(const Expr& eps) {
    XkLemmaReport rep;
    const mpq_class tol(1, 1000000000L);
    Interval x1 = x_k(eps, 1, tol);
    Interval x2 = x_k(eps, 2, tol);
    Interval x3 = x_k(eps, 3, tol);
    rep.x1 = x1.mid_d();
    rep.x2 = x2.mid_d();
    rep.x3 = x3.mid_d();

    Interval r2 = pow_q(x1, mpq_class(1, 2));
    Interval r3 = pow_q(x1, mpq_class(1, 3));
    rep.power_bound = Interval::certainly_less(r2, x2) && Interval::certainly_less(r3, x3);

    Interval two = Interval::exact(2, x1.precision_bits());
    Interval s2x1 = sqrt(two * x1);
    rep.sqrt_sandwich =
        Interval::certainly_less(x2, s2x1) && Interval::certainly_less(sqrt(x1), x2);

    if (x1.lo_d() >= 1530.0) {
        // x2 > sqrt(2 x1) - sqrt(2 x1) log 2 / (2 log x1)
        Interval l2 = log2_interval(x1.precision_bits());
        Interval rhs = s2x1 - s2x1 * l2 / (two * log(x1));
        rep.refined_lower = Interval::certainly_less(rhs, x2);
    }
    return rep;
}

}  // namespace oca
