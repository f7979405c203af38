#include "oca/interval.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <vector>

namespace oca {

const char* const kGammaDigits200 =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677"
    "2677766467093694706329174674951463144724980708248096050401448654283622417"
    "39976449235362535003337429373377376739427925952582470949160";

const char* const kMeisselMertensDigits50 =
    "0.26149721284764278375542683860869585905156664826119";

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // Leave the source valid for its destructor.
    mpfr_init2(o.lo_, 2);
    mpfr_init2(o.hi_, 2);
}

Interval& Interval::operator=(Interval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::assert_valid() const {
    assert(mpfr_lessequal_p(lo_, hi_));
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec, unsigned long ulps_up) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0)
        throw DomainError("bad decimal literal: " + s);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    if (ulps_up > 0) {
        // Widen hi by ulps_up units in the last decimal place of s.
        size_t dot = s.find('.');
        size_t frac_digits = dot == std::string::npos ? 0 : s.size() - dot - 1;
        mpfr_t ulp;
        mpfr_init2(ulp, prec);
        mpfr_set_ui(ulp, 10, MPFR_RNDU);
        mpfr_pow_si(ulp, ulp, -static_cast<long>(frac_digits), MPFR_RNDU);
        mpfr_mul_ui(ulp, ulp, ulps_up, MPFR_RNDU);
        mpfr_add(r.hi_, r.hi_, ulp, MPFR_RNDU);
        mpfr_clear(ulp);
    }
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

double Interval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::width_leq(const mpq_class& tol) const {
    mpfr_t w, t;
    mpfr_init2(w, prec_ + 32);
    mpfr_init2(t, prec_ + 32);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_set_q(t, tol.get_mpq_t(), MPFR_RNDD);
    bool ok = mpfr_lessequal_p(w, t);
    mpfr_clear(w);
    mpfr_clear(t);
    return ok;
}

bool Interval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains_interval(const Interval& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool Interval::certainly_less(const Interval& a, const Interval& b) {
    return mpfr_less_p(a.hi_, b.lo_);
}

int Interval::floor_lo(mpz_class& out) const {
    mpfr_t f;
    mpfr_init2(f, prec_);
    mpfr_floor(f, lo_);
    int r = mpfr_get_z(out.get_mpz_t(), f, MPFR_RNDZ);
    mpfr_clear(f);
    return r;
}

int Interval::floor_hi(mpz_class& out) const {
    mpfr_t f;
    mpfr_init2(f, prec_);
    mpfr_floor(f, hi_);
    int r = mpfr_get_z(out.get_mpz_t(), f, MPFR_RNDZ);
    mpfr_clear(f);
    return r;
}

static std::string mpfr_to_str(const mpfr_t v, size_t digits, mpfr_rnd_t rnd) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*g", static_cast<int>(digits), rnd, v) < 0)
        return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Interval::lo_str(size_t digits) const { return mpfr_to_str(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_str(size_t digits) const { return mpfr_to_str(hi_, digits, MPFR_RNDU); }

std::string Interval::str(size_t digits) const {
    return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        if (mpfr_sgn(b.lo_) == 0 && mpfr_sgn(b.hi_) == 0)
            throw DomainError("interval division by zero");
        throw detail::IndeterminateDomain("divisor interval straddles zero");
    }
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_div(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_div(c[3], a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_div(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_div(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_div(c[3], a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) {
        if (mpfr_sgn(a.hi_) <= 0) throw DomainError("log of nonpositive interval");
        throw detail::IndeterminateDomain("log argument enclosure touches zero");
    }
    Interval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) {
        if (mpfr_sgn(a.hi_) < 0) throw DomainError("sqrt of negative interval");
        throw detail::IndeterminateDomain("sqrt argument enclosure dips below zero");
    }
    Interval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval pow_si(const Interval& a, long e) {
    Interval r(a.prec_);
    if (e == 0) {
        mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
        mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    if (mpfr_sgn(a.lo_) > 0) {
        if (e > 0) {
            mpfr_pow_si(r.lo_, a.lo_, e, MPFR_RNDD);
            mpfr_pow_si(r.hi_, a.hi_, e, MPFR_RNDU);
        } else {
            mpfr_pow_si(r.lo_, a.hi_, e, MPFR_RNDD);
            mpfr_pow_si(r.hi_, a.lo_, e, MPFR_RNDU);
        }
        return r;
    }
    if (e > 0 && e % 2 == 1) {
        mpfr_pow_si(r.lo_, a.lo_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, a.hi_, e, MPFR_RNDU);
        return r;
    }
    if (e > 0) {  // even power of an interval possibly containing 0
        mpfr_t p, q;
        mpfr_init2(p, a.prec_);
        mpfr_init2(q, a.prec_);
        mpfr_pow_si(p, a.lo_, e, MPFR_RNDU);
        mpfr_pow_si(q, a.hi_, e, MPFR_RNDU);
        mpfr_max(r.hi_, p, q, MPFR_RNDU);
        if (a.contains_zero())
            mpfr_set_zero(r.lo_, 1);
        else {
            mpfr_pow_si(p, a.lo_, e, MPFR_RNDD);
            mpfr_pow_si(q, a.hi_, e, MPFR_RNDD);
            mpfr_min(r.lo_, p, q, MPFR_RNDD);
        }
        mpfr_clear(p);
        mpfr_clear(q);
        return r;
    }
    throw detail::IndeterminateDomain("negative power of interval touching zero");
}

Interval pow_q(const Interval& a, const mpq_class& e) {
    if (mpz_cmp_ui(e.get_den().get_mpz_t(), 1) == 0 && e.get_num().fits_slong_p())
        return pow_si(a, e.get_num().get_si());
    // x^(p/q) = exp((p/q) log x), x > 0 required
    Interval le = log(a);
    Interval re = Interval::from_mpq(e, a.precision_bits());
    return exp(le * re);
}

Interval gamma_interval(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_euler(r.lo_, MPFR_RNDD);
    mpfr_const_euler(r.hi_, MPFR_RNDU);
    return r;
}

Interval pi_interval(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval log2_interval(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
}

Interval meissel_mertens_interval(mpfr_prec_t prec) {
    return Interval::from_decimal(kMeisselMertensDigits50, prec, 1);
}

}  // namespace oca
