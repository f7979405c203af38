#include "oca/expr.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace oca {

namespace {

std::atomic<mpfr_prec_t> g_ceiling{0};

mpfr_prec_t env_ceiling() {
    if (const char* s = std::getenv("OCA_PRECISION_CEILING")) {
        long v = std::atol(s);
        if (v >= 64) return static_cast<mpfr_prec_t>(v);
    }
    return 4096;
}

Expr node(ExprOp op, Expr a = nullptr, Expr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace

mpfr_prec_t default_precision_ceiling() {
    mpfr_prec_t c = g_ceiling.load();
    if (c == 0) {
        c = env_ceiling();
        g_ceiling.store(c);
    }
    return c;
}

void set_default_precision_ceiling(mpfr_prec_t bits) { g_ceiling.store(bits); }

Expr lit(const mpq_class& q) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Lit;
    n->lit = q;
    n->lit.canonicalize();
    return n;
}

Expr lit(long v) { return lit(mpq_class(v)); }
Expr lit(const mpz_class& v) { return lit(mpq_class(v)); }

Expr lit_decimal(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    size_t dot = t.find('.');
    std::string digits = t;
    size_t frac = 0;
    if (dot != std::string::npos) {
        digits = t.substr(0, dot) + t.substr(dot + 1);
        frac = t.size() - dot - 1;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("bad decimal literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return lit(q);
}

Expr constant(NamedConst c) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Const;
    n->cname = c;
    return n;
}

Expr gamma_expr() { return constant(NamedConst::Gamma); }
Expr pi_expr() { return constant(NamedConst::Pi); }
Expr log2_expr() { return constant(NamedConst::Log2); }

Expr operator+(const Expr& a, const Expr& b) { return node(ExprOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return node(ExprOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return node(ExprOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return node(ExprOp::Div, a, b); }
Expr operator-(const Expr& a) { return node(ExprOp::Neg, a); }
Expr log_e(const Expr& a) { return node(ExprOp::Log, a); }
Expr exp_e(const Expr& a) { return node(ExprOp::Exp, a); }

Expr pow_e(const Expr& a, const mpq_class& exponent) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Pow;
    n->lit = exponent;
    n->lit.canonicalize();
    n->a = a;
    return n;
}

namespace {

bool is_lit(const Expr& e) { return e && e->op == ExprOp::Lit; }

// q^e for integer e with a sanity cap on the exponent magnitude.
bool rational_pow(const mpq_class& base, const mpz_class& e, mpq_class& out) {
    if (!e.fits_slong_p()) return false;
    long k = e.get_si();
    if (std::labs(k) > 100000) return false;
    if (base == 0) {
        if (k <= 0) return false;
        out = 0;
        return true;
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), std::labs(k));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), std::labs(k));
    out = k >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    out.canonicalize();
    return true;
}

// Exact k-th root of a rational, if it exists.
bool rational_root(const mpq_class& base, unsigned long k, mpq_class& out) {
    if (sgn(base) < 0) return false;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), base.get_num().get_mpz_t(), k)) return false;
    if (!mpz_root(rd.get_mpz_t(), base.get_den().get_mpz_t(), k)) return false;
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

// a == b^k for some integer k? (b rational > 0, b != 1)
bool log_quotient(const mpq_class& a, const mpq_class& b, mpz_class& k_out) {
    if (sgn(a) <= 0 || sgn(b) <= 0 || b == 1) return false;
    double la = std::log(a.get_d());
    double lb = std::log(b.get_d());
    if (lb == 0.0) return false;
    double kd = la / lb;
    if (!std::isfinite(kd) || std::fabs(kd) > 100000) return false;
    long k = std::lround(kd);
    mpq_class p;
    if (rational_pow(b, mpz_class(k), p) && p == a) {
        k_out = k;
        return true;
    }
    return false;
}

}  // namespace

Expr canonicalize(const Expr& e) {
    if (!e) throw DomainError("null expression");
    switch (e->op) {
        case ExprOp::Lit:
        case ExprOp::Const:
            return e;
        default:
            break;
    }
    Expr a = e->a ? canonicalize(e->a) : nullptr;
    Expr b = e->b ? canonicalize(e->b) : nullptr;
    switch (e->op) {
        case ExprOp::Add:
            if (is_lit(a) && is_lit(b)) return lit(mpq_class(a->lit + b->lit));
            break;
        case ExprOp::Sub:
            if (is_lit(a) && is_lit(b)) return lit(mpq_class(a->lit - b->lit));
            break;
        case ExprOp::Mul:
            if (is_lit(a) && is_lit(b)) return lit(mpq_class(a->lit * b->lit));
            break;
        case ExprOp::Div:
            if (is_lit(b) && b->lit == 0) throw DomainError("division by zero literal");
            if (is_lit(a) && is_lit(b)) return lit(mpq_class(a->lit / b->lit));
            // log(a)/log(b) with a = b^k exactly
            if (a->op == ExprOp::Log && b->op == ExprOp::Log && is_lit(a->a) && is_lit(b->a)) {
                mpz_class k;
                if (log_quotient(a->a->lit, b->a->lit, k)) return lit(k);
            }
            break;
        case ExprOp::Neg:
            if (is_lit(a)) return lit(mpq_class(-a->lit));
            break;
        case ExprOp::Log:
            if (is_lit(a)) {
                if (sgn(a->lit) <= 0) throw DomainError("log of nonpositive literal");
                if (a->lit == 1) return lit(0L);
            }
            if (a->op == ExprOp::Exp) return a->a;
            break;
        case ExprOp::Exp:
            if (is_lit(a) && a->lit == 0) return lit(1L);
            break;
        case ExprOp::Pow: {
            if (e->lit == 0) return lit(1L);
            if (e->lit == 1) return a;
            if (is_lit(a)) {
                mpq_class folded;
                const mpz_class& den = e->lit.get_den();
                if (den == 1) {
                    if (rational_pow(a->lit, e->lit.get_num(), folded)) return lit(folded);
                } else if (den.fits_ulong_p()) {
                    mpq_class root;
                    if (rational_root(a->lit, den.get_ui(), root) &&
                        rational_pow(root, e->lit.get_num(), folded))
                        return lit(folded);
                }
            }
            auto n = std::make_shared<ExprNode>();
            n->op = ExprOp::Pow;
            n->lit = e->lit;
            n->a = a;
            return n;
        }
        default:
            break;
    }
    if (a == e->a && b == e->b) return e;
    auto n = std::make_shared<ExprNode>();
    n->op = e->op;
    n->lit = e->lit;
    n->cname = e->cname;
    n->a = a;
    n->b = b;
    return n;
}

bool syntactic_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    switch (a->op) {
        case ExprOp::Lit:
            return a->lit == b->lit;
        case ExprOp::Const:
            return a->cname == b->cname;
        case ExprOp::Pow:
            return a->lit == b->lit && syntactic_equal(a->a, b->a);
        case ExprOp::Neg:
        case ExprOp::Log:
        case ExprOp::Exp:
            return syntactic_equal(a->a, b->a);
        default:
            return syntactic_equal(a->a, b->a) && syntactic_equal(a->b, b->b);
    }
}

std::string to_string(const Expr& e) {
    if (!e) return "<null>";
    switch (e->op) {
        case ExprOp::Lit:
            return e->lit.get_str();
        case ExprOp::Const:
            switch (e->cname) {
                case NamedConst::Gamma: return "gamma";
                case NamedConst::Pi: return "pi";
                case NamedConst::Log2: return "log2";
                case NamedConst::MeisselMertens: return "B";
            }
            return "?";
        case ExprOp::Add: return "(" + to_string(e->a) + " + " + to_string(e->b) + ")";
        case ExprOp::Sub: return "(" + to_string(e->a) + " - " + to_string(e->b) + ")";
        case ExprOp::Mul: return "(" + to_string(e->a) + " * " + to_string(e->b) + ")";
        case ExprOp::Div: return "(" + to_string(e->a) + " / " + to_string(e->b) + ")";
        case ExprOp::Neg: return "-(" + to_string(e->a) + ")";
        case ExprOp::Log: return "log(" + to_string(e->a) + ")";
        case ExprOp::Exp: return "exp(" + to_string(e->a) + ")";
        case ExprOp::Pow: return "(" + to_string(e->a) + ")^(" + e->lit.get_str() + ")";
    }
    return "?";
}

Interval eval_at(const Expr& e, mpfr_prec_t prec) {
    if (!e) throw DomainError("null expression");
    switch (e->op) {
        case ExprOp::Lit:
            return Interval::from_mpq(e->lit, prec);
        case ExprOp::Const:
            switch (e->cname) {
                case NamedConst::Gamma: return gamma_interval(prec);
                case NamedConst::Pi: return pi_interval(prec);
                case NamedConst::Log2: return log2_interval(prec);
                case NamedConst::MeisselMertens: return meissel_mertens_interval(prec);
            }
            throw DomainError("unknown constant");
        case ExprOp::Add: return eval_at(e->a, prec) + eval_at(e->b, prec);
        case ExprOp::Sub: return eval_at(e->a, prec) - eval_at(e->b, prec);
        case ExprOp::Mul: return eval_at(e->a, prec) * eval_at(e->b, prec);
        case ExprOp::Div: return eval_at(e->a, prec) / eval_at(e->b, prec);
        case ExprOp::Neg: return -eval_at(e->a, prec);
        case ExprOp::Log: return log(eval_at(e->a, prec));
        case ExprOp::Exp: return exp(eval_at(e->a, prec));
        case ExprOp::Pow: return pow_q(eval_at(e->a, prec), e->lit);
    }
    throw DomainError("unknown operation");
}

Interval eval(const Expr& e, const mpq_class& target_width, EvalOptions opts) {
    if (sgn(target_width) <= 0) throw DomainError("target width must be positive");
    mpfr_prec_t ceiling = opts.ceiling_bits ? opts.ceiling_bits : default_precision_ceiling();
    Expr c = canonicalize(e);
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.start_bits, 16);; prec *= 2) {
        bool last = prec >= ceiling;
        try {
            Interval iv = eval_at(c, std::min(prec, ceiling));
            if (iv.width_leq(target_width)) return iv;
        } catch (const detail::IndeterminateDomain& ex) {
            if (last) throw DomainError(std::string("domain undecidable at precision ceiling: ") + ex.what());
        }
        if (last)
            throw PrecisionExhausted("eval: width target not reached at ceiling for " + to_string(c));
    }
}

Ordering compare(const Expr& a, const Expr& b, EvalOptions opts) {
    Expr ca = canonicalize(a);
    Expr cb = canonicalize(b);
    if (syntactic_equal(ca, cb)) return Ordering::Equal;
    Expr diff = ca - cb;
    mpfr_prec_t ceiling = opts.ceiling_bits ? opts.ceiling_bits : default_precision_ceiling();
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.start_bits, 16);; prec *= 2) {
        bool last = prec >= ceiling;
        try {
            Interval iv = eval_at(diff, std::min(prec, ceiling));
            if (iv.is_positive()) return Ordering::Greater;
            if (iv.is_negative()) return Ordering::Less;
        } catch (const detail::IndeterminateDomain& ex) {
            if (last) throw DomainError(std::string("domain undecidable at precision ceiling: ") + ex.what());
        }
        if (last) return Ordering::Unresolved;
    }
}

mpz_class floor_exact(const Expr& e, EvalOptions opts) {
    Expr c = canonicalize(e);
    if (c->op == ExprOp::Lit) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), c->lit.get_num().get_mpz_t(), c->lit.get_den().get_mpz_t());
        return q;
    }
    mpfr_prec_t ceiling = opts.ceiling_bits ? opts.ceiling_bits : default_precision_ceiling();
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.start_bits, 16);; prec *= 2) {
        bool last = prec >= ceiling;
        try {
            Interval iv = eval_at(c, std::min(prec, ceiling));
            mpz_class fl, fh;
            iv.floor_lo(fl);
            iv.floor_hi(fh);
            if (fl == fh) return fl;
        } catch (const detail::IndeterminateDomain& ex) {
            if (last) throw DomainError(std::string("domain undecidable at precision ceiling: ") + ex.what());
        }
        if (last)
            throw UnresolvedFloor("floor_exact: enclosure straddles an integer at ceiling for " + to_string(c));
    }
}

}  // namespace oca
