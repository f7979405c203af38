#ifndef OCA_EXPR_HPP
#define OCA_EXPR_HPP

#include <gmpxx.h>
#include <memory>
#include <string>

#include "oca/interval.hpp"

namespace oca {

// Immutable expression tree over exact rationals, named constants and
// elementary operations. Every transcendental quantity in the library
// (critical epsilons, thresholds, e^gamma/2, ...) is carried as an Expr
// and only turned into numbers through certified interval evaluation.

enum class ExprOp { Lit, Const, Add, Sub, Mul, Div, Neg, Log, Exp, Pow };
enum class NamedConst { Gamma, Pi, Log2, MeisselMertens };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprOp op;
    mpq_class lit;       // Lit value, or Pow exponent
    NamedConst cname{NamedConst::Gamma};
    Expr a, b;
};

Expr lit(const mpq_class& q);
Expr lit(long v);
Expr lit(const mpz_class& v);
// Exact rational from a decimal string like "0.021" or "2.05282".
Expr lit_decimal(const std::string& s);
Expr constant(NamedConst c);
Expr gamma_expr();
Expr pi_expr();
Expr log2_expr();

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr log_e(const Expr& a);
Expr exp_e(const Expr& a);
Expr pow_e(const Expr& a, const mpq_class& exponent);

// Fold rational subtrees, resolve exact powers and log-quotients such as
// log(b^k)/log(b) = k. Equality of expressions is only ever claimed
// syntactically, on canonical forms.
Expr canonicalize(const Expr& e);
bool syntactic_equal(const Expr& a, const Expr& b);
std::string to_string(const Expr& e);

// Precision escalation schedule: start bits doubling up to the ceiling.
struct EvalOptions {
    mpfr_prec_t start_bits = 64;
    mpfr_prec_t ceiling_bits = 0;  // 0 = library default
};

mpfr_prec_t default_precision_ceiling();
void set_default_precision_ceiling(mpfr_prec_t bits);

// Single-shot evaluation at a fixed precision. May throw
// detail::IndeterminateDomain when a domain check cannot be decided at
// this precision.
Interval eval_at(const Expr& e, mpfr_prec_t prec);

// Enclosure with hi - lo <= target_width, escalating precision.
Interval eval(const Expr& e, const mpq_class& target_width, EvalOptions opts = {});

enum class Ordering { Less, Greater, Equal, Unresolved };

// Certified comparison. Equal only for syntactically identical
// canonical forms; Less/Greater from disjoint enclosures; Unresolved at
// the ceiling.
Ordering compare(const Expr& a, const Expr& b, EvalOptions opts = {});

// Exact floor; throws UnresolvedFloor if the enclosure still straddles
// an integer at the ceiling.
mpz_class floor_exact(const Expr& e, EvalOptions opts = {});

}  // namespace oca

#endif
