#ifndef OCA_CRITERIA_HPP
#define OCA_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oca/abundant.hpp"
#include "oca/divisors.hpp"
#include "oca/expr.hpp"

namespace oca {

// Exact rational H_n = sum_{k<=n} 1/k, by binary splitting.
mpq_class harmonic(unsigned long n);
// H'_n = 2 H_n - H_{2n} = H_n - sum_{n<k<=2n} 1/k, exact.
mpq_class harmonic_prime(unsigned long n);

enum class ThresholdKind { Egamma, HalfEgamma, ThreeQuarterEgamma, C045Egamma };
enum class Verdict { Satisfies, Violates, Unresolved };

Expr threshold_expr(ThresholdKind kind);
const char* threshold_name(ThresholdKind kind);
const char* verdict_name(Verdict v);

struct CheckReport {
    std::string subject;     // n in decimal
    std::string inequality;  // human-readable form that was decided
    Interval lhs{64}, rhs{64};
    Verdict verdict = Verdict::Unresolved;
    mpfr_prec_t precision_bits = 0;  // precision at which the verdict settled
    bool strict = true;              // '<' when true, '<=' otherwise

    std::string json() const;
};

// sigma(n)/(n log log n) < threshold, certified. n >= 3.
CheckReport robin_check(const Factorization& f, ThresholdKind kind);

// sigma(n) <= 3n/log n + exp(H'_n) log(H'_n) for odd n >= 3.
CheckReport lagarias_check(const Factorization& f);

// First inequality of the chain: sigma(n) <= (e^gamma/2) n log log n
// + 2.8 n / log n, for an odd record.
CheckReport lagarias_chain_check(const AbundantRecord& rec);

enum class ScanKind { Robin, Lagarias };

// Restricts the scan domain. OddSquarefree keeps odd squarefree n;
// SquarefreeOddPart keeps n = 2^k m with m odd and squarefree.
enum class Restriction { None, OddSquarefree, SquarefreeOddPart };

struct ScanResult {
    std::uint64_t from = 0, to = 0;
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> violations;
    std::uint64_t certified_fallbacks = 0;  // candidates past the double filter
    std::vector<std::uint64_t> unresolved;
};

// Certified range scan over integers in [lo, hi]. A conservative
// double-precision filter discards clear cases; everything near the
// boundary is re-decided with interval arithmetic.
ScanResult scan_robin(std::uint64_t lo, std::uint64_t hi, ThresholdKind kind,
                      Parity parity, unsigned threads = 0,
                      Restriction restriction = Restriction::None);
// Odd n only (the inequality is stated for odd n >= 3).
ScanResult scan_lagarias(std::uint64_t lo, std::uint64_t hi, unsigned threads = 0);

enum class LemmaId { L3_3_C, P3_5_threshold, L4_1, L4_2, L4_3, L4_4_concavity };

LemmaId lemma_id_from_string(const std::string& s);
const char* lemma_id_name(LemmaId id);

struct LemmaSamples {
    // Explicit sample points (x1 values, t values, ...) or an integer
    // range [range_lo, range_hi] for the per-n lemmas.
    std::vector<mpq_class> points;
    std::uint64_t range_lo = 0, range_hi = 0;
};

LemmaSamples default_lemma_samples(LemmaId id);

struct LemmaReport {
    LemmaId id = LemmaId::L4_1;
    std::uint64_t total = 0;
    std::vector<std::string> failed_samples;
    std::optional<Interval> largest_c;            // L3_3_C: min over grid of admissible C
    std::optional<std::uint64_t> sign_change_at;  // P3_5: first integer x with expr <= 0
    std::optional<Interval> exp_threshold;        // L4_4: enclosure of e^{6.193}
    bool passed = false;

    std::string json() const;
};

LemmaReport verify_lemma_bounds(LemmaId id, const LemmaSamples& samples);

}  // namespace oca

#endif
