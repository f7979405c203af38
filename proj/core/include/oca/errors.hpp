#ifndef OCA_ERRORS_HPP
#define OCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oca {

// Argument outside the mathematical domain of an operation
// (log of a nonpositive value, division by zero, bad modulus, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The precision ceiling was reached without achieving the requested
// enclosure width or resolving a comparison that must be resolved.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// floor_exact hit the ceiling with the enclosure still straddling an
// integer: the value sits on (or indistinguishably close to) a critical
// boundary. Callers treat this as a tie.
struct UnresolvedFloor : std::runtime_error {
    explicit UnresolvedFloor(const std::string& what) : std::runtime_error(what) {}
};

// Two critical thresholds could not be separated at the ceiling.
struct TieError : std::runtime_error {
    explicit TieError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
// Thrown internally when an interval straddles a domain boundary
// (e.g. log argument enclosure contains 0): the evaluator retries at
// higher precision and only surfaces DomainError if the straddle
// persists at the ceiling.
struct IndeterminateDomain : std::runtime_error {
    explicit IndeterminateDomain(const std::string& what) : std::runtime_error(what) {}
};
}  // namespace detail

}  // namespace oca

#endif
