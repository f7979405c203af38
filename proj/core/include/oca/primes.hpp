#ifndef OCA_PRIMES_HPP
#define OCA_PRIMES_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "oca/interval.hpp"

namespace oca {

/// All primes up to `limit`, strictly increasing, built once and then
/// shared read-only.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // Number of primes <= x.
    std::size_t count_below(double x) const;
    std::size_t count_below(const mpq_class& x) const;
    bool contains(std::uint64_t p) const;
};

// Directory for the persisted odd-integer bitset cache. Unset = no
// caching. The file layout (8-byte magic, 8-byte little-endian limit,
// 1 bit per odd integer) is internal.
void set_sieve_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> sieve_cache_dir();

// Segmented sieve of Eratosthenes. limit >= 2 or DomainError.
PrimeTable sieve(std::uint64_t limit);

// Chebyshev theta: sum of log p over primes <= x (odd primes only when
// odd_only). Enclosure width <= tol. theta'(x) = 0 for x < 3.
Interval theta(const PrimeTable& table, const mpq_class& x, bool odd_only,
               const mpq_class& tol);

// A(x) = theta'(x) + theta'(x^{2/3}/2^{1/3}) + theta'(x^{1/2}/2^{1/4}).
// The inner arguments are evaluated as intervals; precision escalates
// until neither enclosure straddles a prime.
Interval a_func(const PrimeTable& table, const mpq_class& x, const mpq_class& tol);

}  // namespace oca

#endif
