#ifndef OCA_SIGMA_SIEVE_HPP
#define OCA_SIGMA_SIEVE_HPP

#include <cstdint>
#include <vector>

#include "oca/primes.hpp"

namespace oca {

// sigma(n) for every n in [lo, hi], segmented. `base` must contain all
// primes up to sqrt(hi). Values must stay below 2^64 (safe for
// hi <= 10^12).
std::vector<std::uint64_t> sigma_range(std::uint64_t lo, std::uint64_t hi,
                                       const PrimeTable& base);

}  // namespace oca

#endif
