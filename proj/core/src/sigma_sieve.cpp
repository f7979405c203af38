#include "oca/sigma_sieve.hpp"

#include <algorithm>

#include "oca/errors.hpp"

namespace oca {

std::vector<std::uint64_t> sigma_range(std::uint64_t lo, std::uint64_t hi,
                                       const PrimeTable& base) {
    if (lo < 1 || hi < lo) throw DomainError("sigma_range requires 1 <= lo <= hi");
    if (base.limit * base.limit < hi)
        throw DomainError("sigma_range: base prime table too small");
    const std::uint64_t len = hi - lo + 1;
    std::vector<std::uint64_t> sig(len, 1);
    std::vector<std::uint64_t> rem(len);
    for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;
    for (std::uint64_t p : base.primes) {
        if (p * p > hi) break;
        std::uint64_t start = ((lo + p - 1) / p) * p;
        for (std::uint64_t v = start; v <= hi; v += p) {
            std::uint64_t i = v - lo;
            std::uint64_t pe = 1, ps = 1;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                pe *= p;
                ps += pe;
            }
            sig[i] *= ps;
        }
    }
    for (std::uint64_t i = 0; i < len; ++i)
        if (rem[i] > 1) sig[i] *= rem[i] + 1;
    if (lo == 1) sig[0] = 1;
    return sig;
}

}  // namespace oca
