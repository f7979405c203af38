#ifndef OCA_CONSTANTS_HPP
#define OCA_CONSTANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oca/interval.hpp"

namespace oca {

struct NamedConstant {
    std::string name;
    Interval value{64};
    std::string derivation;
};

// Euler-Mascheroni gamma, width <= 10^-digits. 1 <= digits <= 200.
Interval gamma_const(unsigned digits);
Interval egamma_const(unsigned digits);

// Meissel-Mertens B = gamma + sum_p (log(1 - 1/p) + 1/p), truncated at
// a sieve limit with the tail enclosed via sum_{n>X} 1/n^2 <= 1/X.
// 1 <= digits <= 15; throws PrecisionExhausted beyond the reachable
// truncation.
Interval meissel_mertens(unsigned digits);

// alpha_{4,1} = (pi e^gamma/8 prod_{p = 3 mod 4}(1 - 1/p^2))^{1/2},
// truncated product over p <= prime_limit (>= 10^4), tail in
// [prod * (1 - 1/prime_limit), prod].
Interval alpha_4_1(std::uint64_t prime_limit);
// alpha_{4,3} = e^gamma / (2 alpha_{4,1}).
Interval alpha_4_3(std::uint64_t prime_limit);

std::vector<NamedConstant> all_constants(unsigned digits, std::uint64_t prime_limit);

}  // namespace oca

#endif
