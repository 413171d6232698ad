// Digitized logistic map step and chaotic-parameter range helpers.

#ifndef BDPRNG_MAPS_HPP
#define BDPRNG_MAPS_HPP

#include <cstdint>
#include <stdexcept>

#include "bdprng/fxp.hpp"

namespace bdprng {

// Raw Gamma bounds of the chaotic region [3.57, 4).
struct ChaoticRange {
    std::uint64_t g_min = 0;
    std::uint64_t g_max = 0;
};

// g_min = ceil(3.57 * 2^(n-2)), computed exactly as ceil(357 * 2^(n-2) / 100);
// g_max = 2^n - 1 (gamma = 4 is unrepresentable by construction).
inline ChaoticRange chaotic_range(std::uint32_t n) {
    if (n < 8 || n > 64)
        throw std::out_of_range("chaotic_range: word length must be in [8, 64]");
    const uint128 scaled = static_cast<uint128>(357) << (n - 2);
    const std::uint64_t g_min = static_cast<std::uint64_t>((scaled + 99) / 100);
    return {g_min, state_format(n).raw_mask()};
}

// One iteration of x' = gamma * x * (1 - x) in fixed point.
inline FxWord logistic_step(const FxWord& x, const FxWord& g) {
    return mul_gamma(g, mul_state(x, one_minus_wrap(x)));
}

// Raw-integer form used by tight generator and cycle-detection loops.
inline std::uint64_t logistic_step_raw(std::uint64_t x, std::uint64_t g, std::uint32_t n) {
    const std::uint64_t mask =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t one_minus = (0 - x) & mask;
    const std::uint64_t t =
        static_cast<std::uint64_t>((static_cast<uint128>(x) * one_minus) >> n);
    return static_cast<std::uint64_t>((static_cast<uint128>(g) * t) >> (n - 2));
}

}  // namespace bdprng

#endif
