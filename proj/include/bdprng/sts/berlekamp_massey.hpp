#ifndef BDPRNG_STS_BERLEKAMP_MASSEY_HPP
#define BDPRNG_STS_BERLEKAMP_MASSEY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bdprng::sts {

// Length of the shortest LFSR generating the block (bits in order, one per
// element). All-zero input has linear complexity 0.
std::size_t berlekamp_massey(const std::vector<std::uint8_t>& bits);

}  // namespace bdprng::sts

#endif
