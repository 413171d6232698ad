#include "bdprng/sts/berlekamp_massey.hpp"

#include <bit>

namespace bdprng::sts {

namespace {

// XOR src shifted left by `shift` bits into dst (dst has room).
void xor_shifted(std::vector<std::uint64_t>& dst,
                 const std::vector<std::uint64_t>& src, std::size_t shift) {
    const std::size_t word = shift / 64;
    const std::size_t bit = shift % 64;
    for (std::size_t i = 0; i < src.size() && word + i < dst.size(); ++i) {
        dst[word + i] ^= src[i] << bit;
        if (bit != 0 && word + i + 1 < dst.size())
            dst[word + i + 1] ^= src[i] >> (64 - bit);
    }
}

}  // namespace

std::size_t berlekamp_massey(const std::vector<std::uint8_t>& bits) {
    const std::size_t n = bits.size();
    const std::size_t words = (n + 1 + 63) / 64;

    // conn[i] = connection coefficient c_i; window bit i = s[N-i] at step N.
    std::vector<std::uint64_t> conn(words, 0), prev(words, 0), window(words, 0);
    conn[0] = 1;
    prev[0] = 1;
    std::size_t L = 0;
    std::size_t shift = 1;  // steps since prev was the failing connection

    for (std::size_t N = 0; N < n; ++N) {
        std::uint64_t acc = std::uint64_t(bits[N] & 1);
        for (std::size_t i = 0; i < words; ++i) acc ^= conn[i] & window[i];
        const bool discrepancy = (std::popcount(acc) & 1) != 0;
        if (discrepancy) {
            if (2 * L <= N) {
                std::vector<std::uint64_t> saved = conn;
                xor_shifted(conn, prev, shift);
                prev = std::move(saved);
                L = N + 1 - L;
                shift = 1;
            } else {
                xor_shifted(conn, prev, shift);
                ++shift;
            }
        } else {
            ++shift;
        }
        // Slide the window: new bit 1 is s[N], everything else shifts up.
        std::uint64_t carry = std::uint64_t(bits[N] & 1) << 1;
        for (std::size_t i = 0; i < words; ++i) {
            const std::uint64_t next_carry = window[i] >> 63;
            window[i] = (window[i] << 1) | carry;
            carry = next_carry;
        }
        window[0] &= ~std::uint64_t{1};  // bit 0 stays unused
    }
    return L;
}

}  // namespace bdprng::sts
