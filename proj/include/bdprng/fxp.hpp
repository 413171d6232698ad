// Parametric unsigned fixed-point arithmetic for word lengths 8..64.
//
// Two Q-formats are used:
//   State  = Q0.n     values in [0, 1 - 2^-n]
//   Gamma  = Q2.(n-2) values in [0, 4 - 2^-(n-2)]
// All multiplies truncate (keep the top bits of the double-width product),
// matching a hardware integer multiplier datapath.

#ifndef BDPRNG_FXP_HPP
#define BDPRNG_FXP_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bdprng {

using uint128 = unsigned __int128;

enum class FxRole : std::uint8_t { State, Gamma };

struct FxFormat {
    std::uint32_t word_length = 32;
    FxRole role = FxRole::State;

    FxFormat() = default;
    FxFormat(std::uint32_t n, FxRole r) : word_length(n), role(r) {
        if (n < 8 || n > 64)
            throw std::out_of_range("FxFormat: word length must be in [8, 64], got " +
                                    std::to_string(n));
    }

    std::uint32_t integer_bits() const { return role == FxRole::Gamma ? 2u : 0u; }
    std::uint32_t fraction_bits() const { return word_length - integer_bits(); }

    // Mask of the n valid raw bits.
    std::uint64_t raw_mask() const {
        return word_length == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << word_length) - 1;
    }

    friend bool operator==(const FxFormat& a, const FxFormat& b) {
        return a.word_length == b.word_length && a.role == b.role;
    }
};

inline FxFormat state_format(std::uint32_t n) { return FxFormat(n, FxRole::State); }
inline FxFormat gamma_format(std::uint32_t n) { return FxFormat(n, FxRole::Gamma); }

struct FxWord {
    std::uint64_t raw = 0;
    FxFormat format{};

    FxWord() = default;
    FxWord(std::uint64_t r, FxFormat f) : raw(r), format(f) {
        if (r > f.raw_mask())
            throw std::out_of_range("FxWord: raw value exceeds word length");
    }

    friend bool operator==(const FxWord& a, const FxWord& b) {
        return a.raw == b.raw && a.format == b.format;
    }
};

// Real value of a word: raw / 2^fraction_bits.
inline long double decode(const FxWord& x) {
    return std::ldexp(static_cast<long double>(x.raw),
                      -static_cast<int>(x.format.fraction_bits()));
}

// raw = floor(v * 2^fraction_bits). v must lie in the representable range.
inline FxWord encode_real(long double v, FxFormat format) {
    const long double upper = std::ldexp(1.0L, static_cast<int>(format.integer_bits()));
    if (!(v >= 0.0L) || v >= upper)
        throw std::out_of_range("encode_real: value out of range for format");
    const long double scaled =
        std::floor(std::ldexp(v, static_cast<int>(format.fraction_bits())));
    auto raw = static_cast<std::uint64_t>(static_cast<uint128>(scaled));
    if (raw > format.raw_mask()) raw = format.raw_mask();  // floor at the top ulp
    return FxWord(raw, format);
}

// (1 - x) as pure modular negation: raw' = (2^n - raw) mod 2^n.
// Exact 1-x for raw != 0; wraps 0 to 0, making x=0 a fixed point.
inline FxWord one_minus_wrap(const FxWord& x) {
    if (x.format.role != FxRole::State)
        throw std::invalid_argument("one_minus_wrap: State operand required");
    return FxWord((0 - x.raw) & x.format.raw_mask(), x.format);
}

// State x State -> State, truncating: floor(a*b / 2^n).
inline FxWord mul_state(const FxWord& a, const FxWord& b) {
    if (a.format.role != FxRole::State || b.format.role != FxRole::State ||
        a.format.word_length != b.format.word_length)
        throw std::invalid_argument("mul_state: operands must share a State format");
    const uint128 prod = static_cast<uint128>(a.raw) * b.raw;
    return FxWord(static_cast<std::uint64_t>(prod >> a.format.word_length), a.format);
}

// Gamma x State -> State, truncating: floor(g*t / 2^(n-2)).
// Caller must guarantee t <= 2^(n-2) (t = x(1-x) <= 1/4); violating that is an
// internal contract error, not a data condition.
inline FxWord mul_gamma(const FxWord& g, const FxWord& t) {
    if (g.format.role != FxRole::Gamma || t.format.role != FxRole::State ||
        g.format.word_length != t.format.word_length)
        throw std::invalid_argument("mul_gamma: Gamma x State of equal width required");
    const std::uint32_t n = g.format.word_length;
    const uint128 prod = static_cast<uint128>(g.raw) * t.raw;
    const uint128 shifted = prod >> (n - 2);
    if (shifted > t.format.raw_mask())
        throw std::logic_error("mul_gamma: product overflow, operand contract violated");
    return FxWord(static_cast<std::uint64_t>(shifted), t.format);
}

// Hex serialization used by config files and reports: lowercase, 0x prefix.
std::string to_hex(std::uint64_t raw);
std::uint64_t parse_hex(const std::string& text);

}  // namespace bdprng

#endif
