// Finite ordered bit sequence with explicit length.
//
// Packing convention (fixed, NIST-STS interoperable): the first-generated bit
// occupies the most significant bit of byte 0.

#ifndef BDPRNG_BITSTREAM_HPP
#define BDPRNG_BITSTREAM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bdprng {

class BitStream {
public:
    BitStream() = default;
    explicit BitStream(std::size_t length)
        : bytes_((length + 7) / 8, 0), length_(length) {}
    // Adopts packed bytes; tail bits beyond `length` are cleared.
    BitStream(std::vector<std::uint8_t> bytes, std::size_t length);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool bit(std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }
    void set_bit(std::size_t i, bool v) {
        const std::uint8_t mask = std::uint8_t(1u << (7 - (i & 7)));
        if (v) bytes_[i >> 3] |= mask; else bytes_[i >> 3] &= std::uint8_t(~mask);
    }
    void append_bit(bool v) {
        if (length_ % 8 == 0) bytes_.push_back(0);
        ++length_;
        set_bit(length_ - 1, v);
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    // Number of one bits in the whole stream.
    std::size_t count_ones() const;

    // '0'/'1' characters, no separators.
    std::string to_ascii() const;
    static BitStream from_ascii(const std::string& text);

    // 64-bit FNV-1a over the packed bytes plus the length, for golden digests.
    std::uint64_t fnv1a_digest() const;

    friend bool operator==(const BitStream& a, const BitStream& b) {
        return a.length_ == b.length_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t length_ = 0;
};

// File I/O. ASCII mode: '0'/'1' characters, whitespace ignored; parse errors
// report the byte offset. Binary mode: packed per the convention above with the
// bit length implied by file size (whole bytes) unless `length` trims it.
BitStream read_bits_ascii(const std::string& path);
BitStream read_bits_binary(const std::string& path, std::size_t length = 0);
void write_bits_ascii(const std::string& path, const BitStream& bits);
void write_bits_binary(const std::string& path, const BitStream& bits);

}  // namespace bdprng

#endif
