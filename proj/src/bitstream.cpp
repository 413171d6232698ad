#include "bdprng/bitstream.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace bdprng {

BitStream::BitStream(std::vector<std::uint8_t> bytes, std::size_t length)
    : bytes_(std::move(bytes)), length_(length) {
    if (length > bytes_.size() * 8)
        throw std::invalid_argument("BitStream: length exceeds supplied bytes");
    bytes_.resize((length + 7) / 8);
    if (length % 8 != 0 && !bytes_.empty())
        bytes_.back() &= std::uint8_t(0xFFu << (8 - length % 8));
}

std::size_t BitStream::count_ones() const {
    std::size_t ones = 0;
    for (std::size_t i = 0; i + 1 < bytes_.size(); ++i)
        ones += static_cast<std::size_t>(std::popcount(bytes_[i]));
    if (!bytes_.empty()) {
        // Last byte: only the bits inside length_ count.
        const std::size_t used = length_ - 8 * (bytes_.size() - 1);
        const std::uint8_t masked =
            std::uint8_t(bytes_.back() & (0xFFu << (8 - used)));
        ones += static_cast<std::size_t>(std::popcount(masked));
    }
    return ones;
}

std::string BitStream::to_ascii() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

BitStream BitStream::from_ascii(const std::string& text) {
    BitStream out;
    for (char c : text) {
        if (c == '0' || c == '1') out.append_bit(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("BitStream: invalid character '") +
                                        c + "'");
    }
    return out;
}

std::uint64_t BitStream::fnv1a_digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint8_t b) {
        h ^= b;
        h *= 0x100000001b3ull;
    };
    for (std::uint8_t b : bytes_) mix(b);
    for (int i = 0; i < 8; ++i) mix(std::uint8_t(length_ >> (8 * i)));
    return h;
}

BitStream read_bits_ascii(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    BitStream out;
    char c;
    std::size_t offset = 0;
    while (in.get(c)) {
        if (c == '0' || c == '1') out.append_bit(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::runtime_error(path + ": invalid character at byte offset " +
                                     std::to_string(offset));
        ++offset;
    }
    return out;
}

BitStream read_bits_binary(const std::string& path, std::size_t length) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    const std::size_t available = bytes.size() * 8;
    if (length == 0) length = available;
    if (length > available)
        throw std::runtime_error(path + ": requested " + std::to_string(length) +
                                 " bits but file holds " + std::to_string(available));
    return BitStream(std::move(bytes), length);
}

void write_bits_ascii(const std::string& path, const BitStream& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << bits.to_ascii();
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_bits_binary(const std::string& path, const BitStream& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bits.bytes().data()),
              static_cast<std::streamsize>(bits.bytes().size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bdprng
