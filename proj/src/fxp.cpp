#include "bdprng/fxp.hpp"

#include <cstdio>

namespace bdprng {

std::string to_hex(std::uint64_t raw) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(raw));
    return buf;
}

std::uint64_t parse_hex(const std::string& text) {
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &pos, 0);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_hex: not an integer literal: " + text);
    }
    if (pos != text.size())
        throw std::invalid_argument("parse_hex: trailing characters in " + text);
    return value;
}

}  // namespace bdprng
