#include "loganon/ipv4.hpp"

namespace loganon {

std::optional<Ipv4Address> parse_ipv4(std::string_view text) {
    Ipv4Address addr;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            if (pos >= text.size() || text[pos] != '.') return std::nullopt;
            ++pos;
        }
        std::size_t start = pos;
        unsigned value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + unsigned(text[pos] - '0');
            if (value > 255) return std::nullopt;
            ++pos;
        }
        std::size_t len = pos - start;
        if (len == 0 || len > 3) return std::nullopt;
        // "010" and "00" are ambiguous octal-ish forms; reject.
        if (len > 1 && text[start] == '0') return std::nullopt;
        addr.octets[i] = std::uint8_t(value);
    }
    if (pos != text.size()) return std::nullopt;
    return addr;
}

std::string render_ipv4(const Ipv4Address& addr) {
    std::string out;
    out.reserve(15);
    for (int i = 0; i < 4; ++i) {
        if (i > 0) out.push_back('.');
        out += std::to_string(unsigned(addr.octets[i]));
    }
    return out;
}

}  // namespace loganon
