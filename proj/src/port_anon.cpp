#include "loganon/port_anon.hpp"

namespace loganon {

std::optional<std::uint16_t> parse_port(std::string_view text) {
    if (text.empty() || text.size() > 5) return std::nullopt;
    if (text.size() > 1 && text[0] == '0') return std::nullopt;
    unsigned value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + unsigned(c - '0');
    }
    if (value > 65535) return std::nullopt;
    return std::uint16_t(value);
}

std::uint16_t PortAnonymizer::anonymize(std::uint16_t port) {
    auto& slot = map_[port];
    if (!slot) {
        if (range_ == PortRange::Full)
            slot = std::uint16_t(salted_hash_mod(salt_, port, std::nullopt, 65536));
        else
            slot = std::uint16_t(1024 + salted_hash_mod(salt_, port, std::nullopt, 64512));
    }
    ++processed_;
    return *slot;
}

std::string PortAnonymizer::anonymize_field(std::string_view text) {
    if (auto port = parse_port(text)) return std::to_string(anonymize(*port));
    return std::string(text);
}

}  // namespace loganon
