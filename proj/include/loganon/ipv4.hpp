#ifndef LOGANON_IPV4_HPP
#define LOGANON_IPV4_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace loganon {

// Dotted-quad IPv4 address. Strict text form only: four decimal octets,
// no leading zeros, each in [0,255]. Anything else is treated as
// malformed and passed through untouched by the anonymizers.
struct Ipv4Address {
    std::array<std::uint8_t, 4> octets{};

    std::uint32_t to_u32() const {
        return (std::uint32_t(octets[0]) << 24) | (std::uint32_t(octets[1]) << 16)
             | (std::uint32_t(octets[2]) << 8) | std::uint32_t(octets[3]);
    }
    static Ipv4Address from_u32(std::uint32_t v) {
        return {{std::uint8_t(v >> 24), std::uint8_t(v >> 16), std::uint8_t(v >> 8),
                 std::uint8_t(v)}};
    }

    friend bool operator==(const Ipv4Address&, const Ipv4Address&) = default;
    friend auto operator<=>(const Ipv4Address&, const Ipv4Address&) = default;
};

std::optional<Ipv4Address> parse_ipv4(std::string_view text);
std::string render_ipv4(const Ipv4Address& addr);

}  // namespace loganon

#endif
