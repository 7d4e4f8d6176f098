#ifndef LOGANON_PORT_ANON_HPP
#define LOGANON_PORT_ANON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loganon/crypto_map.hpp"

namespace loganon {

enum class PortRange {
    Full,         // 0-65535
    NonReserved,  // 1024-65535
};

// Full-value salted-hash port anonymizer. Src and dst ports share one
// map: no position tag enters the hash.
class PortAnonymizer {
public:
    explicit PortAnonymizer(Salt salt, PortRange range = PortRange::Full)
        : salt_(std::move(salt)), range_(range), map_(65536) {}

    std::uint16_t anonymize(std::uint16_t port);

    // Decimal in [0,65535] -> anonymized decimal; anything else is
    // returned byte-identical.
    std::string anonymize_field(std::string_view text);

    PortRange range() const { return range_; }
    std::size_t ports_processed() const { return processed_; }

private:
    Salt salt_;
    PortRange range_;
    std::vector<std::optional<std::uint16_t>> map_;
    std::size_t processed_ = 0;
};

// Strict decimal port parse: no sign, no leading zeros beyond "0",
// value in [0,65535].
std::optional<std::uint16_t> parse_port(std::string_view text);

}  // namespace loganon

#endif
