#include "loganon/ip_anon.hpp"

namespace loganon {

std::uint8_t OctetMapTable::get_or_fill(const Salt& salt, std::uint8_t in,
                                        std::size_t& hash_count) {
    auto& slot = entries_[in];
    if (!slot) {
        slot = std::uint8_t(salted_hash_mod(salt, in, position_, 256));
        ++populated_;
        ++hash_count;
    }
    return *slot;
}

Ipv4Address IpAnonymizer::anonymize(const Ipv4Address& addr) {
    Ipv4Address out;
    for (int j = 0; j < 4; ++j)
        out.octets[j] = tables_[j].get_or_fill(salt_, addr.octets[j], stats_.hash_invocations);
    ++stats_.addresses_processed;
    return out;
}

std::string IpAnonymizer::anonymize_field(std::string_view text) {
    if (auto addr = parse_ipv4(text)) return render_ipv4(anonymize(*addr));
    ++stats_.malformed_passthrough;
    return std::string(text);
}

bool session_cardinality_check(std::size_t input_count, std::size_t output_count) {
    return input_count == output_count;
}

}  // namespace loganon
