#ifndef LOGANON_IP_ANON_HPP
#define LOGANON_IP_ANON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "loganon/crypto_map.hpp"
#include "loganon/ipv4.hpp"

namespace loganon {

// Lazily populated octet->octet mapping for one octet position. Entries
// are written once and never overwritten within a session.
class OctetMapTable {
public:
    explicit OctetMapTable(int position) : position_(position) {}

    int position() const { return position_; }
    std::optional<std::uint8_t> lookup(std::uint8_t in) const { return entries_[in]; }
    std::size_t size() const { return populated_; }

    // First call for `in` computes and stores the mapping; later calls
    // return the stored value without hashing.
    std::uint8_t get_or_fill(const Salt& salt, std::uint8_t in, std::size_t& hash_count);

private:
    int position_;  // 1..4
    std::array<std::optional<std::uint8_t>, 256> entries_{};
    std::size_t populated_ = 0;
};

struct IpAnonStats {
    std::size_t addresses_processed = 0;
    std::size_t malformed_passthrough = 0;
    std::size_t hash_invocations = 0;  // bounded by 1024 per session
};

// Per-octet, position-preserving IP anonymizer. One instance per
// session (one salt). Single-writer while tables populate; read-only
// shareable after.
class IpAnonymizer {
public:
    explicit IpAnonymizer(Salt salt) : salt_(std::move(salt)) {}

    Ipv4Address anonymize(const Ipv4Address& addr);

    // Valid dotted quad -> rendered anonymized address; anything else is
    // returned byte-identical.
    std::string anonymize_field(std::string_view text);

    const IpAnonStats& stats() const { return stats_; }
    const OctetMapTable& table(int position) const { return tables_[position - 1]; }
    const Salt& salt() const { return salt_; }

private:
    Salt salt_;
    std::array<OctetMapTable, 4> tables_{OctetMapTable{1}, OctetMapTable{2},
                                         OctetMapTable{3}, OctetMapTable{4}};
    IpAnonStats stats_;
};

// Phase-III integrity check: record counts in and out of a session must
// match exactly.
bool session_cardinality_check(std::size_t input_count, std::size_t output_count);

}  // namespace loganon

#endif
