#ifndef LOGANON_CRYPTO_MAP_HPP
#define LOGANON_CRYPTO_MAP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loganon {

// Per-session secret driving every hash mapping. Held in memory only;
// never serialized unless the operator explicitly asks for escrow.
class Salt {
public:
    // Cryptographically random salt from the OS source. Throws
    // std::runtime_error if the randomness source fails.
    static Salt random();

    // Deterministic salt expanded from a seed string. Test/reproduction
    // mode only; the pipeline uses random() unless a seed is configured.
    static Salt from_seed(std::string_view seed);

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::string hex() const;

    friend bool operator==(const Salt&, const Salt&) = default;

private:
    explicit Salt(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}
    std::vector<std::uint8_t> bytes_;  // >= 16 bytes
};

// SHA-256 over the canonical serialization
//   salt_hex ":" value_decimal ":" position_decimal_or_empty
// with the digest taken as a big-endian unsigned integer mod `modulus`.
// Deterministic across runs and platforms; pure.
std::uint32_t salted_hash_mod(const Salt& salt, std::uint64_t value,
                              std::optional<int> position, std::uint32_t modulus);

}  // namespace loganon

#endif
