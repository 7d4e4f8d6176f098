#include "loganon/crypto_map.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <stdexcept>

namespace loganon {

namespace {

constexpr std::size_t kSaltLen = 16;
constexpr std::size_t kDigestLen = 32;
constexpr char kHexDigits[] = "0123456789abcdef";

void sha256(const void* data, std::size_t len, std::uint8_t out[kDigestLen]) {
    unsigned int out_len = 0;
    if (EVP_Digest(data, len, out, &out_len, EVP_sha256(), nullptr) != 1
        || out_len != kDigestLen)
        throw std::runtime_error("SHA-256 computation failed");
}

std::string to_hex(const std::uint8_t* data, std::size_t len) {
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(kHexDigits[data[i] >> 4]);
        out.push_back(kHexDigits[data[i] & 0x0f]);
    }
    return out;
}

}  // namespace

Salt Salt::random() {
    std::vector<std::uint8_t> bytes(kSaltLen);
    if (RAND_bytes(bytes.data(), int(bytes.size())) != 1)
        throw std::runtime_error("OS randomness source unavailable");
    return Salt(std::move(bytes));
}

Salt Salt::from_seed(std::string_view seed) {
    std::uint8_t digest[kDigestLen];
    sha256(seed.data(), seed.size(), digest);
    return Salt(std::vector<std::uint8_t>(digest, digest + kSaltLen));
}

std::string Salt::hex() const {
    return to_hex(bytes_.data(), bytes_.size());
}

std::uint32_t salted_hash_mod(const Salt& salt, std::uint64_t value,
                              std::optional<int> position, std::uint32_t modulus) {
    std::string input = salt.hex();
    input.push_back(':');
    input += std::to_string(value);
    input.push_back(':');
    if (position) input += std::to_string(*position);

    std::uint8_t digest[kDigestLen];
    sha256(input.data(), input.size(), digest);

    // Big-endian digest mod modulus, byte by byte.
    std::uint64_t acc = 0;
    for (std::uint8_t byte : digest) acc = (acc * 256 + byte) % modulus;
    return std::uint32_t(acc);
}

}  // namespace loganon
