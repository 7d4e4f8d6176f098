#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "loganon/crypto_map.hpp"

using namespace loganon;

// Golden values computed by an independent SHA-256 oracle over the
// canonical serialization (salt_hex ":" value ":" position_or_empty)
// before this module was built. See tests/oracle/hash_oracle.py.

TEST_CASE("seeded salt expansion is deterministic and documented") {
    Salt a = Salt::from_seed("test-vector-1");
    Salt b = Salt::from_seed("test-vector-1");
    CHECK(a == b);
    CHECK(a.hex() == "0ce49488895483a9bb31e6ea3690ac80");
    CHECK(a.bytes().size() >= 16);

    Salt c = Salt::from_seed("test-vector-2");
    CHECK(c.hex() == "146ea298d3896042e509bf4c8fffe109");
    CHECK(!(a == c));
}

TEST_CASE("random salts are fresh") {
    std::set<std::string> seen;
    for (int i = 0; i < 50; ++i) {
        Salt s = Salt::random();
        CHECK(s.bytes().size() >= 16);
        seen.insert(s.hex());
    }
    CHECK(seen.size() == 50);
}

TEST_CASE("golden hash value") {
    Salt s = Salt::from_seed("test-vector-1");
    CHECK(salted_hash_mod(s, 168, 2, 256) == 241);
}

TEST_CASE("determinism and degenerate modulus") {
    Salt s = Salt::from_seed("x");
    CHECK(salted_hash_mod(s, 42, 3, 256) == salted_hash_mod(s, 42, 3, 256));
    for (int v = 0; v < 32; ++v) CHECK(salted_hash_mod(s, v, std::nullopt, 1) == 0);
}

TEST_CASE("position tag enters the hash") {
    int total_diff = 0;
    const int salts = 10;
    for (int k = 0; k < salts; ++k) {
        Salt s = Salt::from_seed("pos-sens-" + std::to_string(k));
        for (int v = 0; v < 256; ++v)
            if (salted_hash_mod(s, v, 1, 256) != salted_hash_mod(s, v, 2, 256)) ++total_diff;
    }
    // >= 99% of values must differ between positions, on average.
    CHECK(double(total_diff) / (salts * 256) >= 0.99);
}

TEST_CASE("independent salts induce nearly disjoint maps") {
    double agreement = 0.0;
    const int pairs = 20;
    for (int k = 0; k < pairs; ++k) {
        Salt a = Salt::from_seed("salt-a-" + std::to_string(k));
        Salt b = Salt::from_seed("salt-b-" + std::to_string(k));
        int agree = 0;
        for (int v = 0; v < 256; ++v)
            if (salted_hash_mod(a, v, 1, 256) == salted_hash_mod(b, v, 1, 256)) ++agree;
        agreement += double(agree) / 256.0;
    }
    CHECK(agreement / pairs < 0.05);  // expected ~1/256
}

TEST_CASE("output uniformity (chi-square over 2^16 inputs)") {
    Salt s = Salt::from_seed("uniformity");
    std::array<std::uint32_t, 256> buckets{};
    const int n = 1 << 16;
    for (int v = 0; v < n; ++v) ++buckets[salted_hash_mod(s, v, std::nullopt, 256)];
    double expected = double(n) / 256.0;
    double chi2 = 0.0;
    for (auto count : buckets) {
        double d = double(count) - expected;
        chi2 += d * d / expected;
    }
    // chi2.ppf(0.999, df=255) = 330.5197
    CHECK(chi2 < 330.5197);
}
