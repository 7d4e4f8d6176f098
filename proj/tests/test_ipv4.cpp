#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loganon/ipv4.hpp"

using namespace loganon;

TEST_CASE("parse valid dotted quads") {
    auto a = parse_ipv4("192.168.1.178");
    REQUIRE(a.has_value());
    CHECK(a->octets == std::array<std::uint8_t, 4>{192, 168, 1, 178});

    auto zero = parse_ipv4("0.0.0.0");
    REQUIRE(zero.has_value());
    CHECK(zero->octets == std::array<std::uint8_t, 4>{0, 0, 0, 0});

    auto max = parse_ipv4("255.255.255.255");
    REQUIRE(max.has_value());
    CHECK(max->octets == std::array<std::uint8_t, 4>{255, 255, 255, 255});
}

TEST_CASE("malformed inputs are rejected, not errors") {
    CHECK(!parse_ipv4("256.1.1.1"));
    CHECK(!parse_ipv4("1.2.3"));
    CHECK(!parse_ipv4("1.2.3.4.5"));
    CHECK(!parse_ipv4("010.1.1.1"));  // leading zero: ambiguous octal form
    CHECK(!parse_ipv4("00.1.1.1"));
    CHECK(!parse_ipv4("1.2.3.4 "));
    CHECK(!parse_ipv4(" 1.2.3.4"));
    CHECK(!parse_ipv4("not-an-ip"));
    CHECK(!parse_ipv4(""));
    CHECK(!parse_ipv4("1.2.3.-4"));
    CHECK(!parse_ipv4("::1"));
    CHECK(!parse_ipv4("2001:db8::1"));
    CHECK(!parse_ipv4("1..2.3"));
}

TEST_CASE("render") {
    CHECK(render_ipv4({{10, 0, 0, 1}}) == "10.0.0.1");
    CHECK(render_ipv4({{0, 0, 0, 0}}) == "0.0.0.0");
    CHECK(render_ipv4({{129, 195, 79, 250}}) == "129.195.79.250");
}

TEST_CASE("parse/render round-trip over random addresses") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20000; ++i) {
        Ipv4Address a = Ipv4Address::from_u32(std::uint32_t(rng()));
        auto back = parse_ipv4(render_ipv4(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("u32 conversion is consistent") {
    Ipv4Address a{{192, 168, 1, 2}};
    CHECK(a.to_u32() == 0xC0A80102u);
    CHECK(Ipv4Address::from_u32(0xC0A80102u) == a);
}
