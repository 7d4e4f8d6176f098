#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "loganon/parser.hpp"
#include "sample_logs.hpp"

using namespace loganon;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("suricata sample line yields all five spans") {
    auto profile = FormatProfile::suricata();
    std::string line = "03/17/2025-22:48:07.698063  192.168.1.178:57621 -> 192.168.1.255:57621";
    auto record = profile.parse_line(line, 1);
    REQUIRE(record.has_value());
    REQUIRE(record->spans.size() == 5);
    CHECK(record->find(FieldKind::Timestamp)->slice(record->raw)
          == "03/17/2025-22:48:07.698063");
    CHECK(record->find(FieldKind::SrcIp)->slice(record->raw) == "192.168.1.178");
    CHECK(record->find(FieldKind::SrcPort)->slice(record->raw) == "57621");
    CHECK(record->find(FieldKind::DstIp)->slice(record->raw) == "192.168.1.255");
    CHECK(record->find(FieldKind::DstPort)->slice(record->raw) == "57621");

    auto ts = parse_timestamp("03/17/2025-22:48:07.698063", TimestampFormat::SuricataDateTime);
    REQUIRE(ts.has_value());
    CHECK(ts->micros == 1742251687698063LL);  // independent calendar oracle
    CHECK(render_timestamp(*ts, 6) == "03/17/2025-22:48:07.698063");
}

TEST_CASE("suricata fast-log alert text between timestamp and addresses") {
    auto profile = FormatProfile::suricata();
    std::string line =
        "03/17/2025-22:49:27.132054  [**] [1:2019401:2] ET POLICY thing [**] "
        "{TCP} 203.0.113.76:80 -> 192.168.1.192:36734";
    auto record = profile.parse_line(line, 1);
    REQUIRE(record.has_value());
    CHECK(record->find(FieldKind::SrcIp)->slice(record->raw) == "203.0.113.76");
    CHECK(record->find(FieldKind::DstPort)->slice(record->raw) == "36734");
}

TEST_CASE("empty and non-matching lines pass through") {
    auto profile = FormatProfile::suricata();
    CHECK(!profile.parse_line("", 1));
    CHECK(!profile.parse_line("random text", 2));
    CHECK(!profile.parse_line("03/17/2025-22:48:07.698063  no addresses here", 3));
}

TEST_CASE("custom pattern span offsets") {
    auto profile = FormatProfile::custom("ip={src_ip} ok");
    auto record = profile.parse_line("ip=10.0.0.1 ok", 1);
    REQUIRE(record.has_value());
    REQUIRE(record->spans.size() == 1);
    CHECK(record->spans[0].kind == FieldKind::SrcIp);
    CHECK(record->spans[0].byte_start == 3);  // hand-counted on the synthetic line
    CHECK(record->spans[0].byte_end == 11);
}

TEST_CASE("custom pattern validation") {
    CHECK_THROWS_AS(FormatProfile::custom("{bogus}"), std::invalid_argument);
    CHECK_THROWS_AS(FormatProfile::custom("no placeholders"), std::invalid_argument);
    CHECK_THROWS_AS(FormatProfile::custom("({src_ip})"), std::invalid_argument);
    CHECK_NOTHROW(FormatProfile::custom("(?:x|y) {src_ip}"));
}

TEST_CASE("zeek conn.log columns") {
    auto profile = FormatProfile::zeek();
    std::string line =
        "1591367999.305988\tCMdzit1AMNsmfAIiQc\t192.168.4.76\t36844\t192.168.4.1\t53\t"
        "udp\tdns\t0.06685";
    auto record = profile.parse_line(line, 1);
    REQUIRE(record.has_value());
    CHECK(record->find(FieldKind::Timestamp)->slice(record->raw) == "1591367999.305988");
    CHECK(record->find(FieldKind::SrcIp)->slice(record->raw) == "192.168.4.76");
    CHECK(record->find(FieldKind::SrcPort)->slice(record->raw) == "36844");
    CHECK(record->find(FieldKind::DstIp)->slice(record->raw) == "192.168.4.1");
    CHECK(record->find(FieldKind::DstPort)->slice(record->raw) == "53");

    CHECK(!profile.parse_line("#fields\tts\tuid", 1));  // headers pass through
}

TEST_CASE("firewall default pattern") {
    auto profile = FormatProfile::firewall();
    std::string line =
        "Mar 17 22:48:07 gw kernel: IN=eth0 OUT= SRC=10.1.2.3 DST=10.9.8.7 LEN=60 "
        "PROTO=TCP SPT=51234 DPT=443 WINDOW=64240";
    auto record = profile.parse_line(line, 1);
    REQUIRE(record.has_value());
    CHECK(record->find(FieldKind::SrcIp)->slice(record->raw) == "10.1.2.3");
    CHECK(record->find(FieldKind::DstIp)->slice(record->raw) == "10.9.8.7");
    CHECK(record->find(FieldKind::SrcPort)->slice(record->raw) == "51234");
    CHECK(record->find(FieldKind::DstPort)->slice(record->raw) == "443");
}

TEST_CASE("reconstruct: identity, substitution, shrinkage") {
    auto profile = FormatProfile::suricata();
    std::string line = "03/17/2025-22:48:07.698063  192.168.1.178:57621 -> 192.168.1.255:57621";
    auto record = profile.parse_line(line, 1);
    REQUIRE(record.has_value());

    CHECK(reconstruct_line(*record, std::map<FieldKind, std::string>{}) == line);

    auto replaced = reconstruct_line(
        *record, {{FieldKind::SrcIp, std::string("129.195.79.72")},
                  {FieldKind::DstIp, std::string("129.195.79.250")}});
    CHECK(replaced ==
          "03/17/2025-22:48:07.698063  129.195.79.72:57621 -> 129.195.79.250:57621");
    CHECK(replaced.find(" -> ") != std::string::npos);

    auto shrunk = reconstruct_line(*record, {{FieldKind::SrcIp, std::string("1.2.3.4")}});
    CHECK(shrunk.size() == line.size() - std::string("192.168.1.178").size() + 7);

    CHECK_THROWS_AS(
        reconstruct_line(*record, {{FieldKind::Other, std::string("x")}}),
        std::invalid_argument);
}

TEST_CASE("round-trip is identity for every sample line") {
    auto profile = FormatProfile::suricata();
    std::size_t line_no = 0;
    for (const auto& line : split_lines(kSuricataSample)) {
        auto record = profile.parse_line(line, ++line_no);
        REQUIRE(record.has_value());
        std::vector<std::optional<std::string>> keep(record->spans.size());
        CHECK(reconstruct_line(*record, keep) == line);
    }
}

TEST_CASE("detect profile") {
    CHECK(detect_profile(split_lines(kSuricataSample))->name() == "suricata");

    std::vector<std::string> noise = {"hello world", "foo bar", "baz"};
    CHECK(!detect_profile(noise));

    // 60% suricata, 40% noise: majority wins.
    auto mixed = split_lines(kSuricataSample);
    mixed.resize(6);
    mixed.push_back("junk 1");
    mixed.push_back("junk 2");
    mixed.push_back("junk 3");
    mixed.push_back("junk 4");
    CHECK(detect_profile(mixed)->name() == "suricata");

    std::vector<std::string> zeek_lines = {
        "1591367999.305988\tCM1\t192.168.4.76\t36844\t192.168.4.1\t53\tudp",
        "1591368000.000001\tCM2\t192.168.4.77\t36845\t192.168.4.1\t53\tudp",
    };
    CHECK(detect_profile(zeek_lines)->name() == "zeek");
}
