#include "loganon/parser.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace loganon {

namespace {

bool is_ip_char(char c) {
    return (c >= '0' && c <= '9') || c == '.';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

struct Placeholder {
    const char* token;
    FieldKind kind;
};

constexpr std::array<Placeholder, 5> kPlaceholders = {{
    {"{ts}", FieldKind::Timestamp},
    {"{src_ip}", FieldKind::SrcIp},
    {"{src_port}", FieldKind::SrcPort},
    {"{dst_ip}", FieldKind::DstIp},
    {"{dst_port}", FieldKind::DstPort},
}};

std::string capture_regex(FieldKind kind, TimestampFormat ts_format) {
    switch (kind) {
        case FieldKind::Timestamp:
            if (ts_format == TimestampFormat::SuricataDateTime)
                return "([0-9]{2}/[0-9]{2}/[0-9]{4}-[0-9]{2}:[0-9]{2}:[0-9]{2}"
                       "(?:\\.[0-9]{1,6})?)";
            return "([0-9]+(?:\\.[0-9]{1,6})?)";
        case FieldKind::SrcIp:
        case FieldKind::DstIp:
            return "([0-9.]+)";
        default:
            return "([0-9]+)";
    }
}

}  // namespace

FormatProfile FormatProfile::suricata() {
    return FormatProfile(ProfileKind::Suricata, "suricata", TimestampFormat::SuricataDateTime);
}

FormatProfile FormatProfile::zeek() {
    return FormatProfile(ProfileKind::Zeek, "zeek", TimestampFormat::EpochSeconds);
}

FormatProfile FormatProfile::firewall() {
    auto profile = custom("SRC=\\{src_ip\\} DST=\\{dst_ip\\} .*?SPT=\\{src_port\\} "
                          "DPT=\\{dst_port\\}",
                          TimestampFormat::SuricataDateTime);
    profile.kind_ = ProfileKind::Firewall;
    profile.name_ = "firewall";
    return profile;
}

FormatProfile FormatProfile::custom(std::string pattern, TimestampFormat ts_format) {
    FormatProfile profile(ProfileKind::Custom, "custom", ts_format);

    // Expand placeholders to capture groups, tracking group order. The
    // backslash-escaped form \{ts\} is accepted too so placeholders can
    // be written inside otherwise-plain regex text.
    std::string expanded;
    std::size_t pos = 0;
    while (pos < pattern.size()) {
        bool matched = false;
        for (const auto& ph : kPlaceholders) {
            std::string plain = ph.token;
            std::string escaped = "\\" + plain.substr(0, plain.size() - 1) + "\\}";
            for (const std::string& tok : {plain, escaped}) {
                if (pattern.compare(pos, tok.size(), tok) == 0) {
                    expanded += capture_regex(ph.kind, ts_format);
                    profile.group_kinds_.push_back(ph.kind);
                    pos += tok.size();
                    matched = true;
                    break;
                }
            }
            if (matched) break;
        }
        if (!matched) {
            if (pattern[pos] == '{')
                throw std::invalid_argument("unknown placeholder in pattern: " + pattern);
            if (pattern[pos] == '(' && pos + 1 < pattern.size() && pattern[pos + 1] != '?')
                throw std::invalid_argument(
                    "plain capture groups are not allowed in patterns; use (?:...)");
            expanded.push_back(pattern[pos]);
            ++pos;
        }
    }
    if (profile.group_kinds_.empty())
        throw std::invalid_argument("pattern captures no fields: " + pattern);

    try {
        profile.regex_ = std::make_shared<const std::regex>(expanded);
    } catch (const std::regex_error& e) {
        throw std::invalid_argument("bad pattern '" + pattern + "': " + e.what());
    }
    return profile;
}

std::optional<LogRecord> FormatProfile::parse_line(std::string_view line,
                                                   std::size_t line_no) const {
    if (line.empty()) return std::nullopt;
    switch (kind_) {
        case ProfileKind::Suricata:
            return parse_suricata(line, line_no);
        case ProfileKind::Zeek:
            return parse_zeek(line, line_no);
        default:
            return parse_pattern(line, line_no);
    }
}

// Fast-log shape: timestamp, spaces, optional alert text, then
// "src_ip:src_port -> dst_ip:dst_port" with optional trailing text.
// Hand-rolled scan; the hot path must not pay regex cost per line.
std::optional<LogRecord> FormatProfile::parse_suricata(std::string_view line,
                                                       std::size_t line_no) const {
    std::size_t ts_end = line.find(' ');
    if (ts_end == std::string_view::npos || ts_end == 0) return std::nullopt;
    if (!parse_timestamp(line.substr(0, ts_end), TimestampFormat::SuricataDateTime))
        return std::nullopt;

    std::size_t sep = line.find(" -> ", ts_end);
    if (sep == std::string_view::npos) return std::nullopt;

    // Scan left from the separator: port digits, ':', ip chars.
    std::size_t sp_end = sep;
    std::size_t sp_start = sp_end;
    while (sp_start > ts_end && is_digit(line[sp_start - 1])) --sp_start;
    if (sp_start == sp_end || sp_start == ts_end || line[sp_start - 1] != ':')
        return std::nullopt;
    std::size_t si_end = sp_start - 1;
    std::size_t si_start = si_end;
    while (si_start > ts_end && is_ip_char(line[si_start - 1])) --si_start;
    if (si_start == si_end) return std::nullopt;
    if (line[si_start - 1] != ' ') return std::nullopt;

    // Scan right from the separator: ip chars, ':', port digits.
    std::size_t di_start = sep + 4;
    std::size_t di_end = di_start;
    while (di_end < line.size() && is_ip_char(line[di_end])) ++di_end;
    if (di_end == di_start || di_end >= line.size() || line[di_end] != ':')
        return std::nullopt;
    std::size_t dp_start = di_end + 1;
    std::size_t dp_end = dp_start;
    while (dp_end < line.size() && is_digit(line[dp_end])) ++dp_end;
    if (dp_end == dp_start) return std::nullopt;

    LogRecord record;
    record.raw = std::string(line);
    record.line_no = line_no;
    record.spans = {
        {FieldKind::Timestamp, 0, ts_end},
        {FieldKind::SrcIp, si_start, si_end},
        {FieldKind::SrcPort, sp_start, sp_end},
        {FieldKind::DstIp, di_start, di_end},
        {FieldKind::DstPort, dp_start, dp_end},
    };
    return record;
}

// conn.log columns: ts, uid, id.orig_h, id.orig_p, id.resp_h, id.resp_p, ...
std::optional<LogRecord> FormatProfile::parse_zeek(std::string_view line,
                                                   std::size_t line_no) const {
    if (line[0] == '#') return std::nullopt;

    std::array<std::pair<std::size_t, std::size_t>, 6> cols;
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) {
        std::size_t end = line.find('\t', pos);
        bool last_needed = (i == 5);
        if (end == std::string_view::npos) {
            if (!last_needed) return std::nullopt;
            end = line.size();
        }
        if (end == pos) return std::nullopt;
        cols[i] = {pos, end};
        pos = end + 1;
    }
    if (!parse_timestamp(line.substr(cols[0].first, cols[0].second - cols[0].first),
                         TimestampFormat::EpochSeconds))
        return std::nullopt;

    LogRecord record;
    record.raw = std::string(line);
    record.line_no = line_no;
    record.spans = {
        {FieldKind::Timestamp, cols[0].first, cols[0].second},
        {FieldKind::SrcIp, cols[2].first, cols[2].second},
        {FieldKind::SrcPort, cols[3].first, cols[3].second},
        {FieldKind::DstIp, cols[4].first, cols[4].second},
        {FieldKind::DstPort, cols[5].first, cols[5].second},
    };
    return record;
}

std::optional<LogRecord> FormatProfile::parse_pattern(std::string_view line,
                                                      std::size_t line_no) const {
    std::match_results<std::string_view::const_iterator> match;
    if (!std::regex_search(line.begin(), line.end(), match, *regex_)) return std::nullopt;

    LogRecord record;
    record.raw = std::string(line);
    record.line_no = line_no;
    for (std::size_t i = 0; i < group_kinds_.size(); ++i) {
        const auto& group = match[i + 1];
        if (!group.matched) return std::nullopt;
        std::size_t start = std::size_t(group.first - line.begin());
        std::size_t end = std::size_t(group.second - line.begin());
        record.spans.push_back({group_kinds_[i], start, end});
    }
    std::sort(record.spans.begin(), record.spans.end(),
              [](const FieldSpan& a, const FieldSpan& b) { return a.byte_start < b.byte_start; });
    return record;
}

std::string reconstruct_line(const LogRecord& record,
                             const std::map<FieldKind, std::string>& replacements) {
    for (const auto& [kind, text] : replacements)
        if (!record.find(kind))
            throw std::invalid_argument("replacement for a field kind the record lacks");

    std::string out;
    out.reserve(record.raw.size());
    std::size_t pos = 0;
    for (const auto& span : record.spans) {
        out.append(record.raw, pos, span.byte_start - pos);
        auto it = replacements.find(span.kind);
        if (it != replacements.end())
            out += it->second;
        else
            out.append(record.raw, span.byte_start, span.byte_end - span.byte_start);
        pos = span.byte_end;
    }
    out.append(record.raw, pos, record.raw.size() - pos);
    return out;
}

std::string reconstruct_line(const LogRecord& record,
                             const std::vector<std::optional<std::string>>& per_span) {
    if (per_span.size() != record.spans.size())
        throw std::invalid_argument("per-span replacement list size mismatch");
    std::string out;
    out.reserve(record.raw.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < record.spans.size(); ++i) {
        const auto& span = record.spans[i];
        out.append(record.raw, pos, span.byte_start - pos);
        if (per_span[i])
            out += *per_span[i];
        else
            out.append(record.raw, span.byte_start, span.byte_end - span.byte_start);
        pos = span.byte_end;
    }
    out.append(record.raw, pos, record.raw.size() - pos);
    return out;
}

std::optional<FormatProfile> detect_profile(const std::vector<std::string>& first_lines) {
    const std::array<FormatProfile, 3> candidates = {
        FormatProfile::suricata(), FormatProfile::zeek(), FormatProfile::firewall()};

    std::size_t nonempty = 0;
    std::array<std::size_t, 3> hits{};
    for (const auto& line : first_lines) {
        if (line.empty()) continue;
        ++nonempty;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i].parse_line(line, 1)) ++hits[i];
    }
    if (nonempty == 0) return std::nullopt;

    std::size_t best = std::size_t(std::max_element(hits.begin(), hits.end()) - hits.begin());
    if (hits[best] * 2 <= nonempty) return std::nullopt;
    return candidates[best];
}

}  // namespace loganon
