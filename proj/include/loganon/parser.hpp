#ifndef LOGANON_PARSER_HPP
#define LOGANON_PARSER_HPP

#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "loganon/log_model.hpp"

namespace loganon {

enum class ProfileKind { Suricata, Firewall, Zeek, Custom };

// A line format: either a built-in scanner (suricata fast-log shape,
// zeek conn.log columns) or a regex template with field placeholders
// {ts} {src_ip} {src_port} {dst_ip} {dst_port}.
class FormatProfile {
public:
    static FormatProfile suricata();
    static FormatProfile zeek();
    static FormatProfile firewall();  // iptables-style SRC=/DST=/SPT=/DPT=

    // Throws std::invalid_argument on a bad regex or unknown placeholder.
    static FormatProfile custom(std::string pattern,
                                TimestampFormat ts_format = TimestampFormat::SuricataDateTime);

    ProfileKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    TimestampFormat timestamp_format() const { return ts_format_; }

    // On match: a record with one span per captured field. On no-match:
    // nullopt, and the caller emits the line unmodified. Never fails.
    std::optional<LogRecord> parse_line(std::string_view line, std::size_t line_no) const;

private:
    FormatProfile(ProfileKind kind, std::string name, TimestampFormat ts_format)
        : kind_(kind), name_(std::move(name)), ts_format_(ts_format) {}

    std::optional<LogRecord> parse_suricata(std::string_view line, std::size_t line_no) const;
    std::optional<LogRecord> parse_zeek(std::string_view line, std::size_t line_no) const;
    std::optional<LogRecord> parse_pattern(std::string_view line, std::size_t line_no) const;

    ProfileKind kind_;
    std::string name_;
    TimestampFormat ts_format_;
    std::shared_ptr<const std::regex> regex_;         // pattern-based profiles
    std::vector<FieldKind> group_kinds_;              // capture group i+1 -> kind
};

// Bytes outside spans are copied verbatim; spans present in
// `replacements` are substituted, others keep their original bytes.
// Throws std::invalid_argument if a replacement names a kind the record
// does not contain.
std::string reconstruct_line(const LogRecord& record,
                             const std::map<FieldKind, std::string>& replacements);

// Positional variant: per_span[i] replaces record.spans[i], nullopt
// keeps the original bytes. Used by the pipeline, where each span is
// rewritten from its own text.
std::string reconstruct_line(const LogRecord& record,
                             const std::vector<std::optional<std::string>>& per_span);

// Majority vote over the sampled lines; nullopt when no built-in
// profile matches more than half of the non-empty sample.
std::optional<FormatProfile> detect_profile(const std::vector<std::string>& first_lines);

}  // namespace loganon

#endif
