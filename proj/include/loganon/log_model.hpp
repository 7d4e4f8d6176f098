#ifndef LOGANON_LOG_MODEL_HPP
#define LOGANON_LOG_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loganon {

// How a timestamp is written in the source log. Re-rendering with the
// same format must reproduce the source precision.
enum class TimestampFormat {
    SuricataDateTime,  // MM/DD/YYYY-HH:MM:SS.ffffff
    EpochSeconds,      // 1742251687.698063 (zeek ts column)
};

struct Timestamp {
    std::int64_t micros = 0;  // microseconds since Unix epoch
    TimestampFormat format = TimestampFormat::SuricataDateTime;

    friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

// Parse text in the given format; nullopt when the text does not match.
std::optional<Timestamp> parse_timestamp(std::string_view text, TimestampFormat format);

// Render with `fraction_digits` fractional digits (0..6). 6 reproduces
// full microsecond precision; fewer digits truncate the already-rounded
// value (rounding itself is the time-anon module's job).
std::string render_timestamp(const Timestamp& ts, int fraction_digits = 6);

enum class FieldKind { SrcIp, DstIp, SrcPort, DstPort, Timestamp, Other };

// A typed byte range inside a raw log line. Spans are non-overlapping
// and sorted by byte_start within a record.
struct FieldSpan {
    FieldKind kind = FieldKind::Other;
    std::size_t byte_start = 0;
    std::size_t byte_end = 0;  // exclusive, <= raw.size()

    std::string_view slice(std::string_view raw) const {
        return raw.substr(byte_start, byte_end - byte_start);
    }
};

struct LogRecord {
    std::string raw;  // one line, no trailing newline
    std::vector<FieldSpan> spans;
    std::size_t line_no = 1;

    const FieldSpan* find(FieldKind kind) const {
        for (const auto& s : spans)
            if (s.kind == kind) return &s;
        return nullptr;
    }
};

}  // namespace loganon

#endif
