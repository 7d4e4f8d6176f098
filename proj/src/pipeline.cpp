#include "loganon/pipeline.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "loganon/parser.hpp"
#include "loganon/time_anon.hpp"

namespace loganon {

namespace {

constexpr double kNoiseMargin = 0.99;

std::uint64_t rng_seed_from(const Salt& salt) {
    // Deterministic function of the session salt so a seeded session is
    // byte-reproducible end to end.
    Salt derived = Salt::from_seed(salt.hex() + "#rng");
    std::uint64_t seed = 0;
    for (int i = 0; i < 8; ++i) seed = (seed << 8) | derived.bytes()[i];
    return seed;
}

// One physical line: content without the terminator, plus how it was
// terminated in the source ("" for an unterminated final line).
struct RawLine {
    std::string text;
    const char* newline = "\n";
};

class LineReader {
public:
    explicit LineReader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw IoError("cannot open input: " + path);
    }

    bool next(RawLine& line) {
        line.text.clear();
        if (!std::getline(in_, line.text)) return false;
        if (in_.eof())
            line.newline = "";
        else if (!line.text.empty() && line.text.back() == '\r') {
            line.text.pop_back();
            line.newline = "\r\n";
        } else {
            line.newline = "\n";
        }
        return true;
    }

private:
    std::ifstream in_;
};

int fraction_digits_for(std::int64_t granularity) {
    // Powers of ten shrink the rendered precision to match; any other
    // granularity keeps full microsecond digits.
    std::int64_t g = granularity;
    int digits = 6;
    while (digits > 0 && g >= 10 && g % 10 == 0) {
        g /= 10;
        --digits;
    }
    return (g == 1) ? digits : 6;
}

void write_escrow(const std::string& path, const Salt& salt) {
    int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd < 0) throw IoError("cannot write salt escrow file: " + path);
    std::string hex = salt.hex();
    ssize_t written = ::write(fd, hex.data(), hex.size());
    ::close(fd);
    if (written != ssize_t(hex.size())) throw IoError("short write to escrow file: " + path);
}

void process_file(const Config& config, AnonymizationSession& session,
                  const std::string& input_path, const std::string& output_path,
                  RunSummary& summary) {
    const FormatProfile profile = config.profile();
    const bool anon_time = config.timestamp_method == TimestampMethod::Adaptive;

    // Pass 1: count lines, collect timestamps of matched records.
    std::vector<std::int64_t> times;
    std::size_t lines_total = 0;
    {
        LineReader reader(input_path);
        RawLine line;
        while (reader.next(line)) {
            ++lines_total;
            if (!anon_time) continue;
            if (auto record = profile.parse_line(line.text, lines_total)) {
                if (const FieldSpan* span = record->find(FieldKind::Timestamp)) {
                    auto ts = parse_timestamp(span->slice(record->raw),
                                              profile.timestamp_format());
                    times.push_back(ts->micros);
                }
            }
        }
    }

    TimestampPlan plan;
    std::vector<std::int64_t> anon_times;
    if (anon_time) {
        plan = build_plan(times, session.rng(), kNoiseMargin, config.offset_window_micros);
        anon_times = apply_plan(times, plan);
        if (config.timestamp_granularity > 1)
            for (auto& t : anon_times) t = round_to_granularity(t, config.timestamp_granularity);
    }
    const int fraction_digits = fraction_digits_for(config.timestamp_granularity);

    // Pass 2: rewrite.
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output: " + output_path);

    LineReader reader(input_path);
    RawLine line;
    std::size_t line_no = 0;
    std::size_t ts_index = 0;
    std::size_t lines_written = 0;
    while (reader.next(line)) {
        ++line_no;
        auto record = profile.parse_line(line.text, line_no);
        if (!record) {
            ++summary.lines_passthrough;
            out << line.text << line.newline;
            ++lines_written;
            continue;
        }
        ++summary.lines_matched;

        std::vector<std::optional<std::string>> replacements(record->spans.size());
        for (std::size_t i = 0; i < record->spans.size(); ++i) {
            const FieldSpan& span = record->spans[i];
            std::string_view text = span.slice(record->raw);
            switch (span.kind) {
                case FieldKind::SrcIp:
                case FieldKind::DstIp:
                    if (config.ip_method == FieldMethod::Salt) {
                        if (parse_ipv4(text)) ++summary.ips_anonymized;
                        replacements[i] = session.ip().anonymize_field(text);
                    }
                    break;
                case FieldKind::SrcPort:
                case FieldKind::DstPort:
                    if (config.port_method == FieldMethod::Salt) {
                        replacements[i] = session.port().anonymize_field(text);
                        if (parse_port(text)) ++summary.ports_anonymized;
                    }
                    break;
                case FieldKind::Timestamp:
                    if (anon_time) {
                        Timestamp ts{anon_times.at(ts_index++), profile.timestamp_format()};
                        replacements[i] = render_timestamp(ts, fraction_digits);
                        ++summary.timestamps_anonymized;
                    }
                    break;
                case FieldKind::Other:
                    break;
            }
        }
        out << reconstruct_line(*record, replacements) << line.newline;
        ++lines_written;
    }
    out.flush();
    if (!out) throw IoError("write failure on output: " + output_path);

    summary.lines_total += lines_total;
    if (!session_cardinality_check(lines_total, lines_written))
        throw IntegrityError("cardinality check failed: read " + std::to_string(lines_total)
                             + " lines, wrote " + std::to_string(lines_written));
}

}  // namespace

AnonymizationSession::AnonymizationSession(const Config& config)
    : salt_(config.seed ? Salt::from_seed(*config.seed) : Salt::random()),
      ip_(salt_),
      port_(salt_, config.port_range),
      rng_(rng_seed_from(salt_)) {}

std::string render_summary(const RunSummary& summary) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "lines total:            %zu\n"
                  "lines matched:          %zu\n"
                  "lines passthrough:      %zu\n"
                  "ips anonymized:         %zu\n"
                  "ports anonymized:       %zu\n"
                  "timestamps anonymized:  %zu\n"
                  "salt discarded:         %s\n",
                  summary.lines_total, summary.lines_matched, summary.lines_passthrough,
                  summary.ips_anonymized, summary.ports_anonymized,
                  summary.timestamps_anonymized, summary.salt_discarded ? "yes" : "no");
    return buf;
}

RunSummary run_pipeline(const Config& config,
                        const std::optional<std::string>& salt_escrow_path) {
    return run_pipeline_group(config, {{config.log_file, config.output_log}},
                              salt_escrow_path);
}

RunSummary run_pipeline_group(const Config& config,
                              const std::vector<std::pair<std::string, std::string>>& files,
                              const std::optional<std::string>& salt_escrow_path) {
    AnonymizationSession session(config);
    RunSummary summary;
    for (const auto& [input, output] : files) {
        if (input == output) throw ConfigError("output path equals input path: " + input);
        process_file(config, session, input, output, summary);
    }
    if (salt_escrow_path) {
        write_escrow(*salt_escrow_path, session.salt());
        summary.salt_discarded = false;
    }
    return summary;
}

}  // namespace loganon
