#ifndef LOGANON_CONFIG_HPP
#define LOGANON_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "loganon/log_model.hpp"
#include "loganon/parser.hpp"
#include "loganon/port_anon.hpp"

namespace loganon {

// Error taxonomy maps onto process exit codes: config 2, I/O 3,
// integrity 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldMethod { None, Salt };
enum class TimestampMethod { None, Adaptive };

constexpr std::int64_t kDefaultOffsetWindowMicros = 30LL * 24 * 3600 * 1000000;  // 30 days

struct Config {
    std::string log_file;
    ProfileKind log_type = ProfileKind::Suricata;
    std::string output_log;
    std::optional<std::string> custom_pattern;  // required iff log_type == Custom
    TimestampFormat custom_timestamp_format = TimestampFormat::SuricataDateTime;

    FieldMethod ip_method = FieldMethod::None;
    FieldMethod port_method = FieldMethod::None;
    PortRange port_range = PortRange::Full;

    TimestampMethod timestamp_method = TimestampMethod::None;
    std::int64_t timestamp_granularity = 1;  // microseconds; 1 = full precision
    std::int64_t offset_window_micros = kDefaultOffsetWindowMicros;
    std::optional<std::string> seed;  // test/reproduction mode only

    FormatProfile profile() const;
};

// Strict load: unknown keys are rejected with file:line diagnostics,
// declared invariants (custom needs a pattern, output != input) are
// enforced here.
Config load_config(const std::string& path);

}  // namespace loganon

#endif
