#ifndef LOGANON_PIPELINE_HPP
#define LOGANON_PIPELINE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loganon/config.hpp"
#include "loganon/ip_anon.hpp"
#include "loganon/port_anon.hpp"

namespace loganon {

// One salt and its mapping tables. Scope is one file, or one explicit
// file group processed together.
class AnonymizationSession {
public:
    explicit AnonymizationSession(const Config& config);

    IpAnonymizer& ip() { return ip_; }
    PortAnonymizer& port() { return port_; }
    std::mt19937_64& rng() { return rng_; }
    const Salt& salt() const { return salt_; }

private:
    Salt salt_;
    IpAnonymizer ip_;
    PortAnonymizer port_;
    std::mt19937_64 rng_;
};

struct RunSummary {
    std::size_t lines_total = 0;
    std::size_t lines_matched = 0;
    std::size_t lines_passthrough = 0;
    std::size_t ips_anonymized = 0;
    std::size_t ports_anonymized = 0;
    std::size_t timestamps_anonymized = 0;
    bool salt_discarded = true;
};

std::string render_summary(const RunSummary& summary);

// Two passes over the input: pass 1 collects timestamps and builds the
// noise plan, pass 2 rewrites spans and streams output. The salt lives
// only for the duration of the call unless escrow is requested.
RunSummary run_pipeline(const Config& config,
                        const std::optional<std::string>& salt_escrow_path = std::nullopt);

// Same, with one shared session (one salt, shared tables) across
// several input files. Outputs are paired positionally with inputs.
RunSummary run_pipeline_group(const Config& config,
                              const std::vector<std::pair<std::string, std::string>>& files,
                              const std::optional<std::string>& salt_escrow_path = std::nullopt);

}  // namespace loganon

#endif
