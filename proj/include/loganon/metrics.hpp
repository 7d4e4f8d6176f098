#ifndef LOGANON_METRICS_HPP
#define LOGANON_METRICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "loganon/ip_anon.hpp"
#include "loganon/ipv4.hpp"

namespace loganon {

// -sum p log2 p over a count histogram. Throws std::invalid_argument on
// an empty multiset.
double shannon_entropy_from_counts(std::span<const std::uint64_t> counts);

template <typename T>
double shannon_entropy(const std::vector<T>& values) {
    std::unordered_map<T, std::uint64_t> counts;
    for (const auto& v : values) ++counts[v];
    std::vector<std::uint64_t> hist;
    hist.reserve(counts.size());
    for (const auto& [_, c] : counts) hist.push_back(c);
    return shannon_entropy_from_counts(hist);
}

double shannon_entropy(const std::vector<Ipv4Address>& addresses);

// The paper's prose definition and its reported numbers disagree, so
// both readings are computed and reported:
//   merged_inputs:  (|observed inputs| - |distinct outputs|) / domain
//   multi_preimage: (#outputs with >= 2 observed preimages) / domain
// The multi_preimage reading is the one whose expectation (~1 - 2/e)
// matches the reported per-run figures.
struct CollisionRates {
    double merged_inputs = 0.0;
    double multi_preimage = 0.0;
};

CollisionRates collision_rates(const OctetMapTable& table, std::size_t domain_size = 256);

using HammingHistogram = std::array<std::uint64_t, 33>;

HammingHistogram hamming_distribution(
    const std::vector<std::pair<Ipv4Address, Ipv4Address>>& pairs);

double hamming_mean(const HammingHistogram& hist);

// One evaluation run with a fresh salt.
struct EvalRow {
    int run = 0;
    double avg_collision_multi = 0.0;   // mean multi-preimage rate, 4 positions
    double avg_collision_merged = 0.0;  // mean merged-inputs rate, 4 positions
    double original_entropy = 0.0;      // full-address multiset, bits
    double anonymized_entropy = 0.0;
    double entropy_change = 0.0;
    double octet4_collision_multi = 0.0;
    double octet4_original_entropy = 0.0;  // octet-4 multiset, bits
    double octet4_anonymized_entropy = 0.0;
    bool full_address_injective = true;  // no two distinct inputs merged
};

struct PrivacyReport {
    int runs = 0;
    double original_entropy_bits = 0.0;
    double anonymized_entropy_bits = 0.0;  // mean over runs
    double entropy_change = 0.0;
    std::array<double, 4> collision_multi_per_position{};
    std::array<double, 4> collision_merged_per_position{};
    double avg_collision_multi = 0.0;
    double avg_collision_merged = 0.0;
    HammingHistogram hamming_histogram{};  // accumulated over all runs
    double hamming_mean_bits = 0.0;
    std::vector<EvalRow> rows;
};

// Fresh salt per run; seeded mode derives one deterministic salt per
// run index for reproducible reports.
PrivacyReport run_evaluation(const std::vector<Ipv4Address>& dataset, int runs,
                             const std::optional<std::string>& seed = std::nullopt);

std::string render_report_table(const PrivacyReport& report);
std::string render_report_json(const PrivacyReport& report);

}  // namespace loganon

#endif
