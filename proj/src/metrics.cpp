#include "loganon/metrics.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace loganon {

double shannon_entropy_from_counts(std::span<const std::uint64_t> counts) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw std::invalid_argument("entropy of an empty multiset");
    double bits = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        double p = double(c) / double(total);
        bits -= p * std::log2(p);
    }
    return bits;
}

double shannon_entropy(const std::vector<Ipv4Address>& addresses) {
    std::vector<std::uint32_t> values;
    values.reserve(addresses.size());
    for (const auto& a : addresses) values.push_back(a.to_u32());
    return shannon_entropy<std::uint32_t>(values);
}

CollisionRates collision_rates(const OctetMapTable& table, std::size_t domain_size) {
    std::array<std::uint32_t, 256> preimages{};
    std::size_t inputs = 0;
    for (int in = 0; in < 256; ++in) {
        if (auto out = table.lookup(std::uint8_t(in))) {
            ++preimages[*out];
            ++inputs;
        }
    }
    std::size_t distinct_outputs = 0;
    std::size_t multi_outputs = 0;
    for (auto count : preimages) {
        if (count > 0) ++distinct_outputs;
        if (count >= 2) ++multi_outputs;
    }
    CollisionRates rates;
    rates.merged_inputs = double(inputs - distinct_outputs) / double(domain_size);
    rates.multi_preimage = double(multi_outputs) / double(domain_size);
    return rates;
}

HammingHistogram hamming_distribution(
    const std::vector<std::pair<Ipv4Address, Ipv4Address>>& pairs) {
    HammingHistogram hist{};
    for (const auto& [a, b] : pairs) ++hist[std::popcount(a.to_u32() ^ b.to_u32())];
    return hist;
}

double hamming_mean(const HammingHistogram& hist) {
    std::uint64_t total = 0, weighted = 0;
    for (int d = 0; d <= 32; ++d) {
        total += hist[d];
        weighted += hist[d] * std::uint64_t(d);
    }
    if (total == 0) return 0.0;
    return double(weighted) / double(total);
}

PrivacyReport run_evaluation(const std::vector<Ipv4Address>& dataset, int runs,
                             const std::optional<std::string>& seed) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (dataset.empty()) throw std::invalid_argument("empty dataset");

    PrivacyReport report;
    report.runs = runs;
    report.original_entropy_bits = shannon_entropy(dataset);

    std::vector<std::uint8_t> octet4_orig;
    octet4_orig.reserve(dataset.size());
    for (const auto& a : dataset) octet4_orig.push_back(a.octets[3]);
    double octet4_orig_entropy = shannon_entropy<std::uint8_t>(octet4_orig);

    for (int run = 0; run < runs; ++run) {
        Salt salt = seed ? Salt::from_seed(*seed + "/run-" + std::to_string(run))
                         : Salt::random();
        IpAnonymizer anon(std::move(salt));

        std::vector<Ipv4Address> anonymized;
        anonymized.reserve(dataset.size());
        std::vector<std::pair<Ipv4Address, Ipv4Address>> pairs;
        pairs.reserve(dataset.size());
        for (const auto& a : dataset) {
            Ipv4Address out = anon.anonymize(a);
            anonymized.push_back(out);
            pairs.emplace_back(a, out);
        }

        EvalRow row;
        row.run = run;
        row.original_entropy = report.original_entropy_bits;
        row.anonymized_entropy = shannon_entropy(anonymized);
        row.entropy_change = row.original_entropy - row.anonymized_entropy;

        // Injective on the dataset's distinct addresses iff distinct
        // input count equals distinct output count.
        std::unordered_map<std::uint32_t, std::uint32_t> in_set, out_set;
        for (const auto& [orig, anon_addr] : pairs) {
            ++in_set[orig.to_u32()];
            ++out_set[anon_addr.to_u32()];
        }
        row.full_address_injective = in_set.size() == out_set.size();

        for (int pos = 1; pos <= 4; ++pos) {
            CollisionRates rates = collision_rates(anon.table(pos));
            row.avg_collision_multi += rates.multi_preimage / 4.0;
            row.avg_collision_merged += rates.merged_inputs / 4.0;
            report.collision_multi_per_position[pos - 1] += rates.multi_preimage / runs;
            report.collision_merged_per_position[pos - 1] += rates.merged_inputs / runs;
            if (pos == 4) row.octet4_collision_multi = rates.multi_preimage;
        }

        std::vector<std::uint8_t> octet4_anon;
        octet4_anon.reserve(anonymized.size());
        for (const auto& a : anonymized) octet4_anon.push_back(a.octets[3]);
        row.octet4_original_entropy = octet4_orig_entropy;
        row.octet4_anonymized_entropy = shannon_entropy<std::uint8_t>(octet4_anon);

        HammingHistogram hist = hamming_distribution(pairs);
        for (int d = 0; d <= 32; ++d) report.hamming_histogram[d] += hist[d];

        report.anonymized_entropy_bits += row.anonymized_entropy / runs;
        report.avg_collision_multi += row.avg_collision_multi / runs;
        report.avg_collision_merged += row.avg_collision_merged / runs;
        report.rows.push_back(row);
    }
    report.entropy_change = report.original_entropy_bits - report.anonymized_entropy_bits;
    report.hamming_mean_bits = hamming_mean(report.hamming_histogram);
    return report;
}

std::string render_report_table(const PrivacyReport& report) {
    std::string out;
    char buf[256];
    out += "Run  AvgCollision  Orig Entropy  Anon Entropy  Entropy Change  "
           "Oct4 Coll  Oct4 Anon Entropy\n";
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf),
                      "%3d  %12.4f  %12.4f  %12.4f  %14.4f  %9.4f  %17.4f\n", row.run,
                      row.avg_collision_multi, row.original_entropy, row.anonymized_entropy,
                      row.entropy_change, row.octet4_collision_multi,
                      row.octet4_anonymized_entropy);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "avg  %12.4f  %12.4f  %12.4f  %14.4f\n", report.avg_collision_multi,
                  report.original_entropy_bits, report.anonymized_entropy_bits,
                  report.entropy_change);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "collision (merged-inputs definition), avg: %.4f\n"
                  "hamming mean: %.3f bits over %d run(s)\n",
                  report.avg_collision_merged, report.hamming_mean_bits, report.runs);
    out += buf;
    return out;
}

std::string render_report_json(const PrivacyReport& report) {
    nlohmann::json j;
    j["runs"] = report.runs;
    j["original_entropy_bits"] = report.original_entropy_bits;
    j["anonymized_entropy_bits"] = report.anonymized_entropy_bits;
    j["entropy_change"] = report.entropy_change;
    j["collision_multi_per_position"] = report.collision_multi_per_position;
    j["collision_merged_per_position"] = report.collision_merged_per_position;
    j["avg_collision_multi_preimage"] = report.avg_collision_multi;
    j["avg_collision_merged_inputs"] = report.avg_collision_merged;
    j["hamming_histogram"] = report.hamming_histogram;
    j["hamming_mean_bits"] = report.hamming_mean_bits;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({
            {"run", row.run},
            {"avg_collision_multi_preimage", row.avg_collision_multi},
            {"avg_collision_merged_inputs", row.avg_collision_merged},
            {"original_entropy", row.original_entropy},
            {"anonymized_entropy", row.anonymized_entropy},
            {"entropy_change", row.entropy_change},
            {"octet4_collision_multi_preimage", row.octet4_collision_multi},
            {"octet4_original_entropy", row.octet4_original_entropy},
            {"octet4_anonymized_entropy", row.octet4_anonymized_entropy},
            {"full_address_injective", row.full_address_injective},
        });
    }
    return j.dump(2);
}

}  // namespace loganon
