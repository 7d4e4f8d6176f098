#include <CLI11.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "loganon/config.hpp"
#include "loganon/metrics.hpp"
#include "loganon/parser.hpp"
#include "loganon/pipeline.hpp"

namespace {

bool use_color() {
    return std::getenv("LOGANON_NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string heading(const std::string& text) {
    if (!use_color()) return text;
    return "\033[1m" + text + "\033[0m";
}

int run_command(const std::string& config_path, const std::vector<std::string>& inputs,
                bool salt_group, const std::optional<std::string>& escrow) {
    loganon::Config config = loganon::load_config(config_path);

    std::vector<std::pair<std::string, std::string>> files;
    if (inputs.empty()) {
        files.emplace_back(config.log_file, config.output_log);
    } else {
        // Explicit inputs override the config's log_file; each output is
        // written next to its input.
        for (const auto& input : inputs) files.emplace_back(input, input + ".anon");
    }

    loganon::RunSummary summary;
    if (salt_group || files.size() == 1) {
        summary = loganon::run_pipeline_group(config, files, escrow);
    } else {
        if (escrow)
            throw loganon::ConfigError(
                "--salt-escrow with multiple inputs requires --salt-group "
                "(independent sessions have one salt each)");
        // Default: independent session (fresh salt) per file.
        for (const auto& file : files) {
            loganon::RunSummary one = loganon::run_pipeline_group(config, {file}, escrow);
            summary.lines_total += one.lines_total;
            summary.lines_matched += one.lines_matched;
            summary.lines_passthrough += one.lines_passthrough;
            summary.ips_anonymized += one.ips_anonymized;
            summary.ports_anonymized += one.ports_anonymized;
            summary.timestamps_anonymized += one.timestamps_anonymized;
            summary.salt_discarded = summary.salt_discarded && one.salt_discarded;
        }
    }
    std::cout << heading("run summary") << "\n" << loganon::render_summary(summary);
    return 0;
}

int eval_command(const std::string& dataset_path, int runs,
                 const std::optional<std::string>& seed, std::string report_path) {
    std::ifstream in(dataset_path);
    if (!in) throw loganon::IoError("cannot read dataset: " + dataset_path);

    std::vector<loganon::Ipv4Address> dataset;
    std::size_t malformed = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (auto addr = loganon::parse_ipv4(line))
            dataset.push_back(*addr);
        else
            ++malformed;
    }
    if (dataset.empty()) throw loganon::IoError("dataset has no valid IPv4 addresses");

    loganon::PrivacyReport report = loganon::run_evaluation(dataset, runs, seed);
    std::cout << heading("privacy evaluation (" + std::to_string(dataset.size())
                         + " addresses, " + std::to_string(malformed)
                         + " malformed lines skipped)")
              << "\n"
              << loganon::render_report_table(report);

    if (report_path.empty()) report_path = dataset_path + ".report.json";
    std::ofstream out(report_path);
    if (!out) throw loganon::IoError("cannot write report: " + report_path);
    out << loganon::render_report_json(report) << "\n";
    std::cout << "report written to " << report_path << "\n";
    return 0;
}

int detect_command(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw loganon::IoError("cannot read file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (lines.size() < 50 && std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    auto profile = loganon::detect_profile(lines);
    std::cout << (profile ? profile->name() : std::string("unknown")) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loganon - format-preserving network log anonymizer"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> inputs;
    bool salt_group = false;
    std::string escrow_path;
    auto* run = app.add_subcommand("run", "anonymize a log file per a config");
    run->add_option("--config", config_path, "YAML config file")->required();
    run->add_option("--input", inputs, "input file(s); overrides the config's log_file");
    run->add_flag("--salt-group", salt_group,
                  "share one salt and mapping tables across all inputs");
    run->add_option("--salt-escrow", escrow_path,
                    "opt-in: write the session salt (hex) to this file, mode 0600");

    std::string dataset_path, report_path;
    int runs = 10;
    std::string seed;
    auto* eval = app.add_subcommand("eval", "privacy evaluation over an IP dataset");
    eval->add_option("--dataset", dataset_path, "file with one IPv4 address per line")
        ->required();
    eval->add_option("--runs", runs, "number of fresh-salt runs")->default_val(10);
    eval->add_option("--seed", seed, "deterministic seed (reproduction mode)");
    eval->add_option("--report", report_path, "report path (default <dataset>.report.json)");

    std::string detect_path;
    auto* detect = app.add_subcommand("detect", "guess the log format of a file");
    detect->add_option("file", detect_path, "log file to sample")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(config_path, inputs, salt_group,
                               escrow_path.empty() ? std::nullopt
                                                   : std::optional<std::string>(escrow_path));
        if (eval->parsed())
            return eval_command(dataset_path, runs,
                                seed.empty() ? std::nullopt : std::optional<std::string>(seed),
                                report_path);
        if (detect->parsed()) return detect_command(detect_path);
    } catch (const loganon::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const loganon::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const loganon::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
