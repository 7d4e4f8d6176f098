#include "loganon/config.hpp"

#include <yaml-cpp/yaml.h>

#include <set>

namespace loganon {

namespace {

std::string at(const YAML::Node& node, const std::string& path) {
    return path + " (line " + std::to_string(node.Mark().line + 1) + ")";
}

void reject_unknown_keys(const YAML::Node& node, const std::string& where,
                         const std::set<std::string>& allowed) {
    if (!node.IsMap()) return;
    for (const auto& kv : node) {
        std::string key = kv.first.as<std::string>();
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + key + "' in " + at(kv.first, where));
    }
}

template <typename T>
T required(const YAML::Node& root, const std::string& key) {
    const YAML::Node node = root[key];
    if (!node) throw ConfigError("missing required key '" + key + "'");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("bad value for " + at(node, key));
    }
}

template <typename T>
void optional_scalar(const YAML::Node& parent, const std::string& key, T& out) {
    const YAML::Node node = parent[key];
    if (!node) return;
    try {
        out = node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("bad value for " + at(node, key));
    }
}

FieldMethod parse_field_method(const YAML::Node& node, const std::string& where) {
    auto text = node.as<std::string>("");
    if (text == "salt") return FieldMethod::Salt;
    if (text == "none") return FieldMethod::None;
    throw ConfigError("expected 'salt' or 'none' for " + at(node, where));
}

}  // namespace

FormatProfile Config::profile() const {
    switch (log_type) {
        case ProfileKind::Suricata:
            return FormatProfile::suricata();
        case ProfileKind::Zeek:
            return FormatProfile::zeek();
        case ProfileKind::Firewall:
            return FormatProfile::firewall();
        case ProfileKind::Custom:
            break;
    }
    return FormatProfile::custom(*custom_pattern, custom_timestamp_format);
}

Config load_config(const std::string& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::BadFile&) {
        throw IoError("cannot read config file: " + path);
    } catch (const YAML::Exception& e) {
        throw ConfigError("cannot parse " + path + ": " + e.what());
    }
    if (!root.IsMap()) throw ConfigError(path + ": top level must be a mapping");

    reject_unknown_keys(root, path,
                        {"log_file", "log_type", "output_log", "custom_pattern",
                         "custom_timestamp_format", "anonymization"});

    Config config;
    config.log_file = required<std::string>(root, "log_file");
    config.output_log = required<std::string>(root, "output_log");

    std::string log_type = required<std::string>(root, "log_type");
    if (log_type == "suricata")
        config.log_type = ProfileKind::Suricata;
    else if (log_type == "firewall")
        config.log_type = ProfileKind::Firewall;
    else if (log_type == "zeek")
        config.log_type = ProfileKind::Zeek;
    else if (log_type == "custom")
        config.log_type = ProfileKind::Custom;
    else
        throw ConfigError("log_type must be one of suricata|firewall|zeek|custom, got '"
                          + log_type + "'");

    if (const YAML::Node node = root["custom_pattern"])
        config.custom_pattern = node.as<std::string>();
    if (const YAML::Node node = root["custom_timestamp_format"]) {
        auto text = node.as<std::string>("");
        if (text == "suricata")
            config.custom_timestamp_format = TimestampFormat::SuricataDateTime;
        else if (text == "epoch")
            config.custom_timestamp_format = TimestampFormat::EpochSeconds;
        else
            throw ConfigError("custom_timestamp_format must be suricata|epoch");
    }

    if (const YAML::Node anon = root["anonymization"]) {
        reject_unknown_keys(anon, "anonymization", {"ip", "port", "timestamp"});
        if (const YAML::Node ip = anon["ip"]) {
            reject_unknown_keys(ip, "anonymization.ip", {"method"});
            if (ip["method"]) config.ip_method = parse_field_method(ip["method"], "ip.method");
        }
        if (const YAML::Node port = anon["port"]) {
            reject_unknown_keys(port, "anonymization.port", {"method", "range"});
            if (port["method"])
                config.port_method = parse_field_method(port["method"], "port.method");
            if (const YAML::Node range = port["range"]) {
                auto text = range.as<std::string>("");
                if (text == "full")
                    config.port_range = PortRange::Full;
                else if (text == "non_reserved")
                    config.port_range = PortRange::NonReserved;
                else
                    throw ConfigError("port.range must be full|non_reserved");
            }
        }
        if (const YAML::Node ts = anon["timestamp"]) {
            reject_unknown_keys(ts, "anonymization.timestamp",
                                {"method", "granularity", "offset_window", "seed"});
            if (const YAML::Node method = ts["method"]) {
                auto text = method.as<std::string>("");
                if (text == "adaptive")
                    config.timestamp_method = TimestampMethod::Adaptive;
                else if (text == "none")
                    config.timestamp_method = TimestampMethod::None;
                else
                    throw ConfigError("timestamp.method must be adaptive|none");
            }
            optional_scalar(ts, "granularity", config.timestamp_granularity);
            optional_scalar(ts, "offset_window", config.offset_window_micros);
            if (const YAML::Node seed = ts["seed"]) config.seed = seed.as<std::string>();
            if (config.timestamp_granularity < 1)
                throw ConfigError("timestamp.granularity must be >= 1");
            if (config.offset_window_micros < 0)
                throw ConfigError("timestamp.offset_window must be >= 0");
        }
    }

    if (config.log_type == ProfileKind::Custom && !config.custom_pattern)
        throw ConfigError("log_type 'custom' requires the 'custom_pattern' key");
    if (config.log_file == config.output_log)
        throw ConfigError("output_log must differ from log_file");
    return config;
}

}  // namespace loganon
