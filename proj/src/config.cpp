#include "pagamma/errors.hpp"
#include "pagamma/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pagamma {
namespace {

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not an integer: '" + t + "'");
    }
    if (pos != t.size()) {
        throw ConfigError("config key '" + key + "': not an integer: '" + t + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        if (!t.empty() && t[0] == '-') throw std::invalid_argument(t);
        v = std::stoull(t, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not an unsigned integer: '" + t + "'");
    }
    if (pos != t.size()) {
        throw ConfigError("config key '" + key + "': not an unsigned integer: '" + t + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ConfigError("config key '" + key + "': not a boolean: '" + t + "'");
}

// "1,2,5" or "1..10" or mixtures such as "1..3,10".
std::vector<std::int64_t> parse_int_list(const std::string& key, const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(key, item));
            continue;
        }
        const std::int64_t lo = parse_int(key, item.substr(0, dots));
        const std::int64_t hi = parse_int(key, item.substr(dots + 2));
        if (hi < lo) throw ConfigError("config key '" + key + "': empty range '" + item + "'");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

void apply(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "m_values") {
        cfg.m_values = parse_int_list(key, value);
    } else if (key == "n_values") {
        cfg.n_values = parse_int_list(key, value);
    } else if (key == "realizations") {
        cfg.realizations = parse_int(key, value);
    } else if (key == "base_seed") {
        cfg.base_seed = parse_u64(key, value);
    } else if (key == "output_dir") {
        cfg.output_dir = trim(value);
    } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "svg") {
        cfg.write_svg = parse_bool(key, value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_json_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config JSON must be an object");

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        // flatten to the key=value grammar so both formats share one path
        std::string flat;
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (!value[i].is_number_integer()) {
                    throw ConfigError("config key '" + key + "': array entries must be integers");
                }
                if (i) flat += ",";
                flat += std::to_string(value[i].get<std::int64_t>());
            }
        } else if (value.is_string()) {
            flat = value.get<std::string>();
        } else if (value.is_boolean()) {
            flat = value.get<bool>() ? "true" : "false";
        } else if (value.is_number_unsigned()) {
            flat = std::to_string(value.get<std::uint64_t>());
        } else if (value.is_number_integer()) {
            flat = std::to_string(value.get<std::int64_t>());
        } else {
            throw ConfigError("config key '" + key + "': unsupported value " + value.dump());
        }
        apply(cfg, key, flat);
    }
    return cfg;
}

} // namespace

void ExperimentConfig::validate() const {
    if (m_values.empty()) throw ConfigError("m_values must be nonempty");
    if (n_values.empty()) throw ConfigError("n_values must be nonempty");
    if (realizations < 1) throw ConfigError("realizations must be >= 1");
    for (const auto m : m_values) {
        if (m < 1) throw ConfigError("m_values entries must be >= 1, got " + std::to_string(m));
    }
    for (const auto n : n_values) {
        if (n < 1) throw ConfigError("n_values entries must be >= 1, got " + std::to_string(n));
    }
}

ExperimentConfig parse_config(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json_config(text);
    }
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        apply(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace pagamma
