#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pagamma {

/// Every number the tools print goes through here: 12 significant digits.
inline std::string fmt_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string fmt_num(std::int64_t x) { return std::to_string(x); }

inline std::string json_quote(std::string_view s) {
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

/// Flat JSON object with insertion-ordered keys and pre-formatted values.
class JsonObject {
public:
    JsonObject& num(std::string key, double v) { return raw(std::move(key), fmt_num(v)); }
    JsonObject& integer(std::string key, std::int64_t v) { return raw(std::move(key), fmt_num(v)); }
    JsonObject& boolean(std::string key, bool v) { return raw(std::move(key), v ? "true" : "false"); }
    JsonObject& str(std::string key, std::string_view v) { return raw(std::move(key), json_quote(v)); }

    JsonObject& nums(std::string key, const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += fmt_num(v[i]);
        }
        return raw(std::move(key), s + "]");
    }

    JsonObject& raw(std::string key, std::string value) {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    std::string dump() const {
        std::string s = "{";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            if (i) s += ",";
            s += json_quote(fields_[i].first) + ":" + fields_[i].second;
        }
        return s + "}";
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

} // namespace pagamma
