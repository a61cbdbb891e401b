#pragma once

// JSON Lines I/O helpers. Readers report 1-based line numbers in errors.

#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <string>

#include "cfkit/core/errors.hpp"

namespace cfkit {

using Json = nlohmann::json;

/// Parse every line of a JSONL file, invoking fn(line_number, object).
/// Blank lines are rejected; a malformed line raises SchemaError naming it.
inline void for_each_jsonl_line(const std::string& path,
                                const std::function<void(std::size_t, const Json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            throw SchemaError(path + ":" + std::to_string(lineno) + ": blank line");
        }
        Json obj = Json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw SchemaError(path + ":" + std::to_string(lineno) + ": malformed JSON line");
        }
        fn(lineno, obj);
    }
}

class JsonlWriter {
public:
    explicit JsonlWriter(const std::string& path) : path_(path), out_(path) {
        if (!out_) throw IoError("cannot open " + path + " for writing");
    }

    void write(const Json& obj) {
        out_ << obj.dump() << "\n";
        if (!out_) throw IoError("short write to " + path_);
    }

private:
    std::string path_;
    std::ofstream out_;
};

/// Required-field accessors with SchemaError diagnostics.
inline const Json& require_field(const Json& obj, const char* key, std::size_t lineno,
                                 const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(path + ":" + std::to_string(lineno) + ": missing field '" + key + "'");
    }
    return *it;
}

inline std::string require_string(const Json& obj, const char* key, std::size_t lineno,
                                  const std::string& path) {
    const Json& v = require_field(obj, key, lineno, path);
    if (!v.is_string()) {
        throw SchemaError(path + ":" + std::to_string(lineno) + ": field '" + key +
                          "' must be a string");
    }
    return v.get<std::string>();
}

} // namespace cfkit
