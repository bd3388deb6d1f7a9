#pragma once

// Minimal JSON value with a deterministic dump: object keys sorted,
// floats at 12 significant digits, -0 normalized. Reports written through
// this are byte-identical across runs with equal inputs.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zfr {

class Json {
public:
    Json() : node_(nullptr) {}
    Json(bool b) : node_(b) {}
    Json(int v) : node_(static_cast<std::int64_t>(v)) {}
    Json(std::int64_t v) : node_(v) {}
    Json(double v) : node_(v) {}
    Json(const char* s) : node_(std::string(s)) {}
    Json(std::string s) : node_(std::move(s)) {}

    static Json object() {
        Json j;
        j.node_ = Object{};
        return j;
    }
    static Json array() {
        Json j;
        j.node_ = Array{};
        return j;
    }

    Json& set(const std::string& key, Json value);
    Json& push(Json value);

    bool is_null() const { return std::holds_alternative<std::nullptr_t>(node_); }

    // Serialize; indent = 0 gives a single line.
    std::string dump(int indent = 0) const;

private:
    using Object = std::map<std::string, Json>;
    using Array = std::vector<Json>;
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Object, Array> node_;

    void dump_to(std::string& out, int indent, int depth) const;
};

// [re, im] pair, the wire form for complex numbers.
Json json_complex(double re, double im);

}  // namespace zfr
