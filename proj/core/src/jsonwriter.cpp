#include "zfr/jsonwriter.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zfr {

Json& Json::set(const std::string& key, Json value) {
    if (!std::holds_alternative<Object>(node_)) throw std::logic_error("Json::set on non-object");
    std::get<Object>(node_)[key] = std::move(value);
    return *this;
}

Json& Json::push(Json value) {
    if (!std::holds_alternative<Array>(node_)) throw std::logic_error("Json::push on non-array");
    std::get<Array>(node_).push_back(std::move(value));
    return *this;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
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
    out += '"';
}

void append_double(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
    // bare integers stay valid JSON numbers either way
}

void indent_to(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * depth), ' ');
}

}  // namespace

void Json::dump_to(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(node_)) {
        out += "null";
    } else if (std::holds_alternative<bool>(node_)) {
        out += std::get<bool>(node_) ? "true" : "false";
    } else if (std::holds_alternative<std::int64_t>(node_)) {
        out += std::to_string(std::get<std::int64_t>(node_));
    } else if (std::holds_alternative<double>(node_)) {
        append_double(out, std::get<double>(node_));
    } else if (std::holds_alternative<std::string>(node_)) {
        append_escaped(out, std::get<std::string>(node_));
    } else if (std::holds_alternative<Object>(node_)) {
        const auto& obj = std::get<Object>(node_);
        out += '{';
        bool first = true;
        for (const auto& [k, v] : obj) {
            if (!first) out += ',';
            first = false;
            indent_to(out, indent, depth + 1);
            append_escaped(out, k);
            out += indent > 0 ? ": " : ":";
            v.dump_to(out, indent, depth + 1);
        }
        if (!obj.empty()) indent_to(out, indent, depth);
        out += '}';
    } else {
        const auto& arr = std::get<Array>(node_);
        out += '[';
        bool first = true;
        for (const auto& v : arr) {
            if (!first) out += ',';
            first = false;
            indent_to(out, indent, depth + 1);
            v.dump_to(out, indent, depth + 1);
        }
        if (!arr.empty()) indent_to(out, indent, depth);
        out += ']';
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    return out;
}

Json json_complex(double re, double im) {
    Json a = Json::array();
    a.push(re).push(im);
    return a;
}

}  // namespace zfr
