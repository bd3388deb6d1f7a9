#include "zfr/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zfr/errors.hpp"

namespace zfr {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const std::string& where) {
    if (!obj.is_object()) throw ParseError("expected an object", where);
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) throw ParseError("unknown field \"" + key + "\"", where + "/" + key);
    for (const auto& key : required)
        if (!obj.contains(key)) throw ParseError("missing field \"" + key + "\"", where + "/" + key);
}

std::int64_t get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError("expected an integer", where);
    return v.get<std::int64_t>();
}

double get_num(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError("expected a number", where);
    return v.get<double>();
}

std::complex<double> get_complex(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError("expected a [re, im] pair", where);
    return {get_num(v[0], where + "/0"), get_num(v[1], where + "/1")};
}

CoefficientSource parse_source(const json& v, const std::string& where) {
    if (!v.is_object()) throw ParseError("expected a coefficient-source object", where);
    if (!v.contains("type")) throw ParseError("missing field \"type\"", where + "/type");
    if (!v["type"].is_string()) throw ParseError("expected a string", where + "/type");
    std::string type = v["type"].get<std::string>();

    if (type == "zeta") {
        require_keys(v, {"type"}, {"type"}, where);
        return zeta_source();
    }
    if (type == "dirichlet") {
        require_keys(v, {"type", "modulus", "index"}, {"type", "modulus", "index"}, where);
        std::int64_t q = get_int(v["modulus"], where + "/modulus");
        if (q < 1) throw ParseError("modulus must be positive", where + "/modulus");
        if (!v["index"].is_array()) throw ParseError("expected an array", where + "/index");
        std::vector<std::int64_t> index;
        for (std::size_t i = 0; i < v["index"].size(); ++i)
            index.push_back(get_int(v["index"][i], where + "/index/" + std::to_string(i)));
        try {
            return char_source(DirichletCharacter(q, std::move(index)));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), where + "/index");
        }
    }
    if (type == "kronecker") {
        require_keys(v, {"type", "discriminant"}, {"type", "discriminant"}, where);
        std::int64_t d = get_int(v["discriminant"], where + "/discriminant");
        try {
            return char_source(kronecker_character(d), d);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), where + "/discriminant");
        }
    }
    if (type == "product") {
        require_keys(v, {"type", "factors"}, {"type", "factors"}, where);
        if (!v["factors"].is_array() || v["factors"].empty())
            throw ParseError("expected a nonempty array of factors", where + "/factors");
        std::vector<CoefficientSource> factors;
        for (std::size_t i = 0; i < v["factors"].size(); ++i)
            factors.push_back(parse_source(v["factors"][i], where + "/factors/" + std::to_string(i)));
        return product_source(std::move(factors));
    }
    if (type == "satake") {
        require_keys(v, {"type", "primes"}, {"type", "primes"}, where);
        if (!v["primes"].is_object())
            throw ParseError("expected an object mapping primes to parameter lists",
                             where + "/primes");
        SatakeSource table;
        int degree = -1;
        for (const auto& [key, val] : v["primes"].items()) {
            std::int64_t p = 0;
            try {
                std::size_t pos = 0;
                p = std::stoll(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (...) {
                throw ParseError("prime key \"" + key + "\" is not an integer",
                                 where + "/primes/" + key);
            }
            if (!val.is_array() || val.empty())
                throw ParseError("expected a nonempty array of [re, im] pairs",
                                 where + "/primes/" + key);
            std::vector<std::complex<double>> alphas;
            for (std::size_t i = 0; i < val.size(); ++i)
                alphas.push_back(get_complex(val[i], where + "/primes/" + key + "/" + std::to_string(i)));
            if (degree < 0)
                degree = static_cast<int>(alphas.size());
            else if (degree != static_cast<int>(alphas.size()))
                throw ParseError("inconsistent Satake parameter counts across primes",
                                 where + "/primes/" + key);
            table.primes.emplace(p, std::move(alphas));
        }
        if (table.primes.empty()) throw ParseError("satake table is empty", where + "/primes");
        table.degree = degree;
        try {
            return satake_source(std::move(table));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), where + "/primes");
        }
    }
    throw ParseError("unknown coefficient-source type \"" + type + "\"", where + "/type");
}

}  // namespace

LFunctionInstance parse_instance_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         "/byte:" + std::to_string(e.byte));
    }
    require_keys(root,
                 {"name", "degree", "conductor", "kappas", "pole_order", "root_number",
                  "coeff_source"},
                 {"name", "degree", "conductor", "kappas", "pole_order", "root_number",
                  "coeff_source"},
                 "");

    LFunctionInstance f;
    if (!root["name"].is_string()) throw ParseError("expected a string", "/name");
    f.name = root["name"].get<std::string>();

    std::int64_t degree = get_int(root["degree"], "/degree");
    if (degree < 1) throw ParseError("degree must be a positive integer", "/degree");
    f.degree = static_cast<int>(degree);

    f.conductor = get_int(root["conductor"], "/conductor");
    if (f.conductor < 1) throw ParseError("conductor must be a positive integer", "/conductor");

    if (!root["kappas"].is_array()) throw ParseError("expected an array", "/kappas");
    for (std::size_t i = 0; i < root["kappas"].size(); ++i) {
        auto k = get_complex(root["kappas"][i], "/kappas/" + std::to_string(i));
        if (!(k.real() > -1.0))
            throw ParseError("Langlands parameter real part must exceed -1",
                             "/kappas/" + std::to_string(i));
        f.kappas.push_back(LanglandsParameter{k});
    }
    if (static_cast<int>(f.kappas.size()) != f.degree)
        throw ParseError("kappas must list exactly `degree` parameters", "/kappas");

    std::int64_t r = get_int(root["pole_order"], "/pole_order");
    if (r != 0 && r != 1)
        throw ParseError("pole_order must be 0 or 1 (the class admits at most a simple "
                         "pole at s = 1)",
                         "/pole_order");
    f.pole_order = static_cast<int>(r);

    f.root_number = get_complex(root["root_number"], "/root_number");
    if (std::abs(f.root_number) > 1.0 + 1e-9)
        throw ParseError("root number must have modulus at most 1", "/root_number");

    f.coeff_source = parse_source(root["coeff_source"], "/coeff_source");
    if (source_degree(f.coeff_source) != f.degree)
        throw ParseError("coefficient source degree " +
                             std::to_string(source_degree(f.coeff_source)) +
                             " disagrees with declared degree " + std::to_string(f.degree),
                         "/coeff_source");
    return f;
}

LFunctionInstance parse_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

namespace {

Json source_to_json(const CoefficientSource& src) {
    return std::visit(
        [](const auto& node) -> Json {
            using T = std::decay_t<decltype(node)>;
            Json j = Json::object();
            if constexpr (std::is_same_v<T, ZetaSource>) {
                j.set("type", "zeta");
            } else if constexpr (std::is_same_v<T, CharSource>) {
                if (node.kronecker_disc) {
                    j.set("type", "kronecker");
                    j.set("discriminant", *node.kronecker_disc);
                } else {
                    j.set("type", "dirichlet");
                    j.set("modulus", node.chi.modulus());
                    Json idx = Json::array();
                    for (auto e : node.chi.index()) idx.push(e);
                    j.set("index", std::move(idx));
                }
            } else if constexpr (std::is_same_v<T, ProductSource>) {
                j.set("type", "product");
                Json factors = Json::array();
                for (const auto& f : node.factors) factors.push(source_to_json(f));
                j.set("factors", std::move(factors));
            } else {
                j.set("type", "satake");
                Json primes = Json::object();
                for (const auto& [p, alphas] : node.primes) {
                    Json list = Json::array();
                    for (const auto& a : alphas) list.push(json_complex(a.real(), a.imag()));
                    primes.set(std::to_string(p), std::move(list));
                }
                j.set("primes", std::move(primes));
            }
            return j;
        },
        src.node);
}

}  // namespace

Json instance_to_json(const LFunctionInstance& f) {
    Json j = Json::object();
    j.set("name", f.name);
    j.set("degree", static_cast<std::int64_t>(f.degree));
    j.set("conductor", f.conductor);
    Json kappas = Json::array();
    for (const auto& k : f.kappas) kappas.push(json_complex(k.kappa.real(), k.kappa.imag()));
    j.set("kappas", std::move(kappas));
    j.set("pole_order", static_cast<std::int64_t>(f.pole_order));
    j.set("root_number", json_complex(f.root_number.real(), f.root_number.imag()));
    j.set("coeff_source", source_to_json(f.coeff_source));
    return j;
}

}  // namespace zfr
