#include "zfr/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "zfr/errors.hpp"

namespace zfr {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::ZeroFound: return "ZeroFound";
        default: return "Inconclusive";
    }
}

std::string branch_name(BetaBranch b) {
    switch (b) {
        case BetaBranch::GenericOrLargeGamma: return "GenericOrLargeGamma";
        case BetaBranch::PoleSmallGamma: return "PoleSmallGamma";
        default: return "RealZeroSegment";
    }
}

Json to_json(const ValidationReport& rep) {
    Json j = Json::object();
    j.set("n_max", rep.n_max);
    j.set("bound_ok", rep.bound_ok);
    Json viol = Json::array();
    for (auto n : rep.bound_violations) viol.push(n);
    j.set("bound_violations", std::move(viol));
    j.set("nonnegative", rep.nonnegative);
    j.set("min_re_lambda", rep.min_re_lambda);
    j.set("min_re_at", rep.min_re_at);
    j.set("kappas_ok", rep.kappas_ok);
    j.set("pole_order_ok", rep.pole_order_ok);
    j.set("degree_ok", rep.degree_ok);
    if (rep.coverage_limited_at) j.set("coverage_limited_at", *rep.coverage_limited_at);
    j.set("passes", rep.passes());
    return j;
}

Json to_json(const DlvpReport& rep) {
    Json j = Json::object();
    j.set("sigma", rep.sigma);
    j.set("gamma", rep.gamma);
    j.set("re_ld_0", rep.re_ld_0);
    j.set("re_ld_1", rep.re_ld_1);
    j.set("re_ld_2", rep.re_ld_2);
    j.set("combination", rep.combination);
    j.set("nonneg", rep.nonneg);
    if (rep.branch_filled) {
        j.set("branch", branch_name(rep.branch));
        j.set("beta_bound", rep.beta_bound);
        j.set("log_conductor", rep.log_conductor);
    }
    return j;
}

Json to_json(const ZeroRecord& rec) {
    Json j = Json::object();
    j.set("beta", rec.rho.real());
    j.set("gamma", rec.rho.imag());
    j.set("multiplicity", static_cast<std::int64_t>(rec.multiplicity));
    j.set("refine_error", rec.refine_error);
    j.set("method", rec.method == ZeroMethod::NewtonRefined ? "NewtonRefined"
                                                            : "ArgumentPrinciple");
    return j;
}

Json to_json(const CertificationReport& rep) {
    Json j = Json::object();
    j.set("instance", rep.instance);
    j.set("c_used", rep.c_used);
    j.set("c_proof", rep.c_proof);
    j.set("T", rep.t_max);
    j.set("analytic_conductor", rep.analytic_conductor);
    j.set("degree", static_cast<std::int64_t>(rep.degree));
    Json consts = Json::object();
    consts.set("A", rep.constants.A);
    consts.set("B", rep.constants.B);
    consts.set("C", rep.constants.C());
    consts.set("c2", rep.constants.c2);
    j.set("constants", std::move(consts));
    Json boxes = Json::array();
    for (const auto& b : rep.boxes) {
        Json jb = Json::object();
        jb.set("sigma_min", b.rect.sigma_min);
        jb.set("sigma_max", b.rect.sigma_max);
        jb.set("t_min", b.rect.t_min);
        jb.set("t_max", b.rect.t_max);
        jb.set("zero_count", static_cast<std::int64_t>(b.zero_count));
        jb.set("inconclusive", b.inconclusive);
        boxes.push(std::move(jb));
    }
    j.set("boxes", std::move(boxes));
    j.set("verdict", verdict_name(rep.verdict));
    if (rep.offending_zero) j.set("offending_zero", to_json(*rep.offending_zero));
    Json exc = Json::object();
    Json rz = Json::array();
    for (double b : rep.exceptional.real_zeros) rz.push(b);
    exc.set("real_zeros", std::move(rz));
    exc.set("count_in_segment", static_cast<std::int64_t>(rep.exceptional.count_in_segment));
    exc.set("segment_lo", rep.exceptional.segment_lo);
    j.set("exceptional", std::move(exc));
    j.set("conjugate_symmetric", rep.conjugate_symmetric);
    j.set("sigma_cap", rep.sigma_cap);
    return j;
}

std::string zero_cache_line(const std::string& instance, const ZeroRecord& rec) {
    Json j = Json::object();
    j.set("instance", instance);
    j.set("beta", rec.rho.real());
    j.set("gamma", rec.rho.imag());
    j.set("multiplicity", static_cast<std::int64_t>(rec.multiplicity));
    j.set("refine_error", rec.refine_error);
    return j.dump();
}

void append_zero_cache(const std::string& path, const std::string& instance,
                       const std::vector<ZeroRecord>& records) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot open zero cache for append: " + path);
    for (const auto& r : records) out << zero_cache_line(instance, r) << '\n';
}

std::vector<ZeroRecord> read_zero_cache(const std::string& path, const std::string& instance) {
    std::vector<ZeroRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw Error("zero cache: invalid JSON at " + path + ":" + std::to_string(lineno));
        if (j.value("instance", std::string{}) != instance) continue;
        ZeroRecord rec;
        rec.rho = {j.at("beta").get<double>(), j.at("gamma").get<double>()};
        rec.multiplicity = j.at("multiplicity").get<int>();
        rec.refine_error = j.at("refine_error").get<double>();
        rec.method = ZeroMethod::NewtonRefined;
        out.push_back(rec);
    }
    return out;
}

std::string boundary_csv(const LFunctionInstance& f, double c, double t_max, double t_step,
                         const std::vector<ZeroRecord>& zeros) {
    if (!(t_step > 0.0)) throw DomainError("boundary_csv: t_step must be positive");
    std::string out = "t,boundary_sigma,nearest_zero_beta\n";
    char buf[128];
    for (double t = 0.0; t <= t_max + 0.5 * t_step; t += t_step) {
        double tt = std::min(t, t_max);
        double nearest = std::numeric_limits<double>::quiet_NaN();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& z : zeros) {
            double d = std::abs(z.rho.imag() - tt);
            if (d < best) {
                best = d;
                nearest = z.rho.real();
            }
        }
        if (std::isnan(nearest)) {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,\n", tt, region_boundary(f, c, tt));
        } else {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", tt, region_boundary(f, c, tt),
                          nearest);
        }
        out += buf;
        if (tt >= t_max) break;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
}

}  // namespace zfr
