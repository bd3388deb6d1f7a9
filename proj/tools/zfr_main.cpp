// zfr: validate axiomatic L-function instances, evaluate the combined
// log-derivative inequality, scan rectangles for zeros, and certify
// zero-free regions. Exit codes: 0 pass/Certified, 1 usage or I/O error,
// 2 zero found / validation failure, 3 inconclusive.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zfr/dlvp.hpp"
#include "zfr/errors.hpp"
#include "zfr/eval.hpp"
#include "zfr/instance_io.hpp"
#include "zfr/lfunction.hpp"
#include "zfr/reports.hpp"
#include "zfr/scanner.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitZeroOrInvalid = 2;
constexpr int kExitInconclusive = 3;

struct CommonOpts {
    std::string instance_path;
    std::string out_dir = ".";
    double abs_error = 1e-10;
    int em_order = 8;
    double a_const = 10.5;
    double b_const = 10.5;
    double c2 = 0.05;
    int threads = 1;
};

zfr::EvalConfig eval_config(const CommonOpts& o) {
    zfr::EvalConfig cfg;
    cfg.target_abs_error = o.abs_error;
    cfg.em_order = o.em_order;
    cfg.validate();
    return cfg;
}

zfr::ProofConstants proof_constants(const CommonOpts& o) {
    zfr::ProofConstants pc;
    pc.A = o.a_const;
    pc.B = o.b_const;
    pc.c2 = o.c2;
    pc.validate();
    return pc;
}

std::string cache_dir(const CommonOpts& o) {
    if (const char* env = std::getenv("ZFR_CACHE_DIR")) return env;
    return o.out_dir;
}

std::string out_path(const CommonOpts& o, const std::string& file) {
    fs::create_directories(o.out_dir);
    return (fs::path(o.out_dir) / file).string();
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--instance", o.instance_path, "instance JSON file")->required();
    cmd->add_option("--out", o.out_dir, "output directory for reports");
    cmd->add_option("--abs-error", o.abs_error, "evaluation truncation target");
    cmd->add_option("--em-order", o.em_order, "Euler-Maclaurin correction terms");
    cmd->add_option("--A", o.a_const, "explicit-formula constant A (> 10)");
    cmd->add_option("--B", o.b_const, "explicit-formula constant B (> 0)");
    cmd->add_option("--c2", o.c2, "exceptional-segment constant");
    cmd->add_option("--threads", o.threads, "worker threads for box scanning");
}

int cmd_validate(const CommonOpts& o, std::int64_t n_max) {
    auto f = zfr::parse_instance(o.instance_path);
    auto rep = zfr::validate_class_axioms(f, n_max);
    zfr::Json j = zfr::to_json(rep);
    j.set("instance", f.name);
    zfr::write_text_file(out_path(o, f.name + "_validate.json"), j.dump(2) + "\n");
    std::cout << (rep.passes() ? "PASS" : "FAIL") << " validate " << f.name << " (N = " << n_max
              << "): bound_ok=" << rep.bound_ok << " nonnegative=" << rep.nonnegative
              << " kappas_ok=" << rep.kappas_ok << "\n";
    return rep.passes() ? kExitOk : kExitZeroOrInvalid;
}

int cmd_conductor(const CommonOpts& o, double c, double t_max) {
    auto f = zfr::parse_instance(o.instance_path);
    double q = zfr::analytic_conductor(f);
    std::cout << f.name << ": degree " << f.degree << ", conductor " << f.conductor
              << ", analytic conductor " << q << "\n";
    std::cout << "zero-free boundary sigma(t) = 1 - c/log(q(f)(|t|+3)^d), c = " << c << "\n";
    if (t_max <= 0.0) {
        std::cout << "  t = 0  sigma = " << zfr::region_boundary(f, c, 0.0) << "\n";
        return kExitOk;
    }
    for (double t = 0.0; t <= t_max + 1e-9; t += t_max / 10.0)
        std::cout << "  t = " << t << "  sigma = " << zfr::region_boundary(f, c, t) << "\n";
    auto csv = zfr::boundary_csv(f, c, t_max, t_max / 200.0, {});
    zfr::write_text_file(out_path(o, f.name + "_boundary.csv"), csv);
    return kExitOk;
}

int cmd_dlvp(const CommonOpts& o, double sigma, double gamma) {
    auto f = zfr::parse_instance(o.instance_path);
    auto cfg = eval_config(o);
    auto rep = zfr::dlvp_combination(f, sigma, gamma, cfg);
    zfr::attach_beta_bound(rep, f, proof_constants(o));
    zfr::Json j = zfr::to_json(rep);
    j.set("instance", f.name);
    zfr::write_text_file(out_path(o, f.name + "_dlvp.json"), j.dump(2) + "\n");
    std::cout << (rep.nonneg ? "PASS" : "FAIL") << " dlvp-check " << f.name << " sigma=" << sigma
              << " gamma=" << gamma << " combination=" << rep.combination << "\n";
    return rep.nonneg ? kExitOk : kExitZeroOrInvalid;
}

int cmd_scan(const CommonOpts& o, double sigma_min, double sigma_max, double t_min, double t_max) {
    auto f = zfr::parse_instance(o.instance_path);
    auto cfg = eval_config(o);
    zfr::ComplexRectangle rect{sigma_min, sigma_max, t_min, t_max};
    int winding = zfr::count_zeros(f, rect, cfg);
    auto zeros = zfr::locate_zeros(f, rect, cfg);
    std::cout << "scan " << f.name << " [" << sigma_min << "," << sigma_max << "]x[" << t_min
              << "," << t_max << "]: winding " << winding << ", " << zeros.size()
              << " zero(s) located\n";
    for (const auto& z : zeros)
        std::cout << "  rho = " << z.rho.real() << " + " << z.rho.imag()
                  << "i  (refine_error " << z.refine_error << ")\n";
    if (!zeros.empty())
        zfr::append_zero_cache((fs::path(cache_dir(o)) / "zero_cache.jsonl").string(), f.name,
                               zeros);
    return kExitOk;
}

int cmd_certify(const CommonOpts& o, double c, double t_max) {
    auto f = zfr::parse_instance(o.instance_path);
    auto cfg = eval_config(o);
    auto rep = zfr::certify_region(f, c, t_max, cfg, proof_constants(o), o.threads);
    zfr::write_text_file(out_path(o, f.name + "_certify.json"), to_json(rep).dump(2) + "\n");
    // boundary table joined with any zeros previously cached by `scan`
    auto cached =
        zfr::read_zero_cache((fs::path(cache_dir(o)) / "zero_cache.jsonl").string(), f.name);
    zfr::write_text_file(out_path(o, f.name + "_boundary.csv"),
                         zfr::boundary_csv(f, c, t_max, t_max / 200.0, cached));
    std::cout << zfr::verdict_name(rep.verdict) << " " << f.name << " c=" << c << " T=" << t_max
              << " boxes=" << rep.boxes.size()
              << " exceptional=" << rep.exceptional.count_in_segment << "\n";
    switch (rep.verdict) {
        case zfr::Verdict::Certified: return kExitOk;
        case zfr::Verdict::ZeroFound: return kExitZeroOrInvalid;
        default: return kExitInconclusive;
    }
}

int cmd_residual(const CommonOpts& o, double sigma, double t) {
    auto f = zfr::parse_instance(o.instance_path);
    auto cfg = eval_config(o);
    std::complex<double> s{sigma, t};
    // zeros within the unit window come from a local box scan; the strip
    // stops short of sigma = 1 to keep the pole off the box boundary
    zfr::ComplexRectangle rect{0.0, 1.0 - 1.5e-3, t - 1.5, t + 1.5};
    std::vector<std::complex<double>> zeros;
    for (const auto& z : zfr::locate_zeros(f, rect, cfg)) zeros.push_back(z.rho);
    zfr::ExplicitFormulaBreakdown bd;
    double ratio = zfr::explicit_formula_residual(f, s, zeros, cfg, 1.0, &bd);
    std::cout << "residual " << f.name << " at s = " << sigma << " + " << t
              << "i: |residual|/log q(f,s) = " << ratio << " (" << bd.terms.size()
              << " window terms)\n";
    return kExitOk;
}

int cmd_report(const CommonOpts& o, double c, double t_max) {
    auto f = zfr::parse_instance(o.instance_path);
    auto cfg = eval_config(o);
    zfr::Json j = zfr::Json::object();
    j.set("instance", zfr::instance_to_json(f));
    j.set("analytic_conductor", zfr::analytic_conductor(f));
    j.set("validation", zfr::to_json(zfr::validate_class_axioms(f, 10000)));
    zfr::Json spots = zfr::Json::array();
    for (double gamma : {0.0, 10.0, 20.0}) {
        auto rep = zfr::dlvp_combination(f, 1.05, gamma, cfg);
        zfr::attach_beta_bound(rep, f, proof_constants(o));
        spots.push(zfr::to_json(rep));
    }
    j.set("dlvp_spot_checks", std::move(spots));
    zfr::Json boundary = zfr::Json::array();
    for (int i = 0; i <= 10; ++i) {
        double tt = t_max * i / 10.0;
        zfr::Json row = zfr::Json::object();
        row.set("t", tt);
        row.set("sigma", zfr::region_boundary(f, c, tt));
        boundary.push(std::move(row));
    }
    j.set("boundary", std::move(boundary));
    zfr::write_text_file(out_path(o, f.name + "_report.json"), j.dump(2) + "\n");
    std::cout << "report written for " << f.name << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-free region toolkit for axiomatic L-functions"};
    app.require_subcommand(1);

    CommonOpts o;
    std::int64_t n_max = 10000;
    double c = 0.05, t_max = 30.0, sigma = 1.05, gamma = 0.0, t = 0.0;
    double sigma_min = 0.0, sigma_max = 1.0, t_min = 0.0, t_hi = 1.0;

    auto* validate = app.add_subcommand("validate", "check the class axioms up to N");
    add_common(validate, o);
    validate->add_option("--N", n_max, "largest n checked");

    auto* conductor = app.add_subcommand("conductor", "analytic conductor and boundary table");
    add_common(conductor, o);
    conductor->add_option("--c", c, "region constant");
    conductor->add_option("--T", t_max, "largest |t| tabulated");

    auto* dlvp = app.add_subcommand("dlvp-check", "combined log-derivative inequality at a point");
    add_common(dlvp, o);
    dlvp->add_option("--sigma", sigma, "real part (in (1, 1.25])");
    dlvp->add_option("--gamma", gamma, "ordinate");

    auto* scan = app.add_subcommand("scan", "count and refine zeros in a rectangle");
    add_common(scan, o);
    scan->add_option("--sigma-min", sigma_min)->required();
    scan->add_option("--sigma-max", sigma_max)->required();
    scan->add_option("--t-min", t_min)->required();
    scan->add_option("--t-max", t_hi)->required();

    auto* certify = app.add_subcommand("certify", "certify the zero-free region up to T");
    add_common(certify, o);
    certify->add_option("--c", c, "region constant")->required();
    certify->add_option("--T", t_max, "certify for |t| <= T")->required();

    auto* residual = app.add_subcommand("residual", "explicit-formula residual at a point");
    add_common(residual, o);
    residual->add_option("--sigma", sigma, "real part (in [1, 1.25])");
    residual->add_option("--t", t, "imaginary part");

    auto* report = app.add_subcommand("report", "combined validation/dlvp/boundary report");
    add_common(report, o);
    report->add_option("--c", c, "region constant");
    report->add_option("--T", t_max, "boundary table extent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, n_max);
        if (conductor->parsed()) return cmd_conductor(o, c, t_max);
        if (dlvp->parsed()) return cmd_dlvp(o, sigma, gamma);
        if (scan->parsed()) return cmd_scan(o, sigma_min, sigma_max, t_min, t_hi);
        if (certify->parsed()) return cmd_certify(o, c, t_max);
        if (residual->parsed()) return cmd_residual(o, sigma, t);
        if (report->parsed()) return cmd_report(o, c, t_max);
    } catch (const zfr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zfr::GateError& e) {
        std::cerr << "gate: " << e.what() << "\n";
        return kExitZeroOrInvalid;
    } catch (const zfr::InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const zfr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
