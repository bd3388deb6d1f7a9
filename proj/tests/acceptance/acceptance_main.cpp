// Acceptance suite: one checkable criterion per stated requirement, each
// printed as a single PASS/FAIL line with its elapsed time. Exit status is
// nonzero when any selected criterion fails.
//
// Usage: zfr_acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "zfr/dlvp.hpp"
#include "zfr/errors.hpp"
#include "zfr/eval.hpp"
#include "zfr/instance_io.hpp"
#include "zfr/lfunction.hpp"
#include "zfr/reports.hpp"
#include "zfr/scanner.hpp"

using namespace zfr;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

#ifndef ZFR_INSTANCE_DIR
#define ZFR_INSTANCE_DIR "instances"
#endif

std::string instance_path(const std::string& file) {
    return (std::filesystem::path(ZFR_INSTANCE_DIR) / file).string();
}

struct CheckFailure {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw CheckFailure{message};
}

// the named catalog plus every nonprincipal character mod q <= 12 as a
// product with zeta
std::vector<LFunctionInstance> validated_catalog() {
    std::vector<LFunctionInstance> out;
    out.push_back(make_zeta());
    out.push_back(make_dedekind_quadratic(-4, "zeta_chi4"));
    out.push_back(make_dedekind_quadratic(5, "zeta_chi5"));
    for (std::int64_t q = 3; q <= 12; ++q) {
        int idx = 0;
        for (const auto& chi : characters_mod(q)) {
            ++idx;
            if (chi.is_principal()) continue;
            out.push_back(make_zeta_times_chi(chi, "zeta_chi_mod" + std::to_string(q) + "_" +
                                                       std::to_string(idx - 1)));
        }
    }
    return out;
}

// --- criterion 1: kernel identities ---------------------------------------

bool criterion_1(std::string& detail) {
    oracles::Rng rng(0xc0ffee);
    double worst_a = 0.0, worst_b = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double theta = rng.uniform(-60.0, 60.0);
        double c = std::cos(theta);
        worst_a = std::max(worst_a, std::abs(trig_kernel(theta) - 2.0 * (1.0 + c) * (1.0 + c)));
        Complex w = 1.0 + Complex{std::cos(theta), -std::sin(theta)};
        double m = std::norm(w);
        worst_b = std::max(worst_b, std::abs(m * m - 2.0 * trig_kernel(theta)));
    }
    expect(worst_a < 1e-12, "kernel identity error " + std::to_string(worst_a));
    expect(worst_b < 1e-12, "fourth-power identity error " + std::to_string(worst_b));
    expect(std::abs(trig_kernel(kPi)) < 1e-15, "kernel at pi not zero to rounding");
    char buf[128];
    std::snprintf(buf, sizeof buf, "max identity errors %.2e / %.2e", worst_a, worst_b);
    detail = buf;
    return true;
}

// --- criterion 2: class axioms over the catalog ----------------------------

bool criterion_2(std::string& detail) {
    auto catalog = validated_catalog();
    for (const auto& f : catalog) {
        auto rep = validate_class_axioms(f, 10000);
        expect(rep.bound_ok, f.name + ": coefficient bound failed");
        expect(rep.kappas_ok && rep.pole_order_ok && rep.degree_ok, f.name + ": shape failed");
        expect(rep.nonnegative, f.name + ": nonnegativity failed at n = " +
                                    std::to_string(rep.min_re_at));
    }
    detail = std::to_string(catalog.size()) + " instances to N = 10000";
    return true;
}

// --- criterion 3: evaluation accuracy ---------------------------------------

bool criterion_3(std::string& detail) {
    expect(std::abs(hurwitz_zeta({2.0, 0.0}, 1.0) - kPi * kPi / 6.0) < 1e-9,
           "zeta(2) misses pi^2/6");
    for (Complex s : {Complex{2.0, 0.0}, Complex{3.0, 0.0}, Complex{0.5, 3.0},
                      Complex{-0.5, 2.0}, Complex{2.5, 7.0}, Complex{1.5, -4.0}}) {
        Complex lhs = hurwitz_zeta(s, 0.5);
        Complex rhs = (std::exp(s * std::log(2.0)) - 1.0) * hurwitz_zeta(s, 1.0);
        expect(std::abs(lhs - rhs) < 1e-9, "half-shift identity misses at a test point");
    }

    auto chi4 = make_dirichlet_l(kronecker_character(-4), "chi4");
    double catalan_oracle = oracles::catalan_direct_series();
    expect(std::abs(l_value(chi4, {2.0, 0.0}) - catalan_oracle) < 1e-8,
           "L(2, chi_{-4}) vs direct summation oracle");

    oracles::Rng rng(0xabcdef12);
    int tested = 0;
    double worst = 0.0;
    while (tested < 1000) {
        Complex s{rng.uniform(-0.99, 3.99), rng.uniform(-40.0, 40.0)};
        if (std::abs(s - 1.0) < 0.02) continue;
        double a = rng.uniform(1e-3, 1.0);
        Complex lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0);
        Complex rhs = std::exp(-s * std::log(a));
        worst = std::max(worst, std::abs(lhs - rhs));
        ++tested;
    }
    expect(worst < 1e-9, "recurrence error " + std::to_string(worst));
    char buf[96];
    std::snprintf(buf, sizeof buf, "recurrence worst %.2e over 1000 points", worst);
    detail = buf;
    return true;
}

// --- criterion 4: combined inequality over the grid -------------------------

bool criterion_4(std::string& detail) {
    auto catalog = validated_catalog();
    double worst = 1e300;
    std::string worst_at = "-";
    for (const auto& f : catalog) {
        for (double sigma : {1.01, 1.05, 1.1, 1.2}) {
            for (int i = 0; i <= 300; ++i) {
                double gamma = static_cast<double>(i) / 10.0;
                auto rep = dlvp_combination(f, sigma, gamma);
                if (rep.combination < worst) {
                    worst = rep.combination;
                    char buf[128];
                    std::snprintf(buf, sizeof buf, "%s sigma=%.2f gamma=%.1f", f.name.c_str(),
                                  sigma, gamma);
                    worst_at = buf;
                }
                expect(rep.combination >= -kDlvpSlack,
                       f.name + ": combination " + std::to_string(rep.combination) +
                           " below -1e-6 at sigma " + std::to_string(sigma) + ", gamma " +
                           std::to_string(gamma));
            }
        }
    }
    char buf[192];
    std::snprintf(buf, sizeof buf, "%zu instances x 4 sigma x 301 gamma; min combination %.3g at %s",
                  catalog.size(), worst, worst_at.c_str());
    detail = buf;
    return true;
}

// --- criterion 5: explicit-formula residuals and positivity -----------------

bool criterion_5(std::string& detail) {
    auto zeta = make_zeta();
    std::vector<Complex> zeros;
    for (const auto& z : locate_zeros(zeta, {0.0, 1.0, 0.5, 31.5})) {
        zeros.push_back(z.rho);
        zeros.push_back(std::conj(z.rho));
    }
    expect(zeros.size() == 8, "expected 4 zero pairs below t = 31.5, got " +
                                  std::to_string(zeros.size() / 2));

    double worst_ratio = 0.0;
    int points = 0, window_terms = 0;
    for (double sigma : {1.0, 1.0625, 1.125, 1.1875, 1.25}) {
        for (int k = 0; k < 10; ++k) {
            double t = 1.5 + 3.0 * static_cast<double>(k);
            for (double tt : {t, -t}) {
                ExplicitFormulaBreakdown bd;
                double ratio = explicit_formula_residual(zeta, {sigma, tt}, zeros, {}, 1.0, &bd);
                expect(std::isfinite(ratio), "residual ratio not finite");
                expect(ratio < 10.0, "residual ratio " + std::to_string(ratio) + " >= 10");
                for (const auto& term : bd.terms)
                    expect(term.term.real() > 0.0, "window term with nonpositive real part");
                worst_ratio = std::max(worst_ratio, ratio);
                window_terms += static_cast<int>(bd.terms.size());
                ++points;
            }
        }
    }
    expect(points == 100, "grid size wrong");
    char buf[128];
    std::snprintf(buf, sizeof buf, "100 points, max ratio %.3f, %d window terms", worst_ratio,
                  window_terms);
    detail = buf;
    return true;
}

// --- criterion 6: zero scanning ---------------------------------------------

bool criterion_6(std::string& detail) {
    auto zeta = make_zeta();
    expect(count_zeros(zeta, {0.0, 1.0, 10.0, 20.0}) == 1, "count in [0,1]x[10,20] is not 1");
    expect(count_zeros(zeta, {1.1, 2.0, 0.0, 50.0}) == 0, "count in [1.1,2]x[0,50] is not 0");

    // bisection on argument-principle boxes, no Newton
    ComplexRectangle box{0.0, 1.0, 14.0, 14.3};
    while (std::max(box.sigma_max - box.sigma_min, box.t_max - box.t_min) > 2e-6) {
        if (box.sigma_max - box.sigma_min >= box.t_max - box.t_min) {
            double cut = 0.5 * (box.sigma_min + box.sigma_max);
            ComplexRectangle left{box.sigma_min, cut, box.t_min, box.t_max};
            box = count_zeros(zeta, left) == 1
                      ? left
                      : ComplexRectangle{cut, box.sigma_max, box.t_min, box.t_max};
        } else {
            double cut = 0.5 * (box.t_min + box.t_max);
            ComplexRectangle low{box.sigma_min, box.sigma_max, box.t_min, cut};
            box = count_zeros(zeta, low) == 1
                      ? low
                      : ComplexRectangle{box.sigma_min, box.sigma_max, cut, box.t_max};
        }
    }
    Complex oracle{0.5 * (box.sigma_min + box.sigma_max), 0.5 * (box.t_min + box.t_max)};

    auto rec = refine_zero(zeta, {0.5, 14.1});
    expect(std::abs(rec.rho - oracle) < 1e-5, "refined zero disagrees with the bisection oracle");
    auto conj_rec = refine_zero(zeta, {0.5, -14.1});
    expect(std::abs(conj_rec.rho - std::conj(rec.rho)) < 1e-8,
           "conjugate symmetry beyond 1e-8");
    char buf[128];
    std::snprintf(buf, sizeof buf, "rho = %.9f + %.9fi, oracle gap %.2e", rec.rho.real(),
                  rec.rho.imag(), std::abs(rec.rho - oracle));
    detail = buf;
    return true;
}

// --- criterion 7: end-to-end certification ----------------------------------

std::vector<std::string> certification_files() {
    return {"zeta.json", "zeta_chi4.json", "zeta_chi5.json", "dedekind_gaussian.json",
            "dedekind_sqrt5.json"};
}

std::string run_certifications(int threads) {
    std::string all;
    for (const auto& file : certification_files()) {
        auto f = parse_instance(instance_path(file));
        auto rep = certify_region(f, 0.05, 30.0, {}, {}, threads);
        expect(rep.verdict == Verdict::Certified, f.name + ": verdict " + verdict_name(rep.verdict));
        expect(rep.exceptional.count_in_segment == 0,
               f.name + ": exceptional count " + std::to_string(rep.exceptional.count_in_segment));
        all += to_json(rep).dump(2);
        all += '\n';
    }
    return all;
}

bool criterion_7(std::string& detail) {
    std::string reports = run_certifications(2);
    detail = std::to_string(certification_files().size()) + " instances Certified at c=0.05, T=30";
    (void)reports;
    return true;
}

// --- criterion 8: branch logic ------------------------------------------------

bool criterion_8(std::string& detail) {
    oracles::Rng rng(0xbead);
    for (int i = 0; i < 1000; ++i) {
        ProofConstants pc;
        pc.A = rng.uniform(10.01, 90.0);
        pc.B = rng.uniform(0.1, 120.0);
        pc.L = rng.uniform(1.5, 50.0);
        int r = static_cast<int>(rng.integer(0, 1));
        double gamma = rng.uniform(1e-7, 2e-2) * (rng.integer(0, 1) ? 1.0 : 400.0);
        auto mine = beta_bound(r, gamma, pc);
        auto orc = oracles::beta_branch_oracle(r, gamma, pc.A, pc.B, pc.L);
        expect((mine.branch == BetaBranch::GenericOrLargeGamma) == orc.generic,
               "branch disagrees with the oracle");
        expect(std::abs(mine.bound - orc.bound) < 1e-15 * std::abs(orc.bound),
               "bound disagrees with the oracle");
    }
    detail = "1000 random (r, gamma, A, B, L) cases";
    return true;
}

// --- criterion 9: determinism ----------------------------------------------

bool criterion_9(std::string& detail) {
    std::string first = run_certifications(2);
    std::string second = run_certifications(2);
    expect(first == second, "two certification runs produced different bytes");
    detail = "byte-identical reports over " + std::to_string(first.size()) + " bytes";
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }

    std::vector<Criterion> criteria{
        {1, "kernel identities", 1.0, criterion_1},
        {2, "class axioms over the catalog", 10.0, criterion_2},
        {3, "evaluation accuracy", 30.0, criterion_3},
        {4, "combined inequality on the grid", 300.0, criterion_4},
        {5, "explicit-formula residuals", 120.0, criterion_5},
        {6, "zero scanning", 120.0, criterion_6},
        {7, "end-to-end certification", 600.0, criterion_7},
        {8, "branch logic", 1.0, criterion_8},
        {9, "certification determinism", 1200.0, criterion_9},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        if (only && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const CheckFailure& e) {
            detail = e.message;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            detail += " [over budget " + std::to_string(c.budget_seconds) + "s]";
        }
        std::printf("criterion %d: %s - %s (%.2fs)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.label,
                    elapsed, detail.empty() ? "" : " | ", detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
