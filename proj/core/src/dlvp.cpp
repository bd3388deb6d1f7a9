#include "zfr/dlvp.hpp"

#include <cmath>
#include <string>

#include "zfr/errors.hpp"

namespace zfr {

double ProofConstants::c() const {
    double proof = 1.0 / (400.0 * C());
    return proof < c2 ? proof : c2;
}

void ProofConstants::validate() const {
    if (!(A > 10.0)) throw DomainError("ProofConstants: A must exceed 10");
    if (!(B > 0.0)) throw DomainError("ProofConstants: B must be positive");
    if (!(c2 > 0.0)) throw DomainError("ProofConstants: c2 must be positive");
}

double log_conductor_param(const LFunctionInstance& f, double gamma) {
    return std::log(analytic_conductor(f)) +
           static_cast<double>(f.degree) * std::log(std::abs(gamma) + 3.0);
}

ProofConstants proof_constants_for(const LFunctionInstance& f, double gamma,
                                   ProofConstants base) {
    base.validate();
    base.L = log_conductor_param(f, gamma);
    return base;
}

double trig_kernel(double theta) { return 3.0 + 4.0 * std::cos(theta) + std::cos(2.0 * theta); }

std::complex<double> lambda_g(const LFunctionInstance& f, std::int64_t n, double gamma) {
    if (n < 2) throw DomainError("lambda_g: n must be >= 2");
    double t = gamma * std::log(static_cast<double>(n));
    std::complex<double> w = 1.0 + std::complex<double>{std::cos(t), -std::sin(t)};
    double m = std::norm(w);  // |1+n^{-i gamma}|^2
    return (m * m) * lambda_coeff(f, n);
}

DlvpReport dlvp_combination(const LFunctionInstance& f, double sigma, double gamma,
                            const EvalConfig& cfg) {
    if (!(sigma > 1.0 && sigma <= 2.0))
        throw DomainError("dlvp_combination: sigma must lie in (1, 2]");
    DlvpReport rep;
    rep.sigma = sigma;
    rep.gamma = gamma;
    rep.re_ld_0 = log_deriv(f, {sigma, 0.0}, cfg).real();
    rep.re_ld_1 = log_deriv(f, {sigma, gamma}, cfg).real();
    rep.re_ld_2 = log_deriv(f, {sigma, 2.0 * gamma}, cfg).real();
    rep.combination = -6.0 * rep.re_ld_0 - 8.0 * rep.re_ld_1 - 2.0 * rep.re_ld_2;
    rep.nonneg = rep.combination >= -kDlvpSlack;
    return rep;
}

void attach_beta_bound(DlvpReport& rep, const LFunctionInstance& f, const ProofConstants& base) {
    if (f.pole_order == 1 && rep.gamma == 0.0) return;  // real-zero segment case
    auto consts = proof_constants_for(f, rep.gamma, base);
    auto bb = beta_bound(f.pole_order, rep.gamma, consts);
    rep.branch = bb.branch;
    rep.beta_bound = bb.bound;
    rep.log_conductor = consts.L;
    rep.branch_filled = true;
}

BetaBoundResult beta_bound(int pole_order, double gamma, const ProofConstants& consts) {
    consts.validate();
    if (!(consts.L > 0.0)) throw DomainError("beta_bound: constants carry no L parameter");
    if (pole_order != 0 && pole_order != 1)
        throw DomainError("beta_bound: pole order must be 0 or 1");
    if (pole_order == 1 && gamma == 0.0)
        throw DomainError("beta_bound: r = 1 with gamma = 0 belongs to the real-zero "
                          "segment count, not the branch bounds");
    if (pole_order == 0 || std::abs(gamma) > 1.0 / (5.0 * consts.A * consts.L))
        return {BetaBranch::GenericOrLargeGamma, 1.0 - 1.0 / (400.0 * consts.A * consts.L), true};
    return {BetaBranch::PoleSmallGamma, 1.0 - 1.0 / (60.0 * consts.C() * consts.L), false};
}

double explicit_formula_residual(const LFunctionInstance& f, std::complex<double> s,
                                 const std::vector<std::complex<double>>& zeros,
                                 const EvalConfig& cfg, double window,
                                 ExplicitFormulaBreakdown* breakdown) {
    if (!(s.real() >= 1.0 && s.real() <= 1.25))
        throw DomainError("explicit_formula_residual: requires Re(s) in [1, 5/4]");
    if (std::abs(s - 1.0) < 1e-3)
        throw SingularNeighborhood("explicit_formula_residual: s within 1e-3 of the point s = 1");
    for (const auto& rho : zeros)
        if (std::abs(s - rho) < 1e-3)
            throw SingularNeighborhood(
                "explicit_formula_residual: s within 1e-3 of a supplied zero");

    double r = static_cast<double>(f.pole_order);
    std::complex<double> ld = log_deriv(f, s, cfg);
    std::complex<double> acc = ld + r / s + r / (s - 1.0);
    ExplicitFormulaBreakdown local;
    local.log_deriv_value = ld;
    for (const auto& kp : f.kappas) {
        if (std::abs(s + kp.kappa) <= window) {
            std::complex<double> t = 1.0 / (s + kp.kappa);
            acc -= t;
            local.terms.push_back({kp.kappa, t, true});
        }
    }
    for (const auto& rho : zeros) {
        if (std::abs(s - rho) <= window) {
            std::complex<double> t = 1.0 / (s - rho);
            acc -= t;
            local.terms.push_back({rho, t, false});
        }
    }
    double ratio = std::abs(acc) / std::log(analytic_conductor_at(f, s));
    if (breakdown) {
        local.residual = acc;
        local.ratio = ratio;
        *breakdown = std::move(local);
    }
    return ratio;
}

int exceptional_zero_capacity(const LFunctionInstance& f, double c2,
                              const std::vector<double>& real_zeros) {
    if (!(c2 > 0.0)) throw DomainError("exceptional_zero_capacity: c2 must be positive");
    double lo = 1.0 - c2 / std::log(analytic_conductor(f));
    int count = 0;
    for (double beta : real_zeros)
        if (beta >= lo && beta < 1.0) ++count;
    return count;
}

double region_boundary(const LFunctionInstance& f, double c, double t) {
    if (!(c > 0.0)) throw DomainError("region_boundary: c must be positive");
    return 1.0 - c / log_conductor_param(f, t);
}

void check_degree_vs_conductor(const LFunctionInstance& f) {
    double lq = std::log(analytic_conductor(f));
    if (!(static_cast<double>(f.degree) < lq))
        throw GateError("instance '" + f.name + "' violates d < log q(f): degree " +
                        std::to_string(f.degree) + " vs log conductor " + std::to_string(lq));
}

}  // namespace zfr
