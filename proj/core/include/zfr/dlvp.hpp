#pragma once

// The proof chain as checkable computation: the 3-4-1 trigonometric
// kernel, the twisted log coefficients Lambda_g, the combined
// log-derivative inequality, explicit-formula residuals with their term
// positivity, the two beta-bound branches, and the exceptional-zero count.

#include <complex>
#include <cstdint>
#include <vector>

#include "zfr/eval.hpp"
#include "zfr/lfunction.hpp"

namespace zfr {

// A, B are the absolute constants of the two explicit-formula estimates;
// they are implied constants in the source material, so they are
// configurable here and every bound is reported as a function of them.
// L is the size parameter log(q(f) (|gamma|+3)^d), set per instance and
// ordinate by proof_constants_for.
struct ProofConstants {
    double A = 10.5;   // must exceed 10
    double B = 10.5;   // must be positive
    double c2 = 0.05;  // exceptional-segment constant
    double L = 0.0;    // log(q(f) (|gamma|+3)^d) for the case at hand

    double C() const { return A > B ? A : B; }
    double c() const;  // min{ 1/(400 C), c2 }
    void validate() const;
};

// Constants with L filled in for (f, gamma).
ProofConstants proof_constants_for(const LFunctionInstance& f, double gamma,
                                   ProofConstants base = {});

// log(q(f) (|gamma|+3)^d)
double log_conductor_param(const LFunctionInstance& f, double gamma);

// 3 + 4 cos(theta) + cos(2 theta) = 2 (1 + cos theta)^2
double trig_kernel(double theta);

// Lambda_g(n) = |1 + n^{-i gamma}|^4 Lambda_f(n)
std::complex<double> lambda_g(const LFunctionInstance& f, std::int64_t n, double gamma);

enum class BetaBranch { GenericOrLargeGamma, PoleSmallGamma, RealZeroSegment };

struct DlvpReport {
    double sigma = 0.0;
    double gamma = 0.0;
    double re_ld_0 = 0.0;  // Re L'/L(f, sigma)
    double re_ld_1 = 0.0;  // Re L'/L(f, sigma + i gamma)
    double re_ld_2 = 0.0;  // Re L'/L(f, sigma + 2 i gamma)
    double combination = 0.0;  // -6 re_ld_0 - 8 re_ld_1 - 2 re_ld_2
    bool nonneg = false;       // combination >= -1e-6
    BetaBranch branch = BetaBranch::GenericOrLargeGamma;
    double beta_bound = 0.0;
    double log_conductor = 0.0;  // log(q(f) (|gamma|+3)^d) used for the bound
    bool branch_filled = false;
};

// Numerical slack absorbing evaluation error in the combination check.
inline constexpr double kDlvpSlack = 1e-6;

// Evaluates the three log-derivatives at sigma, sigma + i gamma,
// sigma + 2 i gamma and assembles the combined inequality left side.
// Requires sigma in (1, 2]; the certification path stays within (1, 1.25].
DlvpReport dlvp_combination(const LFunctionInstance& f, double sigma, double gamma,
                            const EvalConfig& cfg = {});

// Fills branch and beta_bound on a report from the configured constants.
void attach_beta_bound(DlvpReport& rep, const LFunctionInstance& f, const ProofConstants& base);

struct BetaBoundResult {
    BetaBranch branch;
    double bound;
    bool strict;  // bound is a strict upper bound on beta in the generic branch
};

// Branch predicate: r = 0 or |gamma| > 1/(5 A L) gives the generic branch
// with 1 - 1/(400 A L); otherwise the pole branch with 1 - 1/(60 C L).
// gamma = 0 with r = 1 belongs to the real-zero segment logic and is
// rejected here.
BetaBoundResult beta_bound(int pole_order, double gamma, const ProofConstants& consts);

struct ExplicitFormulaTerm {
    std::complex<double> pole;  // kappa_j or rho
    std::complex<double> term;  // 1/(s + kappa_j) or 1/(s - rho)
    bool is_kappa;
};

struct ExplicitFormulaBreakdown {
    std::complex<double> log_deriv_value;
    std::complex<double> residual;
    double ratio = 0.0;  // |residual| / log q(f, s)
    std::vector<ExplicitFormulaTerm> terms;
};

// L'/L(f,s) + r/s + r/(s-1) - sum_{|s+kappa_j|<=window} 1/(s+kappa_j)
//                           - sum_{|s-rho|<=window} 1/(s-rho),
// returned as |residual| / log q(f,s). Requires Re(s) in [1, 5/4]; the
// default window is 1. The zero list must cover the window around s.
double explicit_formula_residual(const LFunctionInstance& f, std::complex<double> s,
                                 const std::vector<std::complex<double>>& zeros,
                                 const EvalConfig& cfg = {}, double window = 1.0,
                                 ExplicitFormulaBreakdown* breakdown = nullptr);

// Count of supplied real zeros inside [1 - c2/log q(f), 1); certification
// tolerates at most one.
int exceptional_zero_capacity(const LFunctionInstance& f, double c2,
                              const std::vector<double>& real_zeros);

// 1 - c / log(q(f) (|t|+3)^d)
double region_boundary(const LFunctionInstance& f, double c, double t);

// d < log q(f) must hold for certification; throws GateError otherwise.
void check_degree_vs_conductor(const LFunctionInstance& f);

}  // namespace zfr
