#pragma once

// Numerical evaluation of L(f,s), L'(f,s) and L'/L(f,s) on the strip
// -1 < Re(s) <= 4, built on Euler-Maclaurin continuation of the Hurwitz
// zeta function with a tracked truncation target.

#include <complex>
#include <functional>

#include "zfr/lfunction.hpp"

namespace zfr {

struct EvalConfig {
    int em_order = 8;                 // Bernoulli correction terms (2..20)
    int series_terms = 1 << 21;       // cap on the Euler-Maclaurin main sum
    double target_abs_error = 1e-10;  // absolute truncation target (>= 1e-14)
    double derivative_radius = 0.05;  // Cauchy-circle radius for cross-checks

    void validate() const;            // DomainError when out of range
};

// B_{2k} for k = 1..20.
double bernoulli_2k(int k);

// zeta(s, a) for Re(s) > -1, s != 1, a > 0 (a > 1 reduced by forward
// recurrence into (0,1]). Absolute error targeted at cfg.target_abs_error.
std::complex<double> hurwitz_zeta(std::complex<double> s, double a, const EvalConfig& cfg = {});

// zeta(s, a) - 1/(s-1): entire in the supported strip, finite at s = 1.
// This is the evaluation backbone; nonprincipal Dirichlet L-values sum it
// directly so the character sum cancels the pole term exactly.
std::complex<double> hurwitz_zeta_deflated(std::complex<double> s, double a,
                                           const EvalConfig& cfg = {});

// d/ds of the two functions above (same Euler-Maclaurin machinery,
// differentiated term by term).
std::complex<double> hurwitz_zeta_ds(std::complex<double> s, double a, const EvalConfig& cfg = {});
std::complex<double> hurwitz_zeta_deflated_ds(std::complex<double> s, double a,
                                              const EvalConfig& cfg = {});

// Principal branch log Gamma(z), Re(z) > 0: Stirling with 10 asymptotic
// terms after recursing into Re(z) >= 10. Used for completed-L diagnostics.
std::complex<double> log_gamma(std::complex<double> z);

// log of the archimedean factor prod_j pi^{-(s+kappa_j)/2} Gamma((s+kappa_j)/2).
// Requires Re(s + kappa_j) > 0 for every parameter.
std::complex<double> log_gamma_factor(const LFunctionInstance& f, std::complex<double> s);

// L(f,s). Zeta/Dirichlet/Product instances anywhere in the strip; Satake
// instances only where the class coefficient bound certifies the
// truncation (see docs on satake evaluation). Throws PoleError at s = 1
// when pole_order >= 1.
std::complex<double> l_value(const LFunctionInstance& f, std::complex<double> s,
                             const EvalConfig& cfg = {});

// L'(f,s) by analytic differentiation of the same representations.
std::complex<double> l_deriv(const LFunctionInstance& f, std::complex<double> s,
                             const EvalConfig& cfg = {});

// L'/L(f,s). For Re(s) >= 3 on von-Mangoldt-type sources this is the
// truncated series -sum Lambda_f(n) n^-s with a certified tail bound;
// otherwise L'(s)/L(s). Throws SingularNeighborhood when |L(s)| is below
// 10 * target_abs_error and PoleError at the pole.
std::complex<double> log_deriv(const LFunctionInstance& f, std::complex<double> s,
                               const EvalConfig& cfg = {});

// Derivative of an analytic callable by the trapezoid rule on a circle
// (64 points, doubling until two refinements agree within tol). The
// callable must be analytic on the closed disk.
std::complex<double> cauchy_derivative(
    const std::function<std::complex<double>(std::complex<double>)>& fn, std::complex<double> s,
    double radius, double tol, int max_points = 4096);

}  // namespace zfr
