#pragma once

// The axiomatic L-function class: an instance carries degree, conductor,
// Langlands parameters, pole order, a (stored, unused) root number and a
// coefficient source producing the Dirichlet-series data lambda_f(n) and
// the log-series data Lambda_f(n) exactly.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zfr/dirichlet.hpp"

namespace zfr {

struct LanglandsParameter {
    std::complex<double> kappa;
};

struct CoefficientSource;

struct ZetaSource {};

struct CharSource {
    DirichletCharacter chi;
    // set when constructed from {"type":"kronecker"}; preserved on re-serialization
    std::optional<std::int64_t> kronecker_disc;
};

struct ProductSource {
    std::vector<CoefficientSource> factors;
};

struct SatakeSource {
    // prime -> Satake parameters alpha_1(p)..alpha_d(p); |alpha_j(p)| <= p
    std::map<std::int64_t, std::vector<std::complex<double>>> primes;
    int degree = 0;
};

struct CoefficientSource {
    std::variant<ZetaSource, CharSource, ProductSource, SatakeSource> node;
};

CoefficientSource zeta_source();
CoefficientSource char_source(DirichletCharacter chi,
                              std::optional<std::int64_t> kronecker_disc = std::nullopt);
CoefficientSource product_source(std::vector<CoefficientSource> factors);
CoefficientSource satake_source(SatakeSource table);

// Degree the source imposes (zeta/char 1, product additive, satake d).
int source_degree(const CoefficientSource& src);

// True when every lambda_f(n) is real: conjugate symmetry then applies.
bool is_real_coefficient(const CoefficientSource& src);

// Truncation-bound class: von-Mangoldt-type sources obey the sharp
// |Lambda_f(n)| <= d log n, a Satake table only the class |Lambda_f(n)| <= d n log n.
enum class CoeffGrowth { VonMangoldt, ClassAxiom };
CoeffGrowth coeff_growth(const CoefficientSource& src);

struct LFunctionInstance {
    std::string name;
    int degree = 1;
    std::int64_t conductor = 1;                  // q(f)
    std::vector<LanglandsParameter> kappas;      // length == degree
    int pole_order = 0;                          // r in {0, 1}
    std::complex<double> root_number{1.0, 0.0};  // epsilon_f, stored but unused
    CoefficientSource coeff_source;
};

// Lambda_f(n): coefficients of log L(f,s) = sum Lambda_f(n)/(n^s log n).
// Lambda_f(1) = 0; zero off prime powers for primitive sources.
// Throws CoefficientUnavailable for out-of-table Satake primes.
std::complex<double> lambda_coeff(const LFunctionInstance& f, std::int64_t n);

// lambda_f(n): Dirichlet-series coefficients of L itself.
std::complex<double> dirichlet_coeff(const LFunctionInstance& f, std::int64_t n);

// q(f) * prod_j (|kappa_j| + 3)
double analytic_conductor(const LFunctionInstance& f);

// q(f) * prod_j (|kappa_j + s| + 3); agrees with analytic_conductor at s = 0
// and is bounded by q(f)*(|s|+3)^degree times it.
double analytic_conductor_at(const LFunctionInstance& f, std::complex<double> s);

struct ValidationReport {
    std::int64_t n_max = 0;
    bool bound_ok = true;                     // |Lambda_f(n)| <= d n log n
    std::vector<std::int64_t> bound_violations;  // first few offenders
    bool nonnegative = true;                  // Re Lambda_f(n) >= -1e-12
    double min_re_lambda = 0.0;
    std::int64_t min_re_at = 0;
    bool kappas_ok = true;                    // Re kappa_j > -1
    bool pole_order_ok = true;                // r in {0,1}
    bool degree_ok = true;                    // kappas/degree/source consistent
    std::optional<std::int64_t> coverage_limited_at;  // coefficients ran out here

    bool admissible() const { return bound_ok && kappas_ok && pole_order_ok && degree_ok; }
    bool passes() const { return admissible() && nonnegative; }
};

// Checks |Lambda_f(n)| <= d n log n and the nonnegativity flag for
// 2 <= n <= N, plus the Re(kappa) > -1 and pole-order hypotheses.
// Failures are carried in the report, never thrown.
ValidationReport validate_class_axioms(const LFunctionInstance& f, std::int64_t n_max);

// Nonnegativity tolerance used by the validation gate.
inline constexpr double kNonnegTolerance = 1e-12;

// --- catalog -------------------------------------------------------------

LFunctionInstance make_zeta();

// Standalone L(s,chi); pole_order 1 only when chi is principal.
LFunctionInstance make_dirichlet_l(const DirichletCharacter& chi, std::string name = {});

// zeta(s) * L(s,chi), the Example-1 product with nonnegative log coefficients.
LFunctionInstance make_zeta_times_chi(const DirichletCharacter& chi, std::string name = {});

// Dedekind zeta of the quadratic field of fundamental discriminant D,
// realized as zeta(s) * L(s, chi_D); conductor |D|.
LFunctionInstance make_dedekind_quadratic(std::int64_t d, std::string name = {});

}  // namespace zfr
