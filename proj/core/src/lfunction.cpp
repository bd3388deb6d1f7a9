#include "zfr/lfunction.hpp"

#include <cmath>
#include <string>

#include "zfr/arith.hpp"
#include "zfr/errors.hpp"

namespace zfr {

namespace {

using Complex = std::complex<double>;

const std::vector<Complex>& satake_at(const SatakeSource& sat, std::int64_t p, std::int64_t n) {
    auto it = sat.primes.find(p);
    if (it == sat.primes.end())
        throw CoefficientUnavailable(
            "coefficient unavailable: Satake table has no entry for prime " + std::to_string(p) +
                " (needed for n = " + std::to_string(n) + ")",
            n);
    return it->second;
}

// sum_j alpha_j^k
Complex power_sum(const std::vector<Complex>& alphas, int k) {
    Complex s{0.0, 0.0};
    for (const auto& a : alphas) {
        Complex ak{1.0, 0.0};
        for (int i = 0; i < k; ++i) ak *= a;
        s += ak;
    }
    return s;
}

// complete homogeneous symmetric polynomial h_k(alphas) by Newton's identity
Complex complete_homogeneous(const std::vector<Complex>& alphas, int k) {
    std::vector<Complex> h(static_cast<std::size_t>(k) + 1, Complex{0.0, 0.0});
    h[0] = {1.0, 0.0};
    for (int m = 1; m <= k; ++m) {
        Complex acc{0.0, 0.0};
        for (int j = 1; j <= m; ++j) acc += power_sum(alphas, j) * h[static_cast<std::size_t>(m - j)];
        h[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
    }
    return h[static_cast<std::size_t>(k)];
}

Complex lambda_coeff_src(const CoefficientSource& src, std::int64_t n);

Complex dirichlet_coeff_src(const CoefficientSource& src, std::int64_t n) {
    return std::visit(
        [&](const auto& node) -> Complex {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZetaSource>) {
                return {1.0, 0.0};
            } else if constexpr (std::is_same_v<T, CharSource>) {
                return node.chi(n);
            } else if constexpr (std::is_same_v<T, ProductSource>) {
                if (node.factors.empty()) return n == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                if (node.factors.size() == 1) return dirichlet_coeff_src(node.factors[0], n);
                // Dirichlet convolution of the first factor with the rest
                ProductSource rest{std::vector<CoefficientSource>(node.factors.begin() + 1,
                                                                  node.factors.end())};
                CoefficientSource rest_src{rest};
                Complex acc{0.0, 0.0};
                for (std::int64_t d : arith::divisors(n))
                    acc += dirichlet_coeff_src(node.factors[0], d) *
                           dirichlet_coeff_src(rest_src, n / d);
                return acc;
            } else {  // SatakeSource
                if (n == 1) return {1.0, 0.0};
                Complex acc{1.0, 0.0};
                for (auto [p, k] : arith::factorize(n))
                    acc *= complete_homogeneous(satake_at(node, p, n), k);
                return acc;
            }
        },
        src.node);
}

Complex lambda_coeff_src(const CoefficientSource& src, std::int64_t n) {
    return std::visit(
        [&](const auto& node) -> Complex {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZetaSource>) {
                return {arith::von_mangoldt(n), 0.0};
            } else if constexpr (std::is_same_v<T, CharSource>) {
                double vm = arith::von_mangoldt(n);
                if (vm == 0.0) return {0.0, 0.0};
                return node.chi(n) * vm;
            } else if constexpr (std::is_same_v<T, ProductSource>) {
                Complex acc{0.0, 0.0};
                for (const auto& f : node.factors) acc += lambda_coeff_src(f, n);
                return acc;
            } else {  // SatakeSource
                auto [p, k] = arith::prime_power_split(n);
                if (p == 0) return {0.0, 0.0};
                return power_sum(satake_at(node, p, n), k) * std::log(static_cast<double>(p));
            }
        },
        src.node);
}

}  // namespace

CoefficientSource zeta_source() { return CoefficientSource{ZetaSource{}}; }

CoefficientSource char_source(DirichletCharacter chi, std::optional<std::int64_t> kronecker_disc) {
    return CoefficientSource{CharSource{std::move(chi), kronecker_disc}};
}

CoefficientSource product_source(std::vector<CoefficientSource> factors) {
    return CoefficientSource{ProductSource{std::move(factors)}};
}

CoefficientSource satake_source(SatakeSource table) {
    for (const auto& [p, alphas] : table.primes) {
        if (!arith::is_prime(p))
            throw DomainError("satake_source: table key " + std::to_string(p) + " is not prime");
        if (static_cast<int>(alphas.size()) != table.degree)
            throw DomainError("satake_source: prime " + std::to_string(p) + " lists " +
                              std::to_string(alphas.size()) + " parameters, expected degree " +
                              std::to_string(table.degree));
        for (const auto& a : alphas)
            if (std::abs(a) > static_cast<double>(p) * (1.0 + 1e-12))
                throw DomainError("satake_source: |alpha(p)| > p at prime " + std::to_string(p));
    }
    return CoefficientSource{std::move(table)};
}

int source_degree(const CoefficientSource& src) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZetaSource>) return 1;
            else if constexpr (std::is_same_v<T, CharSource>) return 1;
            else if constexpr (std::is_same_v<T, ProductSource>) {
                int d = 0;
                for (const auto& f : node.factors) d += source_degree(f);
                return d;
            } else {
                return node.degree;
            }
        },
        src.node);
}

bool is_real_coefficient(const CoefficientSource& src) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZetaSource>) return true;
            else if constexpr (std::is_same_v<T, CharSource>) return node.chi.is_real();
            else if constexpr (std::is_same_v<T, ProductSource>) {
                for (const auto& f : node.factors)
                    if (!is_real_coefficient(f)) return false;
                return true;
            } else {
                // real iff each prime's parameter multiset is closed under conjugation
                for (const auto& [p, alphas] : node.primes) {
                    std::vector<bool> used(alphas.size(), false);
                    for (const auto& a : alphas) {
                        bool found = false;
                        for (std::size_t j = 0; j < alphas.size(); ++j) {
                            if (used[j]) continue;
                            if (std::abs(alphas[j] - std::conj(a)) < 1e-12) {
                                used[j] = true;
                                found = true;
                                break;
                            }
                        }
                        if (!found) return false;
                    }
                }
                return true;
            }
        },
        src.node);
}

CoeffGrowth coeff_growth(const CoefficientSource& src) {
    return std::visit(
        [](const auto& node) -> CoeffGrowth {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ProductSource>) {
                for (const auto& f : node.factors)
                    if (coeff_growth(f) == CoeffGrowth::ClassAxiom) return CoeffGrowth::ClassAxiom;
                return CoeffGrowth::VonMangoldt;
            } else if constexpr (std::is_same_v<T, SatakeSource>) {
                return CoeffGrowth::ClassAxiom;
            } else {
                return CoeffGrowth::VonMangoldt;
            }
        },
        src.node);
}

std::complex<double> lambda_coeff(const LFunctionInstance& f, std::int64_t n) {
    if (n < 1) throw DomainError("lambda_coeff: n must be positive");
    if (n == 1) return {0.0, 0.0};  // Lambda_f(1) = 0 by convention
    return lambda_coeff_src(f.coeff_source, n);
}

std::complex<double> dirichlet_coeff(const LFunctionInstance& f, std::int64_t n) {
    if (n < 1) throw DomainError("dirichlet_coeff: n must be positive");
    return dirichlet_coeff_src(f.coeff_source, n);
}

double analytic_conductor(const LFunctionInstance& f) {
    double q = static_cast<double>(f.conductor);
    for (const auto& k : f.kappas) q *= std::abs(k.kappa) + 3.0;
    return q;
}

double analytic_conductor_at(const LFunctionInstance& f, std::complex<double> s) {
    double q = static_cast<double>(f.conductor);
    for (const auto& k : f.kappas) q *= std::abs(k.kappa + s) + 3.0;
    return q;
}

ValidationReport validate_class_axioms(const LFunctionInstance& f, std::int64_t n_max) {
    if (n_max < 2) throw DomainError("validate_class_axioms: N must be >= 2");
    ValidationReport rep;
    rep.n_max = n_max;
    rep.min_re_lambda = 0.0;
    rep.min_re_at = 1;

    for (const auto& k : f.kappas)
        if (!(k.kappa.real() > -1.0)) rep.kappas_ok = false;
    rep.pole_order_ok = (f.pole_order == 0 || f.pole_order == 1);
    rep.degree_ok = (static_cast<int>(f.kappas.size()) == f.degree) &&
                    (source_degree(f.coeff_source) == f.degree);

    double d = static_cast<double>(f.degree);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        std::complex<double> lam;
        try {
            lam = lambda_coeff(f, n);
        } catch (const CoefficientUnavailable&) {
            rep.coverage_limited_at = n;
            break;
        }
        if (std::abs(lam) > d * static_cast<double>(n) * std::log(static_cast<double>(n)) + 1e-9) {
            rep.bound_ok = false;
            if (rep.bound_violations.size() < 10) rep.bound_violations.push_back(n);
        }
        if (lam.real() < rep.min_re_lambda) {
            rep.min_re_lambda = lam.real();
            rep.min_re_at = n;
        }
    }
    rep.nonnegative = rep.min_re_lambda >= -kNonnegTolerance;
    return rep;
}

LFunctionInstance make_zeta() {
    LFunctionInstance f;
    f.name = "zeta";
    f.degree = 1;
    f.conductor = 1;
    f.kappas = {LanglandsParameter{{0.0, 0.0}}};
    f.pole_order = 1;
    f.root_number = {1.0, 0.0};
    f.coeff_source = zeta_source();
    return f;
}

namespace {
int parity_kappa(const DirichletCharacter& chi) { return chi.is_even() ? 0 : 1; }
}  // namespace

LFunctionInstance make_dirichlet_l(const DirichletCharacter& chi, std::string name) {
    LFunctionInstance f;
    f.name = name.empty() ? ("dirichlet_mod" + std::to_string(chi.modulus())) : std::move(name);
    f.degree = 1;
    f.conductor = conductor_of(chi);
    f.kappas = {LanglandsParameter{{static_cast<double>(parity_kappa(chi)), 0.0}}};
    f.pole_order = chi.is_principal() ? 1 : 0;
    f.root_number = {1.0, 0.0};
    f.coeff_source = char_source(chi);
    return f;
}

LFunctionInstance make_zeta_times_chi(const DirichletCharacter& chi, std::string name) {
    if (chi.is_principal())
        throw DomainError("make_zeta_times_chi: chi must be nonprincipal (pole order would exceed 1)");
    LFunctionInstance f;
    f.name = name.empty() ? ("zeta_chi_mod" + std::to_string(chi.modulus())) : std::move(name);
    f.degree = 2;
    f.conductor = conductor_of(chi);
    f.kappas = {LanglandsParameter{{0.0, 0.0}},
                LanglandsParameter{{static_cast<double>(parity_kappa(chi)), 0.0}}};
    f.pole_order = 1;
    f.root_number = {1.0, 0.0};
    f.coeff_source = product_source({zeta_source(), char_source(chi)});
    return f;
}

LFunctionInstance make_dedekind_quadratic(std::int64_t d, std::string name) {
    if (d == 1 || !arith::is_fundamental_discriminant(d))
        throw DomainError("make_dedekind_quadratic: D must be a fundamental discriminant != 1");
    auto chi = kronecker_character(d);
    LFunctionInstance f;
    f.name = name.empty() ? ("dedekind_disc" + std::to_string(d)) : std::move(name);
    f.degree = 2;
    f.conductor = d < 0 ? -d : d;
    f.kappas = {LanglandsParameter{{0.0, 0.0}},
                LanglandsParameter{{static_cast<double>(parity_kappa(chi)), 0.0}}};
    f.pole_order = 1;
    f.root_number = {1.0, 0.0};
    f.coeff_source = product_source({zeta_source(), char_source(chi, d)});
    return f;
}

}  // namespace zfr
