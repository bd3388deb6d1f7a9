#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "zfr/arith.hpp"
#include "zfr/errors.hpp"
#include "zfr/lfunction.hpp"

using namespace zfr;
using Complex = std::complex<double>;

namespace {

LFunctionInstance zeta_chi4() { return make_dedekind_quadratic(-4, "zeta_chi4"); }

LFunctionInstance chi4_alone() {
    return make_dirichlet_l(kronecker_character(-4), "chi4_alone");
}

// lambda values of zeta(s) L(s,chi) by direct divisor-sum convolution,
// straight from character values
std::vector<Complex> product_lambda_table(const DirichletCharacter& chi, std::int64_t n_max) {
    std::vector<Complex> lam(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
    lam[1] = 1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Complex acc{0.0, 0.0};
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) acc += chi(d);
        lam[static_cast<std::size_t>(n)] = acc;
    }
    return lam;
}

}  // namespace

TEST_CASE("log-series coefficients at prime powers and composites") {
    auto zeta = make_zeta();
    CHECK(lambda_coeff(zeta, 8).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(lambda_coeff(zeta, 6) == Complex{0.0, 0.0});
    CHECK(lambda_coeff(zeta, 1) == Complex{0.0, 0.0});

    // zeta * chi_{-4} at n = 3: log3 + chi(3) log3 = 0
    auto f = zeta_chi4();
    CHECK(std::abs(lambda_coeff(f, 3)) < 1e-15);
    CHECK(lambda_coeff(f, 5).real() == doctest::Approx(2.0 * std::log(5.0)).epsilon(1e-15));
}

TEST_CASE("log-series coefficients vs the series-inversion oracle") {
    // recover Lambda from the convolved lambda table independently
    auto chi = kronecker_character(-4);
    const std::int64_t n_max = 500;
    auto lam = product_lambda_table(chi, n_max);
    auto big = oracles::dirichlet_log(lam, n_max);
    auto f = zeta_chi4();
    for (std::int64_t n = 2; n <= n_max; ++n)
        CHECK(std::abs(lambda_coeff(f, n) - big[static_cast<std::size_t>(n)]) < 1e-10);
}

TEST_CASE("Dirichlet coefficients: direct values and convolution") {
    auto zeta = make_zeta();
    for (std::int64_t n : {1, 2, 17, 360}) CHECK(dirichlet_coeff(zeta, n) == Complex{1.0, 0.0});

    auto chi_inst = chi4_alone();
    CHECK(dirichlet_coeff(chi_inst, 5) == Complex{1.0, 0.0});
    CHECK(dirichlet_coeff(chi_inst, 3) == Complex{-1.0, 0.0});

    auto f = zeta_chi4();
    CHECK(dirichlet_coeff(f, 5).real() == doctest::Approx(2.0).epsilon(1e-15));
    // against the direct convolution table
    auto lam = product_lambda_table(kronecker_character(-4), 200);
    for (std::int64_t n = 1; n <= 200; ++n)
        CHECK(std::abs(dirichlet_coeff(f, n) - lam[static_cast<std::size_t>(n)]) < 1e-12);
}

TEST_CASE("Gaussian lattice points reproduce the quadratic product coefficients") {
    // #{(a,b) in Z^2 : a^2 + b^2 = n} = 4 sum_{d|n} chi_{-4}(d), so counting
    // lattice points on circles is a fully independent coefficient oracle
    auto f = zeta_chi4();
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::int64_t count = 0;
        std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
        for (std::int64_t a = -r; a <= r; ++a)
            for (std::int64_t b = -r; b <= r; ++b)
                if (a * a + b * b == n) ++count;
        CHECK(std::abs(dirichlet_coeff(f, n).real() - static_cast<double>(count) / 4.0) < 1e-12);
    }
}

TEST_CASE("exp/log consistency of the coefficient streams") {
    // Dirichlet-series exp of {Lambda_f(n)} reproduces dirichlet_coeff
    for (auto f : {make_zeta(), zeta_chi4(), make_dedekind_quadratic(5, "zeta_chi5")}) {
        const std::int64_t n_max = 1000;
        std::vector<Complex> big(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
        for (std::int64_t n = 2; n <= n_max; ++n) big[static_cast<std::size_t>(n)] = lambda_coeff(f, n);
        auto lam = oracles::dirichlet_exp(big, n_max);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            Complex direct = dirichlet_coeff(f, n);
            double scale = std::max(1.0, std::abs(direct));
            CHECK(std::abs(lam[static_cast<std::size_t>(n)] - direct) / scale < 1e-10);
        }
    }
}

TEST_CASE("class-axiom validation") {
    auto zeta = make_zeta();
    auto rep = validate_class_axioms(zeta, 1000);
    CHECK(rep.bound_ok);
    CHECK(rep.nonnegative);
    CHECK(rep.kappas_ok);
    CHECK(rep.passes());

    auto alone = validate_class_axioms(chi4_alone(), 1000);
    CHECK(alone.bound_ok);
    CHECK_FALSE(alone.nonnegative);  // Re chi(3) Lambda(3) < 0 already
    CHECK(lambda_coeff(chi4_alone(), 3).real() < 0.0);
    CHECK(alone.min_re_lambda < -1.0);  // the worst witness is some prime == 3 mod 4

    auto prod = validate_class_axioms(zeta_chi4(), 1000);
    CHECK(prod.nonnegative);  // Lambda(n)(1 + Re chi(n)) >= 0
    CHECK(prod.passes());

    CHECK_THROWS_AS(validate_class_axioms(zeta, 1), DomainError);
}

TEST_CASE("coefficient bound holds on the catalog to 1e4") {
    for (auto f : {make_zeta(), zeta_chi4(), make_dedekind_quadratic(5, "")}) {
        double d = static_cast<double>(f.degree);
        for (std::int64_t n = 2; n <= 10000; ++n) {
            double bound = d * static_cast<double>(n) * std::log(static_cast<double>(n));
            CHECK(std::abs(lambda_coeff(f, n)) <= bound + 1e-9);
        }
    }
}

TEST_CASE("analytic conductor at and away from the center") {
    auto zeta = make_zeta();
    CHECK(analytic_conductor(zeta) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(analytic_conductor(zeta_chi4()) == doctest::Approx(48.0).epsilon(1e-15));

    LFunctionInstance f;
    f.name = "kappa_i";
    f.degree = 1;
    f.conductor = 1;
    f.kappas = {LanglandsParameter{{0.0, 1.0}}};
    f.pole_order = 0;
    f.coeff_source = zeta_source();
    CHECK(analytic_conductor(f) == doctest::Approx(4.0).epsilon(1e-15));

    CHECK(analytic_conductor_at(zeta, {0.0, 0.0}) == analytic_conductor(zeta));
    CHECK(analytic_conductor_at(zeta, {0.0, 2.0}) == doctest::Approx(5.0).epsilon(1e-15));

    // conductor bound q(f,s) <= q(f) (|s|+3)^d on random s
    oracles::Rng rng(0x5eed);
    for (auto g : {make_zeta(), zeta_chi4()}) {
        for (int i = 0; i < 1000; ++i) {
            Complex s{rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
            if (std::abs(s) > 20.0) continue;
            double bound = analytic_conductor(g) *
                           std::pow(std::abs(s) + 3.0, static_cast<double>(g.degree));
            CHECK(analytic_conductor_at(g, s) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("product additivity of log coefficients") {
    auto f = make_dedekind_quadratic(5, "");
    auto zeta = make_zeta();
    auto chi_inst = make_dirichlet_l(kronecker_character(5), "");
    for (std::int64_t n : {2, 3, 4, 5, 9, 25, 32, 49, 121, 128}) {
        Complex sum = lambda_coeff(zeta, n) + lambda_coeff(chi_inst, n);
        CHECK(std::abs(lambda_coeff(f, n) - sum) < 1e-13);
    }
}

TEST_CASE("satake tables: symmetric functions, availability, admissibility") {
    SatakeSource table;
    table.degree = 2;
    Complex a{0.5, 0.25}, b{-0.25, 0.125};
    table.primes[2] = {a, b};
    table.primes[3] = {Complex{1.0, 0.0}, Complex{-1.0, 0.0}};
    LFunctionInstance f;
    f.name = "satake_test";
    f.degree = 2;
    f.conductor = 11;
    f.kappas = {LanglandsParameter{{0.0, 0.0}}, LanglandsParameter{{0.5, 0.0}}};
    f.pole_order = 0;
    f.coeff_source = satake_source(table);

    CHECK(std::abs(dirichlet_coeff(f, 2) - (a + b)) < 1e-15);
    CHECK(std::abs(dirichlet_coeff(f, 4) - (a * a + a * b + b * b)) < 1e-15);
    CHECK(std::abs(lambda_coeff(f, 4) - (a * a + b * b) * std::log(2.0)) < 1e-15);
    // multiplicativity across table primes
    CHECK(std::abs(dirichlet_coeff(f, 6) - dirichlet_coeff(f, 2) * dirichlet_coeff(f, 3)) <
          1e-15);
    CHECK(std::abs(lambda_coeff(f, 6)) < 1e-15);  // not a prime power

    CHECK_THROWS_AS(lambda_coeff(f, 5), CoefficientUnavailable);
    CHECK_THROWS_AS(dirichlet_coeff(f, 10), CoefficientUnavailable);
    try {
        lambda_coeff(f, 25);
    } catch (const CoefficientUnavailable& e) {
        CHECK(e.n == 25);
    }

    // |alpha| > p rejected outright
    SatakeSource bad;
    bad.degree = 1;
    bad.primes[2] = {Complex{2.5, 0.0}};
    CHECK_THROWS_AS(satake_source(bad), DomainError);

    // coverage-limited validation reports the first unavailable n
    auto rep = validate_class_axioms(f, 100);
    CHECK(rep.coverage_limited_at.has_value());
    CHECK(*rep.coverage_limited_at == 5);
    CHECK(coeff_growth(f.coeff_source) == CoeffGrowth::ClassAxiom);
    CHECK(coeff_growth(make_zeta().coeff_source) == CoeffGrowth::VonMangoldt);
}

TEST_CASE("real-coefficient detection") {
    CHECK(is_real_coefficient(make_zeta().coeff_source));
    CHECK(is_real_coefficient(zeta_chi4().coeff_source));
    auto c5 = characters_mod(5);
    bool found_complex = false;
    for (const auto& chi : c5) {
        if (chi.is_real()) continue;
        found_complex = true;
        CHECK_FALSE(is_real_coefficient(char_source(chi)));
    }
    CHECK(found_complex);

    SatakeSource conj_pair;
    conj_pair.degree = 2;
    conj_pair.primes[2] = {Complex{0.3, 0.4}, Complex{0.3, -0.4}};
    CHECK(is_real_coefficient(satake_source(conj_pair)));
    SatakeSource lopsided;
    lopsided.degree = 2;
    lopsided.primes[2] = {Complex{0.3, 0.4}, Complex{0.3, 0.4}};
    CHECK_FALSE(is_real_coefficient(satake_source(lopsided)));
}

TEST_CASE("catalog construction guards") {
    auto principal = characters_mod(4)[0];
    REQUIRE(principal.is_principal());
    CHECK_THROWS_AS(make_zeta_times_chi(principal, ""), DomainError);
    CHECK_THROWS_AS(make_dedekind_quadratic(1, ""), DomainError);
    CHECK_THROWS_AS(make_dedekind_quadratic(9, ""), DomainError);
    CHECK_NOTHROW(make_dedekind_quadratic(12, ""));  // Q(sqrt 3), discriminant 12

    auto f = make_dedekind_quadratic(-4, "");
    CHECK(f.conductor == 4);
    CHECK(f.degree == 2);
    CHECK(f.pole_order == 1);
    CHECK(f.kappas[1].kappa.real() == doctest::Approx(1.0));  // chi_{-4} is odd

    auto g = make_dedekind_quadratic(5, "");
    CHECK(g.kappas[1].kappa.real() == doctest::Approx(0.0));  // chi_5 is even
}
