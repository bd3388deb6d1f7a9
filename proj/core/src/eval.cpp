#include "zfr/eval.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zfr/arith.hpp"
#include "zfr/errors.hpp"

namespace zfr {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-12;
constexpr double kStripMax = 4.25;  // public contract is Re(s) <= 4; slack for circles

// B_2 .. B_40
constexpr double kBernoulli2k[21] = {
    0.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

// B_{2k} / (2k)!  (the Euler-Maclaurin correction coefficients)
double bern_over_fact(int k) {
    static const auto table = [] {
        std::array<double, 21> t{};
        long double fact = 1.0L;  // (2k)!
        for (int i = 1; i <= 20; ++i) {
            fact *= (2.0L * i - 1.0L) * (2.0L * i);
            t[static_cast<std::size_t>(i)] =
                static_cast<double>(static_cast<long double>(kBernoulli2k[i]) / fact);
        }
        return t;
    }();
    return table[static_cast<std::size_t>(k)];
}

// (e^z - 1)/z, stable near z = 0.
Complex cphi(Complex z) {
    if (std::abs(z) < 0.5) {
        Complex acc{1.0, 0.0};
        Complex zk{1.0, 0.0};
        double fact = 1.0;
        for (int k = 1; k <= 16; ++k) {
            zk *= z;
            fact *= static_cast<double>(k + 1);
            acc += zk / fact;
        }
        return acc;
    }
    return (std::exp(z) - 1.0) / z;
}

// d/dz of cphi: (e^z (z - 1) + 1)/z^2, stable near z = 0.
Complex cphi_prime(Complex z) {
    if (std::abs(z) < 0.5) {
        // sum_{k>=1} k z^{k-1} / (k+1)!
        Complex acc{0.5, 0.0};
        Complex zk{1.0, 0.0};
        double fact = 2.0;  // (k+1)! at k = 1
        for (int k = 2; k <= 17; ++k) {
            zk *= z;
            fact *= static_cast<double>(k + 1);
            acc += static_cast<double>(k) * zk / fact;
        }
        return acc;
    }
    return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

struct EmResult {
    Complex value{0.0, 0.0};
    Complex ds{0.0, 0.0};
    double last_correction = 0.0;
};

// One Euler-Maclaurin pass at fixed N with M Bernoulli corrections.
// deflated: compute zeta(s,a) - 1/(s-1) instead of zeta(s,a).
EmResult em_pass(Complex s, double a, int n_terms, int m_order, bool want_ds, bool deflated) {
    EmResult r;
    Complex sum{0.0, 0.0}, dsum{0.0, 0.0};
    for (int n = 0; n < n_terms; ++n) {
        double x = static_cast<double>(n) + a;
        double lx = std::log(x);
        Complex e = std::exp(-s * lx);
        sum += e;
        if (want_ds) dsum -= lx * e;
    }
    double x = static_cast<double>(n_terms) + a;
    double lx = std::log(x);
    Complex p = std::exp(-s * lx);  // x^{-s}

    Complex t1, dt1;
    if (deflated) {
        // [x^{1-s} - 1]/(s-1) = -lx * phi((1-s) lx)
        Complex z = (1.0 - s) * lx;
        t1 = -lx * cphi(z);
        dt1 = (lx * lx) * cphi_prime(z);
    } else {
        t1 = p * x / (s - 1.0);
        dt1 = -t1 * (lx + 1.0 / (s - 1.0));
    }
    Complex t2 = 0.5 * p;
    Complex dt2 = -0.5 * lx * p;

    // corrections C_k * s(s+1)...(s+2k-2) * x^{-s-2k+1}
    Complex corr{0.0, 0.0}, dcorr{0.0, 0.0};
    Complex poch = s, dpoch{1.0, 0.0};
    Complex xpow = p / x;
    double inv_x2 = 1.0 / (x * x);
    for (int k = 1; k <= m_order; ++k) {
        double ck = bern_over_fact(k);
        Complex term = ck * poch * xpow;
        corr += term;
        if (want_ds) dcorr += ck * (dpoch - poch * lx) * xpow;
        r.last_correction = std::abs(term);
        if (k < m_order) {
            for (int j = 2 * k - 1; j <= 2 * k; ++j) {
                Complex f = s + static_cast<double>(j);
                dpoch = dpoch * f + poch;
                poch *= f;
            }
            xpow *= inv_x2;
        }
    }

    r.value = sum + t1 + t2 + corr;
    if (want_ds) r.ds = dsum + dt1 + dt2 + dcorr;
    return r;
}

// Dispatcher: domain checks, forward recurrence for a > 1, N doubling.
EmResult hurwitz_impl(Complex s, double a, const EvalConfig& cfg, bool want_ds, bool deflated) {
    cfg.validate();
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
    if (!(s.real() > -1.0))
        throw DomainError("hurwitz_zeta: supported range is Re(s) > -1");
    if (!deflated && std::abs(s - 1.0) < kPoleGuard)
        throw PoleError("hurwitz_zeta: s = 1 is the pole", 1);

    // zeta(s,a) = zeta(s, a-m) - sum_{j<m} (a-m+j)^{-s}, reducing a into (0,1]
    Complex head{0.0, 0.0}, dhead{0.0, 0.0};
    if (a > 1.0) {
        int m = static_cast<int>(std::ceil(a)) - 1;
        a -= static_cast<double>(m);
        for (int j = 0; j < m; ++j) {
            double x = a + static_cast<double>(j);
            double lx = std::log(x);
            Complex e = std::exp(-s * lx);
            head -= e;
            if (want_ds) dhead += lx * e;
        }
    }

    int n_terms = std::max(static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10, 50);
    for (;;) {
        EmResult r = em_pass(s, a, n_terms, cfg.em_order, want_ds, deflated);
        if (r.last_correction < cfg.target_abs_error / 10.0) {
            r.value += head;
            r.ds += dhead;
            return r;
        }
        if (2 * n_terms > cfg.series_terms)
            throw EvalError("hurwitz_zeta: main-sum cap reached before the truncation target; "
                            "raise series_terms or target_abs_error");
        n_terms *= 2;
    }
}

}  // namespace

void EvalConfig::validate() const {
    if (em_order < 2 || em_order > 20)
        throw DomainError("EvalConfig: em_order must lie in [2, 20]");
    if (!(target_abs_error >= 1e-14))
        throw DomainError("EvalConfig: target_abs_error must be >= 1e-14");
    if (!(derivative_radius > 0.0))
        throw DomainError("EvalConfig: derivative_radius must be positive");
    if (series_terms < 1024) throw DomainError("EvalConfig: series_terms must be >= 1024");
}

double bernoulli_2k(int k) {
    if (k < 1 || k > 20) throw DomainError("bernoulli_2k: k must lie in [1, 20]");
    return kBernoulli2k[k];
}

Complex hurwitz_zeta(Complex s, double a, const EvalConfig& cfg) {
    return hurwitz_impl(s, a, cfg, false, false).value;
}

Complex hurwitz_zeta_deflated(Complex s, double a, const EvalConfig& cfg) {
    return hurwitz_impl(s, a, cfg, false, true).value;
}

Complex hurwitz_zeta_ds(Complex s, double a, const EvalConfig& cfg) {
    return hurwitz_impl(s, a, cfg, true, false).ds;
}

Complex hurwitz_zeta_deflated_ds(Complex s, double a, const EvalConfig& cfg) {
    return hurwitz_impl(s, a, cfg, true, true).ds;
}

Complex log_gamma(Complex z) {
    if (!(z.real() > 0.0)) throw DomainError("log_gamma: requires Re(z) > 0");
    Complex shift{0.0, 0.0};
    while (z.real() < 10.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    Complex s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    Complex zpow = 1.0 / z;
    Complex z2 = zpow * zpow;
    for (int k = 1; k <= 10; ++k) {
        s += kBernoulli2k[k] / (2.0 * k * (2.0 * k - 1.0)) * zpow;
        zpow *= z2;
    }
    return s + shift;
}

Complex log_gamma_factor(const LFunctionInstance& f, Complex s) {
    Complex acc{0.0, 0.0};
    for (const auto& k : f.kappas) {
        Complex z = 0.5 * (s + k.kappa);
        if (!(z.real() > 0.0))
            throw DomainError("log_gamma_factor: requires Re(s + kappa_j) > 0");
        acc += log_gamma(z) - z * std::log(kPi);
    }
    return acc;
}

namespace {

// Value and derivative together; product sources chain by the product rule.
struct ValDer {
    Complex v{0.0, 0.0};
    Complex dv{0.0, 0.0};
};

ValDer eval_source(const CoefficientSource& src, Complex s, const EvalConfig& cfg, bool want_ds);

ValDer eval_char(const CharSource& node, Complex s, const EvalConfig& cfg, bool want_ds) {
    const auto& chi = node.chi;
    std::int64_t q = chi.modulus();
    if (q == 1 || chi.is_principal()) {
        // L(s, chi_0 mod q) = zeta(s) * prod_{p|q} (1 - p^{-s})
        EvalConfig local = cfg;
        local.target_abs_error = std::max(cfg.target_abs_error / 4.0, 1e-15);
        EmResult z = hurwitz_impl(s, 1.0, local, want_ds, true);
        ValDer out;
        out.v = z.value + 1.0 / (s - 1.0);
        if (want_ds) out.dv = z.ds - 1.0 / ((s - 1.0) * (s - 1.0));
        if (q > 1) {
            for (auto [p, e] : arith::factorize(q)) {
                (void)e;
                double lp = std::log(static_cast<double>(p));
                Complex pw = std::exp(-s * lp);
                Complex u = 1.0 - pw;
                Complex du = lp * pw;
                if (want_ds) out.dv = out.dv * u + out.v * du;
                out.v *= u;
            }
        }
        return out;
    }
    // nonprincipal: q^{-s} sum_a chi(a) [zeta(s, a/q) - 1/(s-1)]; the character
    // sum kills the pole term, so this is exact for every s in the strip.
    double sigma = s.real();
    double amplification = std::pow(static_cast<double>(q), std::max(0.0, -sigma));
    EvalConfig local = cfg;
    local.target_abs_error = std::max(
        cfg.target_abs_error / (static_cast<double>(q) * amplification * 2.0), 1e-15);
    Complex acc{0.0, 0.0}, dacc{0.0, 0.0};
    for (std::int64_t a = 1; a <= q; ++a) {
        Complex cv = chi(a);
        if (cv == Complex{0.0, 0.0}) continue;
        EmResult z = hurwitz_impl(s, static_cast<double>(a) / static_cast<double>(q), local,
                                  want_ds, true);
        acc += cv * z.value;
        if (want_ds) dacc += cv * z.ds;
    }
    double lq = std::log(static_cast<double>(q));
    Complex qs = std::exp(-s * lq);
    ValDer out;
    out.v = qs * acc;
    if (want_ds) out.dv = qs * (dacc - lq * acc);
    return out;
}

ValDer eval_satake(const SatakeSource& node, Complex s, const EvalConfig& cfg, bool want_ds) {
    double sigma = s.real();
    if (!(sigma > 1.0))
        throw DomainError("l_value: Satake sources are supported only for Re(s) > 1");
    if (!(sigma > 2.0))
        throw EvalError("l_value: the class bound |Lambda_f(n)| <= d n log n cannot certify "
                        "series truncation for Re(s) <= 2; evaluate Satake instances at Re(s) > 2");
    double d = static_cast<double>(node.degree);
    // |L| <= zeta(sigma - 1)^d-ish; keep a crude magnitude estimate for scaling
    double mag_est = std::pow(3.0, d);
    double target = cfg.target_abs_error / (2.0 * mag_est);
    // log-series tail over n > N: d * N^{2-sigma} (log N/(sigma-2) + 1/(sigma-2)^2) + edge
    std::int64_t n_cut = 64;
    auto tail = [&](double n) {
        double t = std::pow(n, 2.0 - sigma);
        double inv = 1.0 / (sigma - 2.0);
        return d * (t * (std::log(n) * inv + inv * inv) + std::pow(n, 1.0 - sigma) * std::log(n));
    };
    while (tail(static_cast<double>(n_cut)) > target) {
        n_cut *= 2;
        if (n_cut > (std::int64_t{1} << 26))
            throw EvalError("l_value: Satake truncation target unreachable at this Re(s)");
    }
    auto primes = arith::primes_up_to(static_cast<std::int32_t>(n_cut));
    for (auto p : primes)
        if (!node.primes.count(p))
            throw CoefficientUnavailable(
                "coefficient unavailable: Satake table must cover all primes up to " +
                    std::to_string(n_cut) + " but lacks " + std::to_string(p),
                p);
    Complex log_l{0.0, 0.0}, dlog_l{0.0, 0.0};
    for (auto p : primes) {
        const auto& alphas = node.primes.at(p);
        double lp = std::log(static_cast<double>(p));
        Complex w = std::exp(-s * lp);
        Complex wk = w;
        int kmax = static_cast<int>(std::log(static_cast<double>(n_cut)) / lp + 1e-9);
        for (int k = 1; k <= std::max(kmax, 1); ++k) {
            Complex ps{0.0, 0.0};
            for (const auto& a : alphas) {
                Complex ak{1.0, 0.0};
                for (int i = 0; i < k; ++i) ak *= a;
                ps += ak;
            }
            log_l += ps / static_cast<double>(k) * wk;
            if (want_ds) dlog_l -= ps * lp * wk;
            wk *= w;
        }
    }
    ValDer out;
    out.v = std::exp(log_l);
    if (want_ds) out.dv = out.v * dlog_l;
    return out;
}

ValDer eval_source(const CoefficientSource& src, Complex s, const EvalConfig& cfg, bool want_ds) {
    return std::visit(
        [&](const auto& node) -> ValDer {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZetaSource>) {
                EvalConfig local = cfg;
                local.target_abs_error = std::max(cfg.target_abs_error / 4.0, 1e-15);
                EmResult z = hurwitz_impl(s, 1.0, local, want_ds, true);
                ValDer out;
                out.v = z.value + 1.0 / (s - 1.0);
                if (want_ds) out.dv = z.ds - 1.0 / ((s - 1.0) * (s - 1.0));
                return out;
            } else if constexpr (std::is_same_v<T, CharSource>) {
                return eval_char(node, s, cfg, want_ds);
            } else if constexpr (std::is_same_v<T, ProductSource>) {
                ValDer acc{{1.0, 0.0}, {0.0, 0.0}};
                for (const auto& f : node.factors) {
                    ValDer fv = eval_source(f, s, cfg, want_ds);
                    if (want_ds) acc.dv = acc.dv * fv.v + acc.v * fv.dv;
                    acc.v *= fv.v;
                }
                return acc;
            } else {
                return eval_satake(node, s, cfg, want_ds);
            }
        },
        src.node);
}

void check_strip(Complex s) {
    if (!(s.real() > -1.0) || !(s.real() <= kStripMax))
        throw DomainError("evaluation supported only on -1 < Re(s) <= 4");
}

void check_pole(const LFunctionInstance& f, Complex s) {
    if (f.pole_order >= 1 && std::abs(s - 1.0) < kPoleGuard)
        throw PoleError("L(" + f.name + ", s) has a pole of order " +
                            std::to_string(f.pole_order) + " at s = 1",
                        f.pole_order);
}

}  // namespace

Complex l_value(const LFunctionInstance& f, Complex s, const EvalConfig& cfg) {
    cfg.validate();
    check_strip(s);
    check_pole(f, s);
    return eval_source(f.coeff_source, s, cfg, false).v;
}

Complex l_deriv(const LFunctionInstance& f, Complex s, const EvalConfig& cfg) {
    cfg.validate();
    check_strip(s);
    check_pole(f, s);
    return eval_source(f.coeff_source, s, cfg, true).dv;
}

Complex log_deriv(const LFunctionInstance& f, Complex s, const EvalConfig& cfg) {
    cfg.validate();
    check_strip(s);
    check_pole(f, s);

    double sigma = s.real();
    if (sigma >= 3.0 && coeff_growth(f.coeff_source) == CoeffGrowth::VonMangoldt) {
        // -sum_{n<=N} Lambda_f(n) n^{-s}; tail uses |Lambda_f(n)| <= d log n:
        //   sum_{n>N} d log(n) n^{-sigma} <= d [N^{1-sigma}(log N/(sigma-1) + 1/(sigma-1)^2)
        //                                      + log(N) N^{-sigma}]
        double d = static_cast<double>(f.degree);
        double inv = 1.0 / (sigma - 1.0);
        std::int64_t n_cut = 256;
        auto tail = [&](double n) {
            return d * (std::pow(n, 1.0 - sigma) * (std::log(n) * inv + inv * inv) +
                        std::log(n) * std::pow(n, -sigma));
        };
        while (tail(static_cast<double>(n_cut)) > cfg.target_abs_error) {
            n_cut *= 2;
            if (n_cut > f.degree * static_cast<std::int64_t>(cfg.series_terms))
                throw EvalError("log_deriv: series cap reached before the truncation target");
        }
        Complex acc{0.0, 0.0};
        for (auto p : arith::primes_up_to(static_cast<std::int32_t>(n_cut))) {
            double lp = std::log(static_cast<double>(p));
            Complex w = std::exp(-s * lp);
            Complex wk = w;
            for (std::int64_t n = p; n <= n_cut; n *= p) {
                acc += lambda_coeff(f, n) * wk;
                wk *= w;
                if (n > n_cut / p) break;
            }
        }
        return -acc;
    }

    ValDer vd = eval_source(f.coeff_source, s, cfg, true);
    if (std::abs(vd.v) <= 10.0 * cfg.target_abs_error)
        throw SingularNeighborhood("log_deriv: |L(" + f.name +
                                   ", s)| is below 10x the truncation target; s sits on or "
                                   "numerically at a zero");
    return vd.dv / vd.v;
}

Complex cauchy_derivative(const std::function<Complex(Complex)>& fn, Complex s, double radius,
                          double tol, int max_points) {
    if (!(radius > 0.0)) throw DomainError("cauchy_derivative: radius must be positive");
    auto eval = [&](int m) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
            Complex rot{std::cos(theta), std::sin(theta)};
            acc += fn(s + radius * rot) / rot;
        }
        return acc / (static_cast<double>(m) * radius);
    };
    int m = 64;
    Complex prev = eval(m);
    while (2 * m <= max_points) {
        Complex next = eval(2 * m);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
        m *= 2;
    }
    throw EvalError("cauchy_derivative: trapezoid did not stabilize; shrink the radius");
}

}  // namespace zfr
