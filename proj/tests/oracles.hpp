#pragma once

// Test-side oracles, kept independent of the library code paths they
// check: a Lanczos gamma (the library uses Stirling), regulated direct
// series for Hurwitz zeta, alternating-series constants, a von Mangoldt
// sieve with tail-corrected log-derivative sums, Legendre symbols by
// Euler's criterion, and Dirichlet-series log/exp recurrences.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// --- Lanczos log Gamma (g = 7, 9 coefficients) ---------------------------

inline Complex lanczos_log_gamma(Complex z) {
    static const double coeff[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(pi) - std::log(std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
    }
    z -= 1.0;
    Complex x = coeff[0];
    for (int i = 1; i < 9; ++i) x += coeff[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// --- regulated direct series for zeta(s, a) -------------------------------
//
// S(eps) = sum_{n=0}^{N} (n+a)^{-s} e^{-eps (n+a)}
//        = Gamma(1-s) eps^{s-1} + sum_{k>=0} zeta(s-k, a) (-eps)^k / k!
// so R(eps) = S(eps) - Gamma(1-s) eps^{s-1} = zeta(s,a) - zeta(s-1,a) eps + O(eps^2),
// and the Richardson combination 2 R(eps/2) - R(eps) = zeta(s,a) + O(eps^2).

inline Complex hurwitz_regulated_series(Complex s, double a, double eps = 4e-5,
                                        std::int64_t n_terms = 1600000) {
    Complex s1{0.0, 0.0}, s2{0.0, 0.0};
    for (std::int64_t n = 0; n <= n_terms; ++n) {
        double x = static_cast<double>(n) + a;
        Complex pw = std::exp(-s * std::log(x));
        s1 += pw * std::exp(-eps * x);
        s2 += pw * std::exp(-0.5 * eps * x);
    }
    Complex g = std::exp(lanczos_log_gamma(1.0 - s));
    Complex r1 = s1 - g * std::exp((s - 1.0) * std::log(eps));
    Complex r2 = s2 - g * std::exp((s - 1.0) * std::log(0.5 * eps));
    return 2.0 * r2 - r1;
}

// --- alternating series constants -----------------------------------------

// sum_{k>=0} (-1)^k / (2k+1)^2 with averaged partial sums.
inline double catalan_direct_series(std::int64_t n_terms = 200000) {
    double s = 0.0, sign = 1.0, prev = 0.0;
    for (std::int64_t k = 0; k < n_terms; ++k) {
        prev = s;
        double d = 2.0 * static_cast<double>(k) + 1.0;
        s += sign / (d * d);
        sign = -sign;
    }
    return 0.5 * (s + prev);
}

// Euler transform of the Leibniz series sum (-1)^k/(2k+1).
inline double leibniz_euler_transform(int stages = 40) {
    // forward differences of a_k = 1/(2k+1)
    std::vector<double> a(static_cast<std::size_t>(stages) + 1);
    for (int k = 0; k <= stages; ++k) a[static_cast<std::size_t>(k)] = 1.0 / (2.0 * k + 1.0);
    double sum = 0.0, pow2 = 2.0;
    for (int j = 0; j <= stages; ++j) {
        sum += a[0] / pow2;
        pow2 *= 2.0;
        for (int k = 0; k + 1 <= stages - j; ++k) a[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k) + 1];
    }
    return sum;
}

// --- von Mangoldt sieve and log-derivative series --------------------------

inline std::vector<double> von_mangoldt_sieve(std::int64_t n_max) {
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (spf[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i; j <= n_max; j += i)
            if (!spf[static_cast<std::size_t>(j)]) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
    std::vector<double> lam(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        std::int64_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t m = n;
        while (m % p == 0) m /= p;
        if (m == 1) lam[static_cast<std::size_t>(n)] = std::log(static_cast<double>(p));
    }
    return lam;
}

// -(zeta'/zeta)(s) ~ sum_{n<=N} Lambda(n) n^{-s} + N^{1-s}/(s-1); the second
// term integrates the prime-counting main term over the tail.
inline Complex zeta_log_deriv_series(Complex s, const std::vector<double>& lam) {
    Complex acc{0.0, 0.0};
    std::int64_t n_max = static_cast<std::int64_t>(lam.size()) - 1;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        if (lam[static_cast<std::size_t>(n)] == 0.0) continue;
        acc += lam[static_cast<std::size_t>(n)] * std::exp(-s * std::log(static_cast<double>(n)));
    }
    acc += std::exp((1.0 - s) * std::log(static_cast<double>(n_max))) / (s - 1.0);
    return -acc;
}

// --- quadratic residues ----------------------------------------------------

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % m);
        b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % m);
        e >>= 1;
    }
    return r;
}

// Euler criterion: (a|p) for odd prime p.
inline int legendre_symbol(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// --- Dirichlet-series log/exp recurrences ----------------------------------
//
// From -L'/L = sum Lambda(n) n^{-s}:  lambda(n) log n = sum_{d|n, d>=2} Lambda(d) lambda(n/d).

// exp direction: rebuild lambda(1..N) from Lambda(2..N).
inline std::vector<Complex> dirichlet_exp(const std::vector<Complex>& big_lambda,
                                          std::int64_t n_max) {
    std::vector<Complex> lam(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
    lam[1] = 1.0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        Complex acc{0.0, 0.0};
        for (std::int64_t d = 2; d <= n; ++d)
            if (n % d == 0) acc += big_lambda[static_cast<std::size_t>(d)] * lam[static_cast<std::size_t>(n / d)];
        lam[static_cast<std::size_t>(n)] = acc / std::log(static_cast<double>(n));
    }
    return lam;
}

// log direction: recover Lambda(2..N) from lambda(1..N).
inline std::vector<Complex> dirichlet_log(const std::vector<Complex>& lam, std::int64_t n_max) {
    std::vector<Complex> big(static_cast<std::size_t>(n_max) + 1, Complex{0.0, 0.0});
    for (std::int64_t n = 2; n <= n_max; ++n) {
        Complex acc = lam[static_cast<std::size_t>(n)] * std::log(static_cast<double>(n));
        for (std::int64_t d = 2; d < n; ++d)
            if (n % d == 0) acc -= big[static_cast<std::size_t>(d)] * lam[static_cast<std::size_t>(n / d)];
        big[static_cast<std::size_t>(n)] = acc;
    }
    return big;
}

// --- one-line branch/bound oracle -------------------------------------------

struct BranchBound {
    bool generic;
    double bound;
};

inline BranchBound beta_branch_oracle(int r, double gamma, double a_const, double b_const,
                                      double big_l) {
    double c_const = std::max(a_const, b_const);
    if (r == 0 || std::abs(gamma) > 1.0 / (5.0 * a_const * big_l))
        return {true, 1.0 - 1.0 / (400.0 * a_const * big_l)};
    return {false, 1.0 - 1.0 / (60.0 * c_const * big_l)};
}

// --- deterministic PRNG for property tests ----------------------------------

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() % (1ull << 53)) / static_cast<double>(1ull << 53));
    }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace oracles
