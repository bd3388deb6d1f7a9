#include "zfr/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zfr/errors.hpp"

namespace zfr::arith {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    if (m < 1) throw DomainError("inv_mod: modulus must be positive");
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw DomainError("inv_mod: arguments are not coprime");
    return ((t0 % m) + m) % m;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

std::pair<std::int64_t, int> prime_power_split(std::int64_t n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return {f[0].first, f[0].second};
}

double von_mangoldt(std::int64_t n) {
    auto [p, k] = prime_power_split(n);
    return p ? std::log(static_cast<double>(p)) : 0.0;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        std::int64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

bool is_squarefree(std::int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0) return false;
    std::int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return is_squarefree(d);
    if (r4 == 0) {
        std::int64_t m = d / 4;
        std::int64_t m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n < 0) throw DomainError("kronecker_symbol: n must be nonnegative");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;

    int result = 1;
    // strip factors of 2 from n using (a|2) = 0, +1, -1 by a mod 8
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        std::int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
        // r even cannot happen here (a odd since n had a factor 2)
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive, 0 <= a < n; standard Jacobi loop
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        if ((a % 4 == 3) && (n % 4 == 3)) result = -result;
        std::int64_t t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? result : 0;
}

std::int64_t primitive_root(std::int64_t p, int e) {
    if (p < 3 || !is_prime(p)) throw DomainError("primitive_root: p must be an odd prime");
    auto fac = factorize(p - 1);
    std::int64_t g = 0;
    for (std::int64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (auto [q, _] : fac) {
            if (pow_mod(cand, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (e == 1) return g;
    // lift: g generates (Z/p^e)* unless g^(p-1) == 1 (mod p^2)
    std::int64_t p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

namespace {
std::mutex g_prime_mutex;
std::vector<std::int32_t> g_primes;       // cached ascending primes
std::int32_t g_primes_limit = 0;          // sieved bound
}  // namespace

std::vector<std::int32_t> primes_up_to(std::int32_t n) {
    std::lock_guard lock(g_prime_mutex);
    if (n > g_primes_limit) {
        std::int32_t limit = std::max(n, std::int32_t{1 << 10});
        std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
        g_primes.clear();
        for (std::int32_t i = 2; i <= limit; ++i) {
            if (comp[i]) continue;
            g_primes.push_back(i);
            for (std::int64_t j = static_cast<std::int64_t>(i) * i; j <= limit; j += i)
                comp[static_cast<std::size_t>(j)] = true;
        }
        g_primes_limit = limit;
    }
    auto end = std::upper_bound(g_primes.begin(), g_primes.end(), n);
    return std::vector<std::int32_t>(g_primes.begin(), end);
}

std::vector<std::int32_t> spf_sieve(std::int32_t n) {
    if (n < 0) throw DomainError("spf_sieve: n must be nonnegative");
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (std::int64_t j = i; j <= n; j += i)
            if (!spf[static_cast<std::size_t>(j)]) spf[static_cast<std::size_t>(j)] = i;
    }
    return spf;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace zfr::arith
