#include "zfr/dirichlet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "zfr/arith.hpp"
#include "zfr/errors.hpp"

namespace zfr {

std::complex<double> RootOfUnity::value() const {
    if (num == 0) return {1.0, 0.0};
    if (2 * num == den) return {-1.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

namespace detail {

namespace {

CyclicComponent make_odd_component(std::int64_t p, int e) {
    CyclicComponent c;
    c.prime_power = 1;
    for (int i = 0; i < e; ++i) c.prime_power *= p;
    c.generator = arith::primitive_root(p, e);
    c.order = c.prime_power / p * (p - 1);
    c.dlog.assign(static_cast<std::size_t>(c.prime_power), -1);
    std::int64_t r = 1;
    for (std::int64_t j = 0; j < c.order; ++j) {
        c.dlog[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(j);
        r = arith::mul_mod(static_cast<std::uint64_t>(r),
                           static_cast<std::uint64_t>(c.generator),
                           static_cast<std::uint64_t>(c.prime_power));
    }
    return c;
}

// For 2^e, e >= 3: (Z/2^eZ)* = <-1> x <5>. Fills both component tables in
// one enumeration of (-1)^a * 5^b.
void make_two_power_components(int e, CyclicComponent& sign_part, CyclicComponent& five_part) {
    std::int64_t m = std::int64_t{1} << e;
    sign_part.prime_power = m;
    sign_part.generator = m - 1;
    sign_part.order = 2;
    sign_part.dlog.assign(static_cast<std::size_t>(m), -1);
    five_part.prime_power = m;
    five_part.generator = 5;
    five_part.order = m / 4;
    five_part.dlog.assign(static_cast<std::size_t>(m), -1);
    for (int a = 0; a < 2; ++a) {
        std::int64_t r = (a == 0) ? 1 : m - 1;
        for (std::int64_t b = 0; b < five_part.order; ++b) {
            sign_part.dlog[static_cast<std::size_t>(r)] = a;
            five_part.dlog[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(b);
            r = arith::mul_mod(static_cast<std::uint64_t>(r), 5,
                               static_cast<std::uint64_t>(m));
        }
    }
}

}  // namespace

bool UnitGroup::dlogs(std::int64_t n, std::vector<std::int64_t>& out) const {
    n %= modulus;
    if (n < 0) n += modulus;
    if (arith::gcd(n, modulus) != 1) return false;
    out.resize(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        std::int32_t l = c.dlog[static_cast<std::size_t>(n % c.prime_power)];
        if (l < 0) return false;  // cannot happen for coprime n
        out[i] = l;
    }
    return true;
}

std::shared_ptr<const UnitGroup> unit_group(std::int64_t q) {
    if (q < 1) throw DomainError("unit_group: modulus must be positive");
    if (q > 1000000) throw DomainError("unit_group: modulus exceeds the supported 10^6");

    static std::mutex cache_mutex;
    static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(q);
        if (it != cache.end()) return it->second;
    }

    auto g = std::make_shared<UnitGroup>();
    g->modulus = q;
    for (auto [p, e] : arith::factorize(q)) {
        if (p == 2) {
            if (e == 1) continue;  // (Z/2Z)* trivial
            if (e == 2) {
                CyclicComponent c;
                c.prime_power = 4;
                c.generator = 3;
                c.order = 2;
                c.dlog.assign(4, -1);
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                g->components.push_back(std::move(c));
            } else {
                CyclicComponent sign_part, five_part;
                make_two_power_components(e, sign_part, five_part);
                g->components.push_back(std::move(sign_part));
                g->components.push_back(std::move(five_part));
            }
        } else {
            g->components.push_back(make_odd_component(p, e));
        }
    }
    g->exponent = 1;
    for (const auto& c : g->components) g->exponent = arith::lcm(g->exponent, c.order);

    std::lock_guard lock(cache_mutex);
    auto [it, _] = cache.emplace(q, std::move(g));
    return it->second;
}

}  // namespace detail

DirichletCharacter::DirichletCharacter(std::int64_t q, std::vector<std::int64_t> index)
    : group_(detail::unit_group(q)), index_(std::move(index)) {
    if (index_.size() != group_->components.size())
        throw DomainError("DirichletCharacter: index length must match the number of cyclic components (" +
                          std::to_string(group_->components.size()) + " for modulus " +
                          std::to_string(q) + ")");
    for (std::size_t i = 0; i < index_.size(); ++i) {
        std::int64_t d = group_->components[i].order;
        index_[i] %= d;
        if (index_[i] < 0) index_[i] += d;
    }
}

std::optional<RootOfUnity> DirichletCharacter::exact_value(std::int64_t n) const {
    static thread_local std::vector<std::int64_t> logs;
    if (!group_->dlogs(n, logs)) return std::nullopt;
    std::int64_t den = group_->exponent;
    std::int64_t num = 0;
    for (std::size_t i = 0; i < index_.size(); ++i) {
        const auto& c = group_->components[i];
        // e_i * l_i * (den / order_i), accumulated mod den
        std::int64_t term = static_cast<std::int64_t>(
            arith::mul_mod(static_cast<std::uint64_t>(index_[i] % c.order),
                           static_cast<std::uint64_t>(logs[i] % c.order), static_cast<std::uint64_t>(c.order)));
        num = (num + term * (den / c.order)) % den;
    }
    return RootOfUnity{num, den};
}

std::complex<double> DirichletCharacter::operator()(std::int64_t n) const {
    auto v = exact_value(n);
    return v ? v->value() : std::complex<double>{0.0, 0.0};
}

bool DirichletCharacter::is_principal() const {
    for (auto e : index_)
        if (e != 0) return false;
    return true;
}

bool DirichletCharacter::is_real() const {
    for (std::size_t i = 0; i < index_.size(); ++i)
        if ((2 * index_[i]) % group_->components[i].order != 0) return false;
    return true;
}

bool DirichletCharacter::is_even() const {
    auto v = exact_value(-1);
    return v && v->is_one();
}

std::int64_t DirichletCharacter::order() const {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < index_.size(); ++i) {
        std::int64_t d = group_->components[i].order;
        std::int64_t e = index_[i];
        ord = arith::lcm(ord, d / arith::gcd(d, e));
    }
    return ord;
}

std::vector<DirichletCharacter> characters_mod(std::int64_t q) {
    if (q < 1) throw DomainError("characters_mod: modulus must be positive");
    auto group = detail::unit_group(q);
    std::int64_t count = 1;
    for (const auto& c : group->components) count *= c.order;

    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::int64_t> index(group->components.size(), 0);
    for (std::int64_t k = 0; k < count; ++k) {
        out.emplace_back(q, index);
        // mixed-radix increment, last component fastest
        for (std::size_t i = index.size(); i-- > 0;) {
            if (++index[i] < group->components[i].order) break;
            index[i] = 0;
        }
    }
    return out;
}

DirichletCharacter kronecker_character(std::int64_t d) {
    if (d == 0) throw DomainError("kronecker_character: discriminant must be nonzero");
    if (!arith::is_fundamental_discriminant(d)) {
        std::int64_t r4 = ((d % 4) + 4) % 4;
        std::string reason = (r4 == 2 || r4 == 3)
                                 ? "D == 2 or 3 (mod 4)"
                                 : "D/4 not congruent to 2,3 (mod 4) or a square factor present";
        if (r4 == 1) reason = "D == 1 (mod 4) but not squarefree";
        throw DomainError("kronecker_character: " + std::to_string(d) +
                          " is not a fundamental discriminant: " + reason);
    }
    std::int64_t q = d < 0 ? -d : d;
    auto group = detail::unit_group(q);
    std::vector<std::int64_t> index(group->components.size(), 0);
    for (std::size_t i = 0; i < group->components.size(); ++i) {
        const auto& c = group->components[i];
        // CRT-lift the generator: n == generator mod its prime power and
        // n == 1 modulo the rest, so (d|n) isolates this component
        std::int64_t rest = q / c.prime_power;
        std::int64_t n = c.generator;
        if (rest > 1) {
            std::int64_t k = ((c.generator - 1) % c.prime_power + c.prime_power) % c.prime_power;
            k = static_cast<std::int64_t>(arith::mul_mod(
                static_cast<std::uint64_t>(k),
                static_cast<std::uint64_t>(arith::inv_mod(rest % c.prime_power, c.prime_power)),
                static_cast<std::uint64_t>(c.prime_power)));
            n = 1 + rest * k;
        }
        int v = arith::kronecker_symbol(d, n);
        if (v == -1) {
            // real character: exponent is order/2 on this component
            if (c.order % 2 != 0)
                throw DomainError("kronecker_character: internal parity failure");
            index[i] = c.order / 2;
        } else if (v != 1) {
            throw DomainError("kronecker_character: lifted generator not coprime to |D|");
        }
    }
    return DirichletCharacter(q, std::move(index));
}

std::int64_t conductor_of(const DirichletCharacter& chi) {
    std::int64_t q = chi.modulus();
    for (std::int64_t f : arith::divisors(q)) {
        // chi induced mod f iff chi(n) = 1 for all n == 1 (mod f), gcd(n,q)=1
        bool induced = true;
        for (std::int64_t n = 1 + f; n <= q; n += f) {
            if (arith::gcd(n, q) != 1) continue;
            auto v = chi.exact_value(n);
            if (!v || !v->is_one()) {
                induced = false;
                break;
            }
        }
        if (induced) return f;
    }
    return q;
}

}  // namespace zfr
