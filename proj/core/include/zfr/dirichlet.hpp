#pragma once

// Exact Dirichlet characters mod q. Values are stored as exact roots of
// unity (rational angle num/den), so multiplicativity and orthogonality
// hold in integer arithmetic; complex values are rendered on demand.
//
// (Z/qZ)* is decomposed by CRT into cyclic components; a character is an
// exponent vector on the component generators. Component order: ascending
// prime, with the 2^e part (e >= 3) split as <-1> then <5>. Enumeration is
// the mixed-radix count over that vector, first component most significant.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace zfr {

// e^(2*pi*i * num/den) with 0 <= num < den.
struct RootOfUnity {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::complex<double> value() const;
    bool is_one() const { return num == 0; }
    bool is_real() const { return (2 * num) % den == 0; }
};

namespace detail {

struct CyclicComponent {
    std::int64_t prime_power;          // the p^e this component lives modulo
    std::int64_t generator;            // generating residue mod prime_power
    std::int64_t order;
    std::vector<std::int32_t> dlog;    // residue -> exponent, -1 if not in <generator>
};

struct UnitGroup {
    std::int64_t modulus = 1;
    std::vector<CyclicComponent> components;
    std::int64_t exponent = 1;         // lcm of component orders

    // Component discrete logs of n; false when gcd(n, modulus) > 1.
    bool dlogs(std::int64_t n, std::vector<std::int64_t>& out) const;
};

std::shared_ptr<const UnitGroup> unit_group(std::int64_t q);

}  // namespace detail

class DirichletCharacter {
public:
    // The character mod q with the given exponent vector (one entry per
    // cyclic component, each reduced mod the component order).
    DirichletCharacter(std::int64_t q, std::vector<std::int64_t> index);

    std::int64_t modulus() const { return group_->modulus; }
    const std::vector<std::int64_t>& index() const { return index_; }

    // chi(n); zero when gcd(n, q) > 1. n may be any integer.
    std::complex<double> operator()(std::int64_t n) const;

    // Exact value as a root of unity; nullopt encodes chi(n) = 0.
    std::optional<RootOfUnity> exact_value(std::int64_t n) const;

    bool is_principal() const;
    bool is_real() const;       // all values in {0, +1, -1}
    bool is_even() const;       // chi(-1) = +1
    std::int64_t order() const; // order in the character group

    bool operator==(const DirichletCharacter& other) const {
        return modulus() == other.modulus() && index_ == other.index_;
    }

private:
    std::shared_ptr<const detail::UnitGroup> group_;
    std::vector<std::int64_t> index_;
};

// All phi(q) characters mod q, deterministically ordered by exponent vector.
// Requires 1 <= q <= 10^6.
std::vector<DirichletCharacter> characters_mod(std::int64_t q);

// The real primitive character n -> (D|n) of modulus |D|, D a fundamental
// discriminant. Rejects non-fundamental D naming the failed condition.
DirichletCharacter kronecker_character(std::int64_t d);

// Smallest q* | q such that chi is induced from a character mod q*.
std::int64_t conductor_of(const DirichletCharacter& chi);

}  // namespace zfr
