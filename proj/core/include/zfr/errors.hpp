#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zfr {

// Base class of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Argument outside a documented domain (bad modulus, s outside the strip, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A coefficient was requested that the source cannot produce (out-of-table
// prime for a Satake source). Never reported as a silent zero.
class CoefficientUnavailable : public Error {
public:
    CoefficientUnavailable(const std::string& what_arg, std::int64_t n)
        : Error(what_arg), n(n) {}
    std::int64_t n;
};

// Evaluation requested at (or indistinguishably close to) the pole s = 1.
class PoleError : public Error {
public:
    PoleError(const std::string& what_arg, int order) : Error(what_arg), order(order) {}
    int order;
};

// A log-derivative or residual was requested too close to a zero or pole.
class SingularNeighborhood : public Error {
public:
    using Error::Error;
};

// Newton refinement diverged or left its bracketing box.
class RefinementError : public Error {
public:
    using Error::Error;
};

// An argument-principle count could not be stabilized (persistent boundary
// zero, winding that refuses to settle on an integer).
class InconclusiveError : public Error {
public:
    using Error::Error;
};

// An instance failed a certification gate (nonnegativity, d < log q(f), ...).
class GateError : public Error {
public:
    using Error::Error;
};

// A numerical target cannot be met within the configured limits.
class EvalError : public Error {
public:
    using Error::Error;
};

// Malformed instance file; `pointer` is a JSON-pointer-style location.
class ParseError : public Error {
public:
    ParseError(const std::string& what_arg, std::string pointer = "/")
        : Error(what_arg + " (at " + pointer + ")"), pointer(std::move(pointer)) {}
    std::string pointer;
};

}  // namespace zfr
