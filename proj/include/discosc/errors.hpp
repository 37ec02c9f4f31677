#pragma once

#include <stdexcept>
#include <string>

namespace discosc {

// Quadrature result not stable under node doubling.
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Series tail bound not reachable within the term cap.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Hypergeometric denominator parameter hits a nonpositive integer before the
// series terminates.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Ladder factorization impossible: operator not positive semi-definite in
// this basis (a squared modulus would have to be negative).
struct factorization_error : std::runtime_error {
    explicit factorization_error(const std::string& what) : std::runtime_error(what) {}
};

// Tridiagonal recurrence requires nonzero off-diagonal entries.
struct irreducibility_error : std::runtime_error {
    explicit irreducibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Finite-difference stencil cannot be placed (too close to a boundary).
struct step_error : std::runtime_error {
    explicit step_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace discosc
