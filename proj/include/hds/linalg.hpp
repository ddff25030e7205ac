#pragma once

#include "hds/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hds {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major, rows of equal length

std::size_t rank(Matrix a);

// One solution of a x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<Vector> solve_linear(Matrix a, Vector b);

// Throws std::invalid_argument when a is not square or is singular.
Matrix inverse(const Matrix &a);

Vector multiply(const Matrix &a, const Vector &x);

/// coeffs . x >= rhs, or coeffs . x == rhs when is_equality.
struct LinearConstraint {
    Vector coeffs;
    Rational rhs;
    bool is_equality = false;
};

/// Exact feasibility by Fourier-Motzkin elimination. Returns a feasible
/// point or nullopt. Back-substitution prefers 0, then the lower bound,
/// then the upper bound for each variable, so certificates stay small.
/// Exponential in the worst case; intended for the handful of variables
/// that occur in cone and separating-functional tests.
std::optional<Vector> find_feasible_point(std::size_t num_vars, std::vector<LinearConstraint> constraints);

} // namespace hds
