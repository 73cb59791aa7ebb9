#pragma once

#include <optional>
#include <vector>

#include "cofreyd/matrix.hpp"

namespace cofreyd {

/// Coefficients from the constant term upwards; monic for characteristic polynomials.
using Polynomial = Vector;

/// det(t I - A) via reduction to upper Hessenberg form. Valid over any field.
Polynomial characteristic_polynomial(const Matrix& a);

Scalar evaluate(const Polynomial& p, const Scalar& x, const Field& field);

/// Distinct roots lying in the field. Over F_p by exhaustive evaluation (p <= 2^20),
/// over Q by the rational root theorem; gives up (returns what it found) when the
/// leading or constant coefficient is too large to factor by trial division.
std::vector<Scalar> roots_in_field(const Polynomial& p, const Field& field);

/// Matrix of x on the x-stable subspace V, in the echelon coordinates of V.
Matrix restrict_to(const Matrix& x, const Subspace& v);

/// Fitting decomposition of x - lambda on the whole space: the idempotent projecting
/// onto the generalized eigenspace ker (x - lambda)^n along im (x - lambda)^n.
/// nullopt if the projection is 0 or the identity.
std::optional<Matrix> fitting_idempotent(const Matrix& x, const Scalar& lambda);

/// Looks for a nontrivial idempotent in the algebra generated by x: one Fitting
/// projection per root of the characteristic polynomial.
std::optional<Matrix> split_by_eigenvalues(const Matrix& x);

bool is_idempotent(const Matrix& e);

}  // namespace cofreyd
