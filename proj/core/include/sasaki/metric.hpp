#pragma once

// The contact metric g(X,Y) = dη(X, IY) + η(X)η(Y), its Gram matrices on
// invariant forms, and the Hodge star.

#include "sasaki/sasakian.hpp"

#include <optional>
#include <vector>

namespace sasaki {

struct ContactMetric {
    Matrix g;                    // on vectors
    int orientation = 1;         // sign of η∧(dη)^n against e^0∧...∧e^{N-1}
    std::optional<Rational> volume_factor;  // sqrt(det g), when rational
    std::vector<Matrix> gram;    // gram[k] on Λ^k, real symmetric

    bool has_star() const { return volume_factor.has_value(); }
};

/// Throws std::domain_error when g is not positive definite.
ContactMetric contact_metric(const CEComplex& ce);

/// ∗ : Λ^k -> Λ^{N-k} with α∧∗β = g(α,β) vol; throws std::domain_error
/// when sqrt(det g) is irrational.
Matrix hodge_star(const CEComplex& ce, const ContactMetric& metric, int k);

/// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Adjoint of A : V -> W with respect to Hermitian Gram matrices gs on V and gt
/// on W (⟨x,y⟩ = y^H G x): A* = gs^{-1} A^H gt.
Matrix gram_adjoint(const Matrix& a, const Matrix& gs, const Matrix& gt);

bool positive_definite(const Matrix& hermitian);

}  // namespace sasaki
