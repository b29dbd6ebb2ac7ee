#pragma once

// Flat bundles over invariant models: a constant Hermitian metric h and a
// connection form A = Σ_a e^a ⊗ A_a with A_a ∈ gl_m.

#include "sasaki/matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sasaki {

struct FlatBundleDatum {
    std::string name;
    std::size_t rank = 1;
    std::vector<Matrix> connection;  // connection[a] is the coefficient of e^a
    Matrix metric;                   // h with ⟨u,v⟩ = v^H h u

    static FlatBundleDatum trivial(std::size_t dim, std::size_t rank = 1);
    /// diag(α_1, ..., α_m) for 1-forms α_j given by coefficient vectors.
    static FlatBundleDatum diagonal(const std::vector<std::vector<Gaussian>>& forms, Matrix metric = {});

    std::size_t dim() const { return connection.size(); }
    /// A(X) = Σ_a X_a A_a.
    Matrix at(std::span<const Gaussian> x) const;
    bool is_diagonal() const;
    bool is_trivial() const;
};

struct BundleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// h-adjoint of an endomorphism: h^{-1} M^H h.
Matrix h_adjoint(const Matrix& m, const Matrix& h);

/// End(E) with connection [A, ·] on row-major vec(X) and metric tr(X h Y^H h^{-1}).
FlatBundleDatum end_bundle(const FlatBundleDatum& e);
/// E ⊗ E' with connection A ⊗ 1 + 1 ⊗ A' and metric h ⊗ h'.
FlatBundleDatum tensor_bundle(const FlatBundleDatum& e, const FlatBundleDatum& f);

/// A = (∇ - d) + φ with φ h-self-adjoint and ∇ - d h-skew.
struct HarmonicDecomposition {
    std::vector<Matrix> skew;  // per basis 1-form, (A_a - A_a^*)/2
    std::vector<Matrix> phi;   // per basis 1-form, (A_a + A_a^*)/2
};

HarmonicDecomposition harmonic_split(const FlatBundleDatum& e);

}  // namespace sasaki
