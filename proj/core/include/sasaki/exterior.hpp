#pragma once

// Exterior algebra on the dual of an N-dimensional space. Basis k-forms are
// e^I for increasing index sets I, stored as bitmasks and ordered by value.

#include "sasaki/matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sasaki {

class ExteriorAlgebra {
public:
    explicit ExteriorAlgebra(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim(int k) const;
    std::uint32_t mask(int k, std::size_t index) const { return masks_.at(static_cast<std::size_t>(k)).at(index); }
    std::size_t index(std::uint32_t mask) const { return index_.at(mask); }
    std::string label(int k, std::size_t index) const;

    /// Sign s with e^A ∧ e^B = s e^{A∪B}; zero when A and B meet.
    static int wedge_sign(std::uint32_t a, std::uint32_t b);

    /// Matrix of α ∧ · : Λ^k -> Λ^{k+p} for a p-form α.
    Matrix left_wedge(int p, std::span<const Gaussian> alpha, int k) const;
    /// Matrix of · ∧ α : Λ^k -> Λ^{k+p}.
    Matrix right_wedge(int p, std::span<const Gaussian> alpha, int k) const;
    /// Interior product i_X : Λ^k -> Λ^{k-1}.
    Matrix interior(std::span<const Gaussian> x, int k) const;
    /// α ∧ β for coordinate vectors.
    std::vector<Gaussian> wedge(int p, std::span<const Gaussian> alpha, int q, std::span<const Gaussian> beta) const;
    /// Evaluates a 2-form on a pair of vectors: ω(X, Y).
    Gaussian evaluate2(std::span<const Gaussian> omega, std::span<const Gaussian> x, std::span<const Gaussian> y) const;

    /// Extends an endomorphism of Λ^1 to Λ^k as a degree-0 derivation.
    Matrix derivation_extension(const Matrix& on_one_forms, int k) const;
    /// Extends a map Λ^1 -> Λ^2 to Λ^k -> Λ^{k+1} as an odd derivation.
    Matrix odd_derivation_extension(const Matrix& on_one_forms, int k) const;

private:
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::vector<std::size_t> index_;
};

}  // namespace sasaki
