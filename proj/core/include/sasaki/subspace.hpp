#pragma once

#include "sasaki/matrix.hpp"

#include <cstddef>

namespace sasaki {

/// A linear subspace of Q(i)^n held by a canonical basis: the columns are the
/// transpose of the reduced row echelon form of any spanning set, so two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
    /// Span of the columns of `spanning` (need not be independent).
    static Subspace span(const Matrix& spanning);
    static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(std::span<const Gaussian> v) const;
    bool contains(const Matrix& columns) const;
    bool contains(const Subspace& other) const { return contains(other.basis_); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Columns of `a`'s basis completing `b` to `a`, i.e. representatives of a
/// basis of a/b. Throws std::invalid_argument when b is not contained in a.
Matrix quotient_basis(const Subspace& a, const Subspace& b);

}  // namespace sasaki
