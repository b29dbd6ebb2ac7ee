#include "sasaki/subspace.hpp"

#include <stdexcept>

namespace sasaki {

Subspace Subspace::span(const Matrix& spanning) {
    Subspace s(spanning.rows());
    if (spanning.cols() == 0 || spanning.rows() == 0) return s;
    const Echelon e = rref(spanning.transpose());
    s.basis_ = e.reduced.block(0, 0, e.pivots.size(), spanning.rows()).transpose();
    return s;
}

bool Subspace::contains(std::span<const Gaussian> v) const {
    return contains(Matrix::column(v));
}

bool Subspace::contains(const Matrix& columns) const {
    if (columns.rows() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    if (columns.cols() == 0 || columns.is_zero()) return true;
    if (dim() == 0) return false;
    return solve(basis_, columns).has_value();
}

Subspace kernel(const Matrix& m) { return Subspace::span(kernel_basis(m)); }

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
    // x in ker [A | -B]  =>  A x_a lies in both.
    const Matrix k = kernel_basis(hstack(a.basis(), -b.basis()));
    return Subspace::span(a.basis() * k.block(0, 0, a.dim(), k.cols()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    return Subspace::span(hstack(a.basis(), b.basis()));
}

Matrix quotient_basis(const Subspace& a, const Subspace& b) {
    if (!a.contains(b)) throw std::invalid_argument("quotient_basis: subspace not contained");
    // Greedy completion: append a's basis vectors after b's and keep the
    // pivot columns that land in the a-part.
    const Matrix stacked = hstack(b.basis(), a.basis());
    if (stacked.cols() == 0) return Matrix(a.ambient(), 0);
    const Echelon e = rref(stacked);
    std::vector<std::size_t> keep;
    for (auto p : e.pivots)
        if (p >= b.dim()) keep.push_back(p);
    return stacked.select_cols(keep);
}

}  // namespace sasaki
