#include "sasaki/complex.hpp"

#include <numeric>
#include <stdexcept>

namespace sasaki {

std::size_t GradedVectorSpace::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

CochainComplex::CochainComplex(GradedVectorSpace spaces, std::vector<Matrix> differentials)
    : spaces_(std::move(spaces)), d_(std::move(differentials)) {
    const int top = spaces_.top();
    d_.resize(static_cast<std::size_t>(std::max(top, 0)));
    for (int k = 0; k < top; ++k) {
        auto& m = d_[static_cast<std::size_t>(k)];
        if (m.rows() == 0 && m.cols() == 0) m = Matrix(dim(k + 1), dim(k));
        if (m.rows() != dim(k + 1) || m.cols() != dim(k))
            throw std::invalid_argument("differential " + std::to_string(k) + " has wrong shape");
    }
    for (int k = 0; k + 1 < top; ++k)
        if (!(d(k + 1) * d(k)).is_zero())
            throw std::invalid_argument("d∘d != 0 at degree " + std::to_string(k));
}

Matrix CochainComplex::d(int k) const {
    if (k < 0 || k >= top()) return Matrix(dim(k + 1), dim(k));
    return d_[static_cast<std::size_t>(k)];
}

CohomologyGroup cohomology(const CochainComplex& c, int k) {
    CohomologyGroup h;
    h.degree = k;
    const std::size_t n = c.dim(k);
    h.cocycles = kernel(c.d(k));
    h.coboundaries = image(c.d(k - 1));
    if (c.dim(k - 1) == 0) h.coboundaries = Subspace(n);
    h.representatives = quotient_basis(h.cocycles, h.coboundaries);
    h.dim = h.representatives.cols();
    // Complete [coboundaries | representatives] to a basis of C^k and read off
    // the representative coordinates from its inverse.
    Matrix partial = hstack(h.coboundaries.basis(), h.representatives);
    if (partial.cols() == 0) partial = Matrix(n, 0);
    const Matrix completion = quotient_basis(Subspace::full(n), Subspace::span(partial));
    const Matrix full = hstack(partial, completion);
    h.projection = Matrix(h.dim, n);
    if (n == 0) return h;
    const Matrix inv = inverse(full);
    h.projection = inv.block(h.coboundaries.dim(), 0, h.dim, n);
    return h;
}

std::vector<std::size_t> betti_numbers(const CochainComplex& c) {
    std::vector<std::size_t> b;
    for (int k = 0; k <= c.top(); ++k) {
        const std::size_t z = c.dim(k) - rank(c.d(k));
        const std::size_t bd = rank(c.d(k - 1));
        b.push_back(z - bd);
    }
    return b;
}

bool commutes_with_differentials(const CochainMap& f) {
    const int top = std::max(f.source->top(), f.target->top());
    for (int k = 0; k < top; ++k) {
        const Matrix fk = k <= f.source->top() ? f.components.at(static_cast<std::size_t>(k))
                                               : Matrix(f.target->dim(k), f.source->dim(k));
        const Matrix fk1 = k + 1 <= f.source->top() ? f.components.at(static_cast<std::size_t>(k + 1))
                                                    : Matrix(f.target->dim(k + 1), f.source->dim(k + 1));
        if (!(f.target->d(k) * fk == fk1 * f.source->d(k))) return false;
    }
    return true;
}

namespace {

void check_shapes(const CochainMap& f) {
    if (!f.source || !f.target) throw std::invalid_argument("cochain map without endpoints");
    if (f.components.size() != static_cast<std::size_t>(f.source->top() + 1))
        throw std::invalid_argument("cochain map: wrong number of components");
    for (int k = 0; k <= f.source->top(); ++k) {
        const auto& m = f.components[static_cast<std::size_t>(k)];
        if (m.rows() != f.target->dim(k) || m.cols() != f.source->dim(k))
            throw std::invalid_argument("cochain map component " + std::to_string(k) + " has wrong shape");
    }
}

}  // namespace

Matrix induced_map(const CochainMap& f, int k) {
    const CohomologyGroup hs = cohomology(*f.source, k);
    const CohomologyGroup ht = cohomology(*f.target, k);
    if (hs.dim == 0 || ht.dim == 0) return Matrix(ht.dim, hs.dim);
    return ht.projection * (f.components.at(static_cast<std::size_t>(k)) * hs.representatives);
}

QuasiIsoReport is_quasi_isomorphism(const CochainMap& f) {
    check_shapes(f);
    if (!commutes_with_differentials(f)) throw std::invalid_argument("map does not commute with differentials");
    QuasiIsoReport rep;
    rep.quasi_isomorphism = true;
    const int top = std::max(f.source->top(), f.target->top());
    for (int k = 0; k <= top; ++k) {
        QuasiIsoDegree d;
        d.degree = k;
        if (k > f.source->top()) {
            d.target_dim = cohomology(*f.target, k).dim;
            d.iso = d.target_dim == 0;
        } else {
            const Matrix m = induced_map(f, k);
            d.source_dim = m.cols();
            d.target_dim = m.rows();
            d.induced_rank = rank(m);
            d.iso = d.source_dim == d.target_dim && d.induced_rank == d.source_dim;
        }
        rep.quasi_isomorphism = rep.quasi_isomorphism && d.iso;
        rep.degrees.push_back(d);
    }
    return rep;
}

CochainMap identity_map(const CochainComplex& c) {
    CochainMap f{&c, &c, {}};
    for (int k = 0; k <= c.top(); ++k) f.components.push_back(Matrix::identity(c.dim(k)));
    return f;
}

CochainMap compose(const CochainMap& g, const CochainMap& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: endpoints do not match");
    CochainMap h{f.source, g.target, {}};
    for (int k = 0; k <= f.source->top(); ++k)
        h.components.push_back(g.components.at(static_cast<std::size_t>(k)) *
                               f.components.at(static_cast<std::size_t>(k)));
    return h;
}

CochainComplex mapping_cone_model(const CochainComplex& base, const std::vector<Matrix>& op) {
    const int top = base.top();
    auto L = [&](int k) -> Matrix {
        if (k < 0 || k > top || static_cast<std::size_t>(k) >= op.size()) return Matrix(base.dim(k + 2), base.dim(k));
        const Matrix& m = op[static_cast<std::size_t>(k)];
        if (m.rows() != base.dim(k + 2) || m.cols() != base.dim(k))
            throw std::invalid_argument("cone operator " + std::to_string(k) + " has wrong shape");
        return m;
    };
    for (int k = 0; k <= top; ++k)
        if (!(base.d(k + 2) * L(k) == L(k + 1) * base.d(k)))
            throw std::invalid_argument("cone operator does not commute with d at degree " + std::to_string(k));

    GradedVectorSpace spaces;
    for (int k = 0; k <= top + 1; ++k) spaces.dims.push_back(base.dim(k) + base.dim(k - 1));
    std::vector<Matrix> d;
    for (int k = 0; k <= top; ++k) {
        const std::size_t bx = base.dim(k), by = base.dim(k - 1);
        const std::size_t tx = base.dim(k + 1), ty = base.dim(k);
        Matrix m(tx + ty, bx + by);
        m.set_block(0, 0, base.d(k));
        // y has degree k-1.
        Matrix ly = L(k - 1);
        if ((k - 1) % 2 != 0) ly = -ly;
        m.set_block(0, bx, ly);
        m.set_block(tx, bx, base.d(k - 1));
        d.push_back(std::move(m));
    }
    return CochainComplex(std::move(spaces), std::move(d));
}

}  // namespace sasaki
