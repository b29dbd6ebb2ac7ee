#include "sasaki/bundle.hpp"

namespace sasaki {

FlatBundleDatum FlatBundleDatum::trivial(std::size_t dim, std::size_t rank) {
    FlatBundleDatum b;
    b.name = "trivial";
    b.rank = rank;
    b.connection.assign(dim, Matrix(rank, rank));
    b.metric = Matrix::identity(rank);
    return b;
}

FlatBundleDatum FlatBundleDatum::diagonal(const std::vector<std::vector<Gaussian>>& forms, Matrix metric) {
    if (forms.empty()) throw BundleError("bundle rank must be positive");
    FlatBundleDatum b;
    b.rank = forms.size();
    const std::size_t dim = forms.front().size();
    b.connection.assign(dim, Matrix(b.rank, b.rank));
    for (std::size_t j = 0; j < b.rank; ++j) {
        if (forms[j].size() != dim) throw BundleError("connection forms have different lengths");
        for (std::size_t a = 0; a < dim; ++a) b.connection[a](j, j) = forms[j][a];
    }
    b.metric = metric.rows() ? std::move(metric) : Matrix::identity(b.rank);
    if (b.metric.rows() != b.rank || b.metric.cols() != b.rank) throw BundleError("metric has the wrong size");
    return b;
}

Matrix FlatBundleDatum::at(std::span<const Gaussian> x) const {
    Matrix m(rank, rank);
    for (std::size_t a = 0; a < connection.size(); ++a)
        if (!x[a].is_zero()) m += connection[a] * x[a];
    return m;
}

bool FlatBundleDatum::is_diagonal() const {
    for (const auto& c : connection)
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                if (i != j && !c(i, j).is_zero()) return false;
    return true;
}

bool FlatBundleDatum::is_trivial() const {
    for (const auto& c : connection)
        if (!c.is_zero()) return false;
    return true;
}

Matrix h_adjoint(const Matrix& m, const Matrix& h) { return inverse(h) * m.adjoint() * h; }

FlatBundleDatum end_bundle(const FlatBundleDatum& e) {
    const std::size_t m = e.rank;
    FlatBundleDatum b;
    b.name = "End(" + e.name + ")";
    b.rank = m * m;
    const Matrix id = Matrix::identity(m);
    for (const auto& a : e.connection) b.connection.push_back(kron(a, id) - kron(id, a.transpose()));
    const Matrix hinv = inverse(e.metric);
    b.metric = Matrix(b.rank, b.rank);
    // ⟨E_x, E_y⟩ = tr(E_x h E_y^H h^{-1}); stored at (y, x).
    for (std::size_t x = 0; x < b.rank; ++x)
        for (std::size_t y = 0; y < b.rank; ++y) {
            const std::size_t xi = x / m, xj = x % m, yi = y / m, yj = y % m;
            b.metric(y, x) = e.metric(xj, yj) * hinv(yi, xi);
        }
    return b;
}

FlatBundleDatum tensor_bundle(const FlatBundleDatum& e, const FlatBundleDatum& f) {
    if (e.dim() != f.dim()) throw BundleError("bundles live on different models");
    FlatBundleDatum b;
    b.name = e.name + "⊗" + f.name;
    b.rank = e.rank * f.rank;
    const Matrix ie = Matrix::identity(e.rank), iff = Matrix::identity(f.rank);
    for (std::size_t a = 0; a < e.dim(); ++a)
        b.connection.push_back(kron(e.connection[a], iff) + kron(ie, f.connection[a]));
    b.metric = kron(e.metric, f.metric);
    return b;
}

HarmonicDecomposition harmonic_split(const FlatBundleDatum& e) {
    HarmonicDecomposition hd;
    const Gaussian half(Rational(1, 2));
    for (const auto& a : e.connection) {
        const Matrix adj = h_adjoint(a, e.metric);
        hd.phi.push_back((a + adj) * half);
        hd.skew.push_back((a - adj) * half);
    }
    return hd;
}

}  // namespace sasaki
