#include "sasaki/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sasaki {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Gaussian(1);
    return m;
}

Matrix Matrix::column(std::span<const Gaussian> v) {
    Matrix m(v.size(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Gaussian>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Gaussian> Matrix::col(std::size_t c) const {
    std::vector<Gaussian> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_col(std::size_t c, std::span<const Gaussian> v) {
    if (v.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

Matrix Matrix::conj() const {
    Matrix t(*this);
    for (auto& z : t.data_) z = z.conj();
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Gaussian& s) {
    for (auto& z : data_)
        if (!z.is_zero()) z *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& z : m.data_)
        if (!z.is_zero()) z = -z;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Gaussian& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Gaussian& bkj = b(k, j);
                if (!bkj.is_zero()) p(i, j).add_product(aik, bkj);
            }
        }
    }
    return p;
}

std::vector<Gaussian> Matrix::apply(std::span<const Gaussian> v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Gaussian> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, c).is_zero()) out[r].add_product((*this)(r, c), v[c]);
    }
    return out;
}

std::size_t Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& z : data_) n += z.is_zero() ? 0 : 1;
    return n;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
        const Gaussian inv = Gaussian(1) / m(row, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(row, k).is_zero()) m(row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            const Gaussian f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
        }
        e.pivots.push_back(c);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

namespace {

// Scales every row by the lcm of its denominators so entries become Gaussian integers.
Matrix clear_denominators(const Matrix& m) {
    Matrix out(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_class d1 = m(r, c).re().get_den();
            mpz_class d2 = m(r, c).im().get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
        }
        if (l != 1) {
            const Gaussian s{Rational(l)};
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!out(r, c).is_zero()) out(r, c) *= s;
        }
    }
    return out;
}

// Fraction-free elimination. Returns the rank; `det` receives the signed final
// pivot when the matrix is square and nonsingular.
std::size_t bareiss(Matrix a, Gaussian* det) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    Gaussian prev(1);
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t piv = row;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) {
            if (det) *det = Gaussian(0);
            continue;
        }
        if (piv != row) {
            for (std::size_t k = 0; k < m; ++k) std::swap(a(piv, k), a(row, k));
            sign = -sign;
        }
        for (std::size_t r = row + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < m; ++k) {
                Gaussian v = a(row, c) * a(r, k) - a(r, c) * a(row, k);
                a(r, k) = v / prev;  // exact division in Z[i]
            }
            a(r, c) = Gaussian(0);
        }
        prev = a(row, c);
        ++row;
    }
    if (det) {
        if (n == m && row == n) *det = sign > 0 ? prev : -prev;
        else *det = Gaussian(0);
    }
    return row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return bareiss(clear_denominators(m), nullptr);
}

Gaussian determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Gaussian(1);
    // Row scaling multiplies the determinant; undo it afterwards.
    Gaussian scale(1);
    Matrix scaled(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_class d1 = m(r, c).re().get_den();
            mpz_class d2 = m(r, c).im().get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
        }
        const Gaussian s{Rational(l)};
        for (std::size_t c = 0; c < m.cols(); ++c) scaled(r, c) *= s;
        scale *= s;
    }
    Gaussian det;
    bareiss(std::move(scaled), &det);
    return det / scale;
}

Matrix kernel_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return Matrix::identity(n);
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        k(f, j) = Gaussian(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced(r, f).is_zero()) k(e.pivots[r], j) = -e.reduced(r, f);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const std::size_t n = a.cols();
    Matrix x(n, b.cols());
    if (b.cols() == 0) return x;
    if (a.rows() == 0) return x;
    const Echelon e = rref(hstack(a, b));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Echelon e = rref(hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return e.reduced.block(0, n, n, n);
}

Matrix left_inverse(const Matrix& m) {
    if (m.cols() == 0) return Matrix(0, m.rows());
    // Choose a maximal set of independent rows; invert that square block.
    const Echelon e = rref(m.transpose());
    if (e.pivots.size() != m.cols()) throw std::domain_error("left_inverse: columns are dependent");
    const Matrix sq = m.select_rows(e.pivots);
    const Matrix inv = inverse(sq);
    Matrix li(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.cols(); ++r)
        for (std::size_t c = 0; c < e.pivots.size(); ++c) li(r, e.pivots[c]) = inv(r, c);
    return li;
}

}  // namespace sasaki
