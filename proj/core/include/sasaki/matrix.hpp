#pragma once

// Dense matrices over Q(i) and exact linear algebra on them.

#include "sasaki/gaussian.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sasaki {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Single column built from a vector of scalars.
    static Matrix column(std::span<const Gaussian> v);
    static Matrix from_rows(const std::vector<std::vector<Gaussian>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Gaussian> col(std::size_t c) const;
    void set_col(std::size_t c, std::span<const Gaussian> v);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    /// Conjugate transpose.
    Matrix adjoint() const;
    Matrix conj() const;

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Gaussian& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Gaussian& s) { return a *= s; }
    friend Matrix operator*(const Gaussian& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    std::vector<Gaussian> apply(std::span<const Gaussian> v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::size_t nonzeros() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gaussian> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Block diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// A*B - B*A
Matrix commutator(const Matrix& a, const Matrix& b);
/// A*B + B*A
Matrix anticommutator(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
Echelon rref(Matrix m);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
std::size_t rank(const Matrix& m);
/// Determinant by fraction-free elimination; throws if not square.
Gaussian determinant(const Matrix& m);

/// Basis of the null space as columns (reduced, so representation-independent).
Matrix kernel_basis(const Matrix& m);
/// Some matrix X with a*X == b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
/// Left inverse of a full-column-rank matrix (X*m == I); throws otherwise.
Matrix left_inverse(const Matrix& m);

}  // namespace sasaki
