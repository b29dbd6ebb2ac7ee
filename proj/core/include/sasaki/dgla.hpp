#pragma once

// Finite-dimensional differential graded Lie algebras over Q(i) and their
// Maurer-Cartan equations.

#include "sasaki/complex.hpp"
#include "sasaki/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

class DGLAModel {
public:
    DGLAModel() = default;
    /// `bracket` maps (a, b) to a dim(a+b) x (dim a * dim b) matrix whose
    /// column i*dim(b)+j is [x_i, y_j]. Missing pairs are zero.
    DGLAModel(GradedVectorSpace spaces, std::vector<Matrix> differential,
              std::map<std::pair<int, int>, Matrix> bracket);

    const GradedVectorSpace& spaces() const { return spaces_; }
    std::size_t dim(int k) const { return spaces_.dim(k); }
    int top() const { return spaces_.top(); }
    Matrix d(int k) const;
    /// Bracket tensor for degrees (a, b); zero matrix when absent.
    Matrix bracket_tensor(int a, int b) const;
    /// [x, y] for x of degree a and y of degree b.
    std::vector<Gaussian> bracket(int a, std::span<const Gaussian> x, int b, std::span<const Gaussian> y) const;
    CochainComplex underlying_complex() const;

    using SparseColumn = std::vector<std::pair<std::size_t, Gaussian>>;
    /// Nonzero entries of [x_i, y_j] for basis elements of degrees a and b.
    const SparseColumn& bracket_column(int a, int b, std::size_t i, std::size_t j) const;
    /// All columns for degrees (a, b), indexed i*dim(b)+j; nullptr when the bracket vanishes.
    const std::vector<SparseColumn>* bracket_columns(int a, int b) const;

private:

    GradedVectorSpace spaces_;
    std::vector<Matrix> d_;
    std::map<std::pair<int, int>, Matrix> bracket_;
    // Nonzero entries of every bracket column, built once at construction.
    std::map<std::pair<int, int>, std::vector<SparseColumn>> sparse_;
};

struct DGLAViolation {
    std::string axiom;  // "antisymmetry", "jacobi", "leibniz"
    std::vector<std::pair<int, std::size_t>> basis;  // (degree, index) of the offending tuple
};

struct DGLAReport {
    bool antisymmetry = true;
    bool jacobi = true;
    bool leibniz = true;
    std::optional<DGLAViolation> first_violation;
    bool ok() const { return antisymmetry && jacobi && leibniz; }
};

/// Checks graded antisymmetry, graded Jacobi and the graded Leibniz rule on
/// every basis tuple.
DGLAReport check_dgla(const DGLAModel& g);

/// Maurer-Cartan equation d w + 1/2 [w, w] = 0 in coordinates of degree one.
struct MCConstraintSystem {
    std::vector<std::string> variables;  // degree-1 coordinates
    std::vector<std::string> targets;    // degree-2 coordinates
    Matrix linear_part;                  // targets x variables
    /// One symmetric variables x variables matrix per target coordinate:
    /// equation c is  (linear_part w)_c + w^T quadratic_part[c] w = 0.
    std::vector<Matrix> quadratic_part;

    std::vector<Gaussian> evaluate(std::span<const Gaussian> w) const;
    bool is_solution(std::span<const Gaussian> w) const;
    /// Target rows whose linear and quadratic parts both vanish identically.
    std::vector<std::size_t> trivial_equations() const;
};

MCConstraintSystem mc_system(const DGLAModel& g);

}  // namespace sasaki
