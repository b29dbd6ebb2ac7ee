#pragma once

// Left-invariant Sasakian structures on Lie algebras and their
// Chevalley-Eilenberg complexes.

#include "sasaki/complex.hpp"
#include "sasaki/exterior.hpp"
#include "sasaki/matrix.hpp"

#include <string>
#include <vector>

namespace sasaki {

struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Gaussian coeff;  // [e_i, e_j] contains coeff * e_k
};

/// A (2n+1)-dimensional Lie algebra with contact form, Reeb vector and
/// transverse complex structure. Brackets are given for i < j or i > j; the
/// antisymmetric completion is implied.
struct SasakianLieDatum {
    std::string name;
    std::size_t dim = 0;
    std::vector<StructureConstant> brackets;
    std::vector<Gaussian> eta;  // coefficients in the dual basis
    std::vector<Gaussian> xi;   // coefficients in the basis
    Matrix complex_structure;   // I acting on column vectors
    int orientation = 0;  // 0: take the sign of η∧(dη)^n

    std::size_t n() const { return (dim - 1) / 2; }
};

struct AxiomResult {
    std::string axiom;
    bool passed = false;
    std::string witness;  // empty on success
};

struct ValidationReport {
    std::vector<AxiomResult> axioms;
    bool ok() const;
    const AxiomResult* find(const std::string& axiom) const;
};

/// Dense structure constants c[i][j][k] with [e_i, e_j] = Σ_k c_ij^k e_k.
class LieAlgebra {
public:
    explicit LieAlgebra(const SasakianLieDatum& datum);

    std::size_t dim() const { return dim_; }
    const Gaussian& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    std::vector<Gaussian> bracket(std::span<const Gaussian> x, std::span<const Gaussian> y) const;
    /// Transpose action of ad_X on 1-forms: (ad_X^* α)(Y) = α([X, Y]).
    Matrix coadjoint(std::span<const Gaussian> x) const;
    /// The Chevalley-Eilenberg differential on 1-forms, Λ^1 -> Λ^2.
    Matrix d_on_one_forms(const ExteriorAlgebra& ext) const;
    bool jacobi(std::string* witness = nullptr) const;

private:
    std::size_t dim_;
    std::vector<Gaussian> c_;
};

ValidationReport validate_sasakian(const SasakianLieDatum& datum);

/// Chevalley-Eilenberg complex of invariant forms with dα(X,Y) = -α([X,Y]).
class CEComplex {
public:
    explicit CEComplex(const SasakianLieDatum& datum);

    const SasakianLieDatum& datum() const { return datum_; }
    const LieAlgebra& algebra() const { return algebra_; }
    const ExteriorAlgebra& ext() const { return ext_; }
    const CochainComplex& complex() const { return complex_; }
    std::size_t dim(int k) const { return ext_.dim(k); }

    const Matrix& d(int k) const { return d_.at(static_cast<std::size_t>(k)); }
    Matrix interior(std::span<const Gaussian> x, int k) const { return ext_.interior(x, k); }
    /// Lie derivative built directly as the derivation extension of -ad_X^*.
    Matrix lie_derivative(std::span<const Gaussian> x, int k) const;
    Matrix wedge_eta(int k) const { return ext_.left_wedge(1, datum_.eta, k); }
    /// Coordinates of dη.
    std::vector<Gaussian> d_eta() const { return d(1).apply(datum_.eta); }

    /// Checks L_X == d i_X + i_X d for every basis vector X and every degree.
    bool cartan_formula_holds(std::string* witness = nullptr) const;
    /// wedge() against the sign rule on basis pairs, then graded commutativity and associativity of the sign rule.
    bool wedge_axioms_hold() const;

private:
    SasakianLieDatum datum_;
    LieAlgebra algebra_;
    ExteriorAlgebra ext_;
    std::vector<Matrix> d_;  // d_[k] : Λ^k -> Λ^{k+1}, k = 0..N
    CochainComplex complex_;
};

CEComplex build_ce(const SasakianLieDatum& datum);

/// Unit vector e_k of length n.
std::vector<Gaussian> unit_vector(std::size_t n, std::size_t k);

}  // namespace sasaki
