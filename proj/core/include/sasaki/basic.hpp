#pragma once

// The basic subcomplex of a (possibly twisted) invariant model together with
// its bigrading, metric and the transverse operator calculus. Every operator
// is stored as an exact matrix in coordinates of a fixed basis of basic forms.

#include "sasaki/bundle.hpp"
#include "sasaki/check.hpp"
#include "sasaki/metric.hpp"
#include "sasaki/sasakian.hpp"

#include <map>
#include <optional>
#include <utility>

namespace sasaki {

class BasicComplex {
public:
    /// Throws BundleError when the connection is not flat, φ(ξ) != 0, the
    /// metric is not positive, or some operator does not preserve basic forms.
    explicit BasicComplex(const CEComplex& ce, FlatBundleDatum bundle = {});

    const CEComplex& ce() const { return ce_; }
    const SasakianLieDatum& datum() const { return ce_.datum(); }
    const FlatBundleDatum& bundle() const { return bundle_; }
    const HarmonicDecomposition& harmonic() const { return harmonic_; }
    const ContactMetric& metric() const { return metric_; }
    std::size_t rank() const { return bundle_.rank; }
    int n() const { return static_cast<int>(ce_.datum().n()); }
    int top() const { return 2 * n(); }
    int full_top() const { return static_cast<int>(ce_.datum().dim); }

    // Full twisted complex Λ^k ⊗ C^m, coordinate I*m + j.
    const CochainComplex& full() const { return full_; }
    std::size_t full_dim(int k) const { return ce_.dim(k) * rank(); }
    Matrix full_d(int k) const;
    Matrix full_gram(int k) const;
    /// Gram adjoint of full_d(k-1), from degree k to k-1.
    Matrix full_delta(int k) const;
    Matrix full_wedge(int p, std::span<const Gaussian> alpha, int k) const;
    Matrix full_interior(std::span<const Gaussian> x, int k) const;
    /// Σ_a e^a∧ ⊗ form[a] on Λ^k ⊗ C^m.
    Matrix full_form_wedge(const std::vector<Matrix>& form, int k) const;
    /// Covariant Lie derivative L_X ⊗ 1 + 1 ⊗ A(X).
    Matrix covariant_lie(std::span<const Gaussian> x, int k) const;
    /// ∗ ⊗ 1, available when the volume factor is rational and h = 1.
    std::optional<Matrix> full_star(int k) const;

    // Basic complex.
    const CochainComplex& complex() const { return basic_; }
    std::size_t dim(int k) const { return basic_.dim(k); }
    /// Columns: a basis of basic k-forms in full coordinates.
    Matrix inclusion(int k) const;
    Matrix retraction(int k) const;
    Matrix gram(int k) const;
    /// Basic-coordinate matrix of a full operator Λ^k -> Λ^{k+shift}; throws
    /// BundleError when the operator leaves the basic forms.
    Matrix restrict(const Matrix& full_op, int k, int shift) const;
    /// Gram adjoint of op : B^k -> B^{k+shift}.
    Matrix adjoint(const Matrix& op, int k, int shift) const;

    Matrix D(int k) const { return get(D_, k, 1); }
    Matrix J(int k) const { return get(J_, k, 0); }
    Matrix L(int k) const { return get(L_, k, 2); }
    /// Gram adjoint of L(k-2).
    Matrix Lambda(int k) const { return get(Lambda_, k, -2); }
    /// P^{p,q} on degree p+q (zero matrix when the type does not occur).
    Matrix projector(int p, int q) const;
    std::size_t bidegree_dim(int p, int q) const;

    Matrix phi(int k) const { return get(phi_, k, 1); }
    Matrix theta(int k) const { return get(theta_, k, 1); }
    Matrix theta_bar(int k) const { return get(theta_bar_, k, 1); }
    Matrix nabla(int k) const { return get(nabla_, k, 1); }
    Matrix del(int k) const { return get(del_, k, 1); }
    Matrix delbar(int k) const { return get(delbar_, k, 1); }
    Matrix Dp(int k) const { return get(Dp_, k, 1); }
    Matrix Dpp(int k) const { return get(Dpp_, k, 1); }
    Matrix Dc(int k) const { return get(Dc_, k, 1); }
    /// Adjoints map degree k to k-1.
    Matrix D_adj(int k) const { return get(D_adj_, k, -1); }
    Matrix del_adj(int k) const { return get(del_adj_, k, -1); }
    Matrix delbar_adj(int k) const { return get(delbar_adj_, k, -1); }
    Matrix Dp_adj(int k) const { return get(Dp_adj_, k, -1); }
    Matrix Dpp_adj(int k) const { return get(Dpp_adj_, k, -1); }
    Matrix Dc_adj(int k) const { return get(Dc_adj_, k, -1); }

    /// ⋆_ξ ω = ∗(η∧ω) : B^k -> B^{2n-k}.
    std::optional<Matrix> star_xi(int k) const;

    /// Coefficient lists of θ and θ̄ per basis 1-form.
    const std::vector<Matrix>& theta_form() const { return theta_form_; }
    const std::vector<Matrix>& theta_bar_form() const { return theta_bar_form_; }

    /// d = ∂ + ∂̄ and the stated bidegrees, checked at construction.
    const std::vector<Check>& construction_checks() const { return construction_checks_; }

private:
    Matrix get(const std::vector<Matrix>& ops, int k, int shift) const;

    CEComplex ce_;
    FlatBundleDatum bundle_;
    HarmonicDecomposition harmonic_;
    ContactMetric metric_;
    CochainComplex full_;
    std::vector<Matrix> full_d_, full_gram_;
    std::vector<Matrix> incl_, retr_, gram_;
    CochainComplex basic_;
    std::vector<Matrix> D_, J_, L_, Lambda_, phi_, theta_, theta_bar_, nabla_, del_, delbar_, Dp_, Dpp_, Dc_;
    std::vector<Matrix> D_adj_, del_adj_, delbar_adj_, Dp_adj_, Dpp_adj_, Dc_adj_;
    std::map<std::pair<int, int>, Matrix> proj_;
    std::vector<Matrix> theta_form_, theta_bar_form_;
    std::vector<Check> construction_checks_;
};

BasicComplex basic_subcomplex(const CEComplex& ce);

struct BigradingReport {
    std::map<std::pair<int, int>, std::size_t> dims;
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// Projector identities, dimension sums, conjugation symmetry and the
/// bidegrees of ∂, ∂̄.
BigradingReport bigrading(const BasicComplex& bc);

struct MetricReport {
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// Positivity of g, g(ξ,ξ) = 1, Hermitian Gram matrices, ∗∗ = 1.
MetricReport metric_and_star(const BasicComplex& bc);

/// Per-degree comparison of a ⋆-formula with a Gram adjoint: +1, -1, or 0
/// when neither sign matches.
struct StarComparison {
    std::string name;
    std::vector<int> sign_by_degree;
    bool available = true;
};

struct OperatorSuite {
    std::vector<StarComparison> comparisons;
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// Gram-adjoint pairs plus ⋆-formula cross-checks: δ = -∗d∗, δ_ξ = -⋆_ξ d ⋆_ξ,
/// Λ = -⋆_ξ L ⋆_ξ, ∂* = -⋆_ξ ∂̄ ⋆_ξ, ∂̄* = -⋆_ξ ∂ ⋆_ξ.
OperatorSuite operator_suite(const BasicComplex& bc);

struct IdentityVariant {
    std::string form;
    bool holds = false;
    std::vector<std::pair<int, int>> failing_bidegrees;
};

struct KahlerReport {
    std::vector<IdentityVariant> variants;
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// [Λ,∂] = -i ∂̄*, [Λ,∂̄] = i ∂* in every bidegree, with the opposite-sign
/// forms reported alongside, and Δ_ξ = 2Δ'_ξ = 2Δ''_ξ.
KahlerReport verify_kahler_identities(const BasicComplex& bc);

struct DeltaRelationReport {
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// δω = δ_ξ ω + ∗(dη ∧ ⋆_ξ ω) on basic forms; δ = δ_ξ on basic 1-forms;
/// Δ f = Δ_ξ f on basic functions.
DeltaRelationReport delta_relation_check(const BasicComplex& bc);

struct LefschetzReport {
    int degree = 0;
    Matrix map;  // H^r_B -> H^{r+2}_B in representative bases
    std::size_t source_dim = 0, target_dim = 0, rank = 0;
    bool injective = false, surjective = false;
    bool injectivity_predicted = false, surjectivity_predicted = false;
    bool prediction_holds = false;
};

/// [dη]∧ : H^r_B -> H^{r+2}_B; predictions: injective for r <= n-1,
/// surjective for r >= n-1.
LefschetzReport lefschetz_map(const BasicComplex& bc, int r);

}  // namespace sasaki
