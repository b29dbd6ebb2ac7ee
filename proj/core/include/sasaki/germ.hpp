#pragma once

// The finite model H_B(End E) ⊕ H_B(End E)⊗⟨η⟩, its Maurer-Cartan cone, the
// quadraticity certificate and cup-product vanishing on η-extended models.

#include "sasaki/dgla.hpp"
#include "sasaki/flat.hpp"

#include <map>
#include <stdexcept>

namespace sasaki {

/// Fiber pairing C^{m1} x C^{m2} -> C^{m3}: column a*m2+b is the image of (u_a, v_b).
Matrix composition_pairing(std::size_t m);
Matrix tensor_pairing(std::size_t m1, std::size_t m2);

/// x ∧ y for bundle-valued forms in full coordinates (index I*m + j).
std::vector<Gaussian> twisted_wedge(const ExteriorAlgebra& ext, const Matrix& pairing, int p, std::span<const Gaussian> x,
                                    int q, std::span<const Gaussian> y);

struct GermModelDGLA {
    int n = 0;
    std::size_t fiber_rank = 0;                    // m, with End(E) of rank m^2
    std::vector<std::size_t> basic_dims;           // dim H^k_B(End E), k = 0..2n
    std::vector<Matrix> representatives;           // basic coordinates, one column per class
    std::map<std::pair<int, int>, Matrix> bracket;  // graded commutator on H_B
    std::vector<Matrix> lefschetz;                 // [dη] : H^k_B -> H^{k+2}_B
    Matrix augmentation;                           // H^0_B -> End(E_x), m^2 x dim H^0_B
    std::size_t augmentation_rank = 0;
    DGLAModel dgla;                                // H^k_B ⊕ H^{k-1}_B⊗η in degree k
    DGLAReport dgla_report;

    std::size_t h(int k) const {
        return k < 0 || static_cast<std::size_t>(k) >= basic_dims.size() ? 0 : basic_dims[static_cast<std::size_t>(k)];
    }
    Matrix bracket_tensor(int a, int b) const;
};

/// Builds the model from the twisted complex of End(E); throws std::logic_error
/// when the assembled DGLA fails its axioms.
GermModelDGLA build_germ_model(const TwistedComplex& end_tc);
GermModelDGLA build_germ_model(const SasakianLieDatum& datum, const FlatBundleDatum& bundle);
/// Model with all spaces zero.
GermModelDGLA zero_germ_model(int n);

/// ω = α + β⊗η, α ∈ H^1_B, β ∈ H^0_B; variables are α coordinates then β.
struct MCCone {
    MCConstraintSystem full;             // the whole MC system of the model
    MCConstraintSystem quadratic_block;  // β∧[dη] + 1/2[α,α] = 0 in H^2_B
    MCConstraintSystem bracket_block;    // [α,β] = 0 in H^1_B
    std::size_t quadratic_targets = 0, bracket_targets = 0;
};

/// Blocks keep only the target rows that are not identically zero.
MCCone mc_cone(const GermModelDGLA& g);

enum class Verdict { quadratic_certified, hypothesis_violated, identity_failed };
const char* to_string(Verdict v);

struct QuadraticityReport {
    int n = 0;
    bool lefschetz_injective = false;
    std::size_t lefschetz_rank = 0, h1_dim = 0;
    bool identity_check = false;  // L([α,β]) = [α,Lβ] on all basis pairs
    bool jacobi_check = false;    // Σ_cyc [a,[b,c]] = 0 on H^1 basis triples
    Verdict verdict = Verdict::identity_failed;
    MCCone cone;
    std::vector<Check> checks;
};

QuadraticityReport quadraticity_check(const GermModelDGLA& g, int n);

struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CupProduct {
    int s = 0, t = 0;
    std::size_t source_dim1 = 0, source_dim2 = 0, target_dim = 0;
    Matrix map;            // target x (dim1 * dim2), through the η-extended models
    Matrix full_map;       // same product computed in the full complexes
    bool zero = false;
};

/// H^s(M,E) ⊗ H^t(M,E′) -> H^{s+t}(M,E⊗E′), no range restriction.
CupProduct cup_product(const TwistedComplex& e, const TwistedComplex& f, int s, int t);

struct CupVanishingReport {
    CupProduct product;
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

/// Requires s, t < n and s + t > n; throws RangeError otherwise.
CupVanishingReport cup_vanishing_check(const TwistedComplex& e, const TwistedComplex& f, int s, int t);

}  // namespace sasaki
