#pragma once

// Finitely presented groups, representations into GL_m, Fox-calculus tangent
// spaces and order-2 expansions of the relators.

#include "sasaki/dgla.hpp"
#include "sasaki/germ.hpp"

#include <map>
#include <string>
#include <vector>

namespace sasaki {

/// Generators are single lowercase letters; in relator words an uppercase
/// letter is the inverse of its lowercase generator.
struct GroupPresentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<std::string> relators;

    std::size_t index(char letter) const;  // throws std::invalid_argument
    /// Labels unique single lowercase letters, words over them and freely reduced.
    void validate() const;
};

struct Representation {
    std::size_t rank = 1;
    std::map<std::string, Matrix> images;

    static Representation trivial(const GroupPresentation& gp, std::size_t rank);
    /// ρ(w) for a word.
    Matrix evaluate(const GroupPresentation& gp, const std::string& word) const;
    /// Every image invertible and every relator mapped to the identity; throws
    /// std::invalid_argument otherwise.
    void validate(const GroupPresentation& gp) const;
};

struct FoxTangent {
    std::vector<std::string> variables;  // entries of u_g, g-major, row-major within gl_m
    Matrix jacobian;                     // (relators * m^2) x (generators * m^2)
    Subspace cocycles, coboundaries;
    Matrix cohomology;                   // representatives of Z^1/B^1
    std::size_t z1 = 0, b1 = 0, h1 = 0;
};

/// Z^1(Γ, ad ρ) as the kernel of the relator Jacobian, B^1 from principal
/// crossed homomorphisms and H^1 = Z^1/B^1.
FoxTangent fox_tangent(const GroupPresentation& gp, const Representation& rho);

/// ρ(g) exp(U_g) with exp truncated at order 2, substituted into each relator:
/// target c = (relator r, entry (i,j)) reads (linear_part u)_c + u^T quadratic_part[c] u.
MCConstraintSystem relator_order2(const GroupPresentation& gp, const Representation& rho);

struct VarietyComparison {
    std::size_t fox_h1 = 0, model_h1 = 0;
    std::size_t fox_ideal_dim = 0, model_ideal_dim = 0;
    std::size_t augmentation_rank = 0, fiber_dim = 0;
    bool linear_blocks_agree = false;  // Jacobian kernel == kernel of the order-1 expansion
    bool dims_agree = false;
    bool ideals_agree = false;
    bool quotient_trivial = false;     // ε(L^0) = End(E_x)
    std::vector<Check> checks;
    bool ok() const { return all_pass(checks); }
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// `matching` sends each generator to the index of a basis 1-form (or -1 for
/// none); u_g ↦ [e^{matching(g)} ⊗ u_g] identifies H^1 of the group with H^1_B.
/// Throws DimensionMismatch when the identification is not an isomorphism.
VarietyComparison compare_cone_with_variety(const GermModelDGLA& g, const TwistedComplex& end_tc,
                                            const GroupPresentation& gp, const Representation& rho,
                                            const std::map<std::string, int>& matching);

}  // namespace sasaki
