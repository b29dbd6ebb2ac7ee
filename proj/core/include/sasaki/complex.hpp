#pragma once

// Finite cochain complexes concentrated in degrees 0..top, their cohomology,
// cochain maps, and the two-step cone construction.

#include "sasaki/matrix.hpp"
#include "sasaki/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sasaki {

struct GradedVectorSpace {
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> labels;  // optional, per degree

    std::size_t dim(int k) const {
        return k < 0 || static_cast<std::size_t>(k) >= dims.size() ? 0 : dims[static_cast<std::size_t>(k)];
    }
    int top() const { return static_cast<int>(dims.size()) - 1; }
    std::size_t total() const;
};

class CochainComplex {
public:
    CochainComplex() = default;
    /// `differentials[k]` maps degree k to degree k+1; missing entries are zero.
    /// Throws std::invalid_argument on shape errors or when d∘d != 0.
    CochainComplex(GradedVectorSpace spaces, std::vector<Matrix> differentials);

    const GradedVectorSpace& spaces() const { return spaces_; }
    std::size_t dim(int k) const { return spaces_.dim(k); }
    int top() const { return spaces_.top(); }
    /// d_k : C^k -> C^{k+1}; a zero matrix outside the stored range.
    Matrix d(int k) const;

private:
    GradedVectorSpace spaces_;
    std::vector<Matrix> d_;
};

/// Cohomology in one degree with chosen representatives.
struct CohomologyGroup {
    int degree = 0;
    std::size_t dim = 0;
    Subspace cocycles;
    Subspace coboundaries;
    Matrix representatives;  // columns are cocycles, one per class
    /// dim x dim(C^k). Kills coboundaries, sends representatives to the unit
    /// vectors; meaningful on cocycles.
    Matrix projection;
};

CohomologyGroup cohomology(const CochainComplex& c, int k);
std::vector<std::size_t> betti_numbers(const CochainComplex& c);

struct CochainMap {
    const CochainComplex* source = nullptr;
    const CochainComplex* target = nullptr;
    std::vector<Matrix> components;  // degree k: dim target^k x dim source^k
};

/// True when every square d' f_k == f_{k+1} d commutes exactly.
bool commutes_with_differentials(const CochainMap& f);

struct QuasiIsoDegree {
    int degree = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t induced_rank = 0;
    bool iso = false;
};

struct QuasiIsoReport {
    std::vector<QuasiIsoDegree> degrees;
    bool quasi_isomorphism = false;
};

/// Per-degree comparison of induced maps on cohomology. Throws
/// std::invalid_argument when f is not a cochain map.
QuasiIsoReport is_quasi_isomorphism(const CochainMap& f);

/// Matrix of H^k(f) in the chosen bases of source and target cohomology.
Matrix induced_map(const CochainMap& f, int k);

CochainMap identity_map(const CochainComplex& c);
CochainMap compose(const CochainMap& g, const CochainMap& f);

/// Complex B ⊕ B[-1] with d(x, y) = (d x + (-1)^{|y|} op y, d y), where
/// op[k] : B^k -> B^{k+2}. Degree k holds B^k followed by B^{k-1}.
/// Throws std::invalid_argument when op does not commute with d.
CochainComplex mapping_cone_model(const CochainComplex& base, const std::vector<Matrix>& op);

}  // namespace sasaki
