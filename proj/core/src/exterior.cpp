#include "sasaki/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace sasaki {

ExteriorAlgebra::ExteriorAlgebra(std::size_t n) : n_(n), masks_(n + 1), index_(std::size_t{1} << n) {
    if (n > 20) throw std::invalid_argument("exterior algebra dimension too large");
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        auto& list = masks_[static_cast<std::size_t>(std::popcount(m))];
        index_[m] = list.size();
        list.push_back(m);
    }
}

std::size_t ExteriorAlgebra::dim(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) > n_) return 0;
    return masks_[static_cast<std::size_t>(k)].size();
}

std::string ExteriorAlgebra::label(int k, std::size_t index) const {
    const std::uint32_t m = mask(k, index);
    if (m == 0) return "1";
    std::string s = "e";
    for (std::size_t b = 0; b < n_; ++b)
        if (m & (1u << b)) s += std::to_string(b);
    return s;
}

int ExteriorAlgebra::wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    // Each pair (i in A, j in B) with i > j costs one transposition.
    int swaps = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
        const std::uint32_t low = bb & (~bb + 1);
        swaps += std::popcount(a & ~((low << 1) - 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

Matrix ExteriorAlgebra::left_wedge(int p, std::span<const Gaussian> alpha, int k) const {
    if (alpha.size() != dim(p)) throw std::invalid_argument("left_wedge: form size mismatch");
    Matrix m(dim(k + p), dim(k));
    if (m.empty()) return m;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        if (alpha[a].is_zero()) continue;
        const std::uint32_t am = mask(p, a);
        for (std::size_t c = 0; c < dim(k); ++c) {
            const std::uint32_t cm = mask(k, c);
            const int s = wedge_sign(am, cm);
            if (s == 0) continue;
            auto& entry = m(index(am | cm), c);
            if (s > 0) entry += alpha[a];
            else entry -= alpha[a];
        }
    }
    return m;
}

Matrix ExteriorAlgebra::right_wedge(int p, std::span<const Gaussian> alpha, int k) const {
    // β ∧ α = (-1)^{kp} α ∧ β
    Matrix m = left_wedge(p, alpha, k);
    if ((k * p) % 2 != 0) m = -m;
    return m;
}

Matrix ExteriorAlgebra::interior(std::span<const Gaussian> x, int k) const {
    if (x.size() != n_) throw std::invalid_argument("interior: vector size mismatch");
    Matrix m(dim(k - 1), dim(k));
    if (m.empty()) return m;
    for (std::size_t c = 0; c < dim(k); ++c) {
        const std::uint32_t cm = mask(k, c);
        for (std::size_t a = 0; a < n_; ++a) {
            if (!(cm & (1u << a)) || x[a].is_zero()) continue;
            const int before = std::popcount(cm & ((1u << a) - 1));
            auto& entry = m(index(cm & ~(1u << a)), c);
            if (before % 2 == 0) entry += x[a];
            else entry -= x[a];
        }
    }
    return m;
}

std::vector<Gaussian> ExteriorAlgebra::wedge(int p, std::span<const Gaussian> alpha, int q,
                                             std::span<const Gaussian> beta) const {
    return left_wedge(p, alpha, q).apply(beta);
}

Gaussian ExteriorAlgebra::evaluate2(std::span<const Gaussian> omega, std::span<const Gaussian> x,
                                    std::span<const Gaussian> y) const {
    if (omega.size() != dim(2)) throw std::invalid_argument("evaluate2: not a 2-form");
    Gaussian v;
    for (std::size_t c = 0; c < dim(2); ++c) {
        if (omega[c].is_zero()) continue;
        const std::uint32_t m = mask(2, c);
        const auto i = static_cast<std::size_t>(std::countr_zero(m));
        const auto j = static_cast<std::size_t>(31 - std::countl_zero(m));
        v += omega[c] * (x[i] * y[j] - x[j] * y[i]);
    }
    return v;
}

Matrix ExteriorAlgebra::derivation_extension(const Matrix& on_one_forms, int k) const {
    if (on_one_forms.rows() != n_ || on_one_forms.cols() != n_)
        throw std::invalid_argument("derivation_extension: expected an endomorphism of 1-forms");
    Matrix m(dim(k), dim(k));
    for (std::size_t c = 0; c < dim(k); ++c) {
        const std::uint32_t cm = mask(k, c);
        // D(e^{i1} ∧ ... ∧ e^{ik}) = Σ_s e^{i1} ∧ ... ∧ D e^{is} ∧ ... ∧ e^{ik}
        for (std::size_t s = 0; s < n_; ++s) {
            if (!(cm & (1u << s))) continue;
            const std::uint32_t rest = cm & ~(1u << s);
            for (std::size_t t = 0; t < n_; ++t) {
                const Gaussian& coef = on_one_forms(t, s);
                if (coef.is_zero() || (rest & (1u << t))) continue;
                // Replace e^s by e^t in place: sign of moving e^t from slot of s.
                const int s1 = wedge_sign(1u << s, rest);
                const int s2 = wedge_sign(1u << t, rest);
                auto& entry = m(index(rest | (1u << t)), c);
                if (s1 * s2 > 0) entry += coef;
                else entry -= coef;
            }
        }
    }
    return m;
}

Matrix ExteriorAlgebra::odd_derivation_extension(const Matrix& on_one_forms, int k) const {
    if (on_one_forms.rows() != dim(2) || on_one_forms.cols() != n_)
        throw std::invalid_argument("odd_derivation_extension: expected a map from 1-forms to 2-forms");
    Matrix m(dim(k + 1), dim(k));
    if (m.empty()) return m;
    for (std::size_t c = 0; c < dim(k); ++c) {
        const std::uint32_t cm = mask(k, c);
        // e^I = e^{i1} ∧ e^{I'}:  d e^I = (d e^{i1}) ∧ e^{I'} - e^{i1} ∧ d e^{I'}, unrolled:
        // Σ_s (-1)^{#before s} e^{before} ∧ d e^s ∧ e^{after}
        for (std::size_t s = 0; s < n_; ++s) {
            if (!(cm & (1u << s))) continue;
            const std::uint32_t rest = cm & ~(1u << s);
            const int move = wedge_sign(1u << s, rest);  // e^I = move * e^s ∧ e^{rest}
            for (std::size_t r = 0; r < dim(2); ++r) {
                const Gaussian& coef = on_one_forms(r, s);
                if (coef.is_zero()) continue;
                const std::uint32_t two = mask(2, r);
                const int w = wedge_sign(two, rest);
                if (w == 0) continue;
                auto& entry = m(index(two | rest), c);
                if (move * w > 0) entry += coef;
                else entry -= coef;
            }
        }
    }
    return m;
}

}  // namespace sasaki
