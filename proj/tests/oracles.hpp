#pragma once

// Independent reference computations used by the unit tests and the acceptance runner.

#include "sasaki/basic.hpp"
#include "sasaki/bundle.hpp"
#include "sasaki/sasakian.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using sasaki::Gaussian;
using sasaki::Matrix;

/// h_{2n+1}: [e_{2a+1}, e_{2a+2}] = -e_0, η = e^0, ξ = e_0.
inline sasaki::SasakianLieDatum heisenberg(int n) {
    sasaki::SasakianLieDatum d;
    d.name = "h" + std::to_string(2 * n + 1);
    d.dim = static_cast<std::size_t>(2 * n + 1);
    for (int a = 0; a < n; ++a)
        d.brackets.push_back({static_cast<std::size_t>(2 * a + 1), static_cast<std::size_t>(2 * a + 2), 0, Gaussian(-1)});
    d.eta = sasaki::unit_vector(d.dim, 0);
    d.xi = sasaki::unit_vector(d.dim, 0);
    d.complex_structure = Matrix(d.dim, d.dim);
    for (int a = 0; a < n; ++a) {
        d.complex_structure(2 * a + 2, 2 * a + 1) = 1;
        d.complex_structure(2 * a + 1, 2 * a + 2) = -1;
    }
    return d;
}

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Betti numbers of h_{2n+1}: b_k = C(2n,k) - C(2n,k-2) for k <= n, Poincaré duality above.
inline std::vector<std::size_t> heisenberg_betti(int n) {
    std::vector<std::size_t> b(static_cast<std::size_t>(2 * n + 2));
    for (int k = 0; k <= n; ++k) {
        const auto v = static_cast<std::size_t>(binom(2 * n, k) - binom(2 * n, k - 2));
        b[static_cast<std::size_t>(k)] = v;
        b[static_cast<std::size_t>(2 * n + 1 - k)] = v;
    }
    return b;
}

/// Number of inversions needed to sort the concatenation of two increasing index lists.
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1u) swaps += std::popcount(a >> (i + 1));
    return swaps % 2 ? -1 : 1;
}

/// Exterior derivative of invariant k-forms straight from
/// dα(X_0..X_k) = Σ_{i<j} (-1)^{i+j} α([X_i,X_j], X_0..^i..^j..X_k), bases indexed by increasing masks.
inline Matrix ce_differential(const sasaki::SasakianLieDatum& d, int k) {
    const std::size_t N = d.dim;
    std::vector<std::uint32_t> src, dst;
    for (std::uint32_t m = 0; m < (1u << N); ++m) {
        if (std::popcount(m) == k) src.push_back(m);
        if (std::popcount(m) == k + 1) dst.push_back(m);
    }
    std::vector<Gaussian> c(N * N * N);
    for (const auto& s : d.brackets) {
        c[(s.i * N + s.j) * N + s.k] += s.coeff;
        c[(s.j * N + s.i) * N + s.k] -= s.coeff;
    }
    Matrix out(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < N; ++b)
            if (dst[r] >> b & 1u) idx.push_back(b);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                const std::uint32_t rest = dst[r] & ~(1u << idx[i]) & ~(1u << idx[j]);
                const int sij = (i + j) % 2 ? -1 : 1;
                for (std::size_t l = 0; l < N; ++l) {
                    const Gaussian& cl = c[(idx[i] * N + idx[j]) * N + l];
                    if (cl.is_zero() || (rest >> l & 1u)) continue;
                    // α(e_l, rest...) with the rest in increasing order: sort e_l into place.
                    const std::uint32_t m = rest | (1u << l);
                    const int sort = merge_sign(1u << l, rest);
                    const std::size_t col = static_cast<std::size_t>(std::find(src.begin(), src.end(), m) - src.begin());
                    out(r, col) += Gaussian(sij * sort) * cl;
                }
            }
    }
    return out;
}

/// The rank-1 flat bundle with connection form c·e^a.
inline sasaki::FlatBundleDatum character(std::size_t dim, std::size_t a, const Gaussian& c) {
    auto v = std::vector<Gaussian>(dim);
    v[a] = c;
    return sasaki::FlatBundleDatum::diagonal({v});
}

/// Smallest p with m^p = 0, or 0 when m is not nilpotent within its size.
inline std::size_t nilpotency(const Matrix& m) {
    Matrix p = m;
    for (std::size_t k = 1; k <= m.rows() + 1; ++k) {
        if (p.is_zero()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace oracle
