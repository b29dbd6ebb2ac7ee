#include "sasaki/metric.hpp"

#include <stdexcept>

namespace sasaki {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

Matrix gram_adjoint(const Matrix& a, const Matrix& gs, const Matrix& gt) {
    if (a.empty()) return Matrix(a.cols(), a.rows());
    return inverse(gs) * a.adjoint() * gt;
}

bool positive_definite(const Matrix& h) {
    if (!h.is_square() || !(h == h.adjoint())) return false;
    for (std::size_t k = 1; k <= h.rows(); ++k) {
        const Gaussian m = determinant(h.block(0, 0, k, k));
        if (!m.is_real() || sgn(m.re()) <= 0) return false;
    }
    return true;
}

ContactMetric contact_metric(const CEComplex& ce) {
    const auto& datum = ce.datum();
    const auto& ext = ce.ext();
    const std::size_t N = datum.dim;
    const auto deta = ce.d_eta();
    ContactMetric m;
    m.g = Matrix(N, N);
    const Matrix& I = datum.complex_structure;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            m.g(a, b) = ext.evaluate2(deta, unit_vector(N, a), I.col(b)) + datum.eta[a] * datum.eta[b];
    if (!positive_definite(m.g)) throw std::domain_error("contact metric is not positive definite");

    std::vector<Gaussian> top = datum.eta;
    for (std::size_t k = 0; k < datum.n(); ++k) top = ext.wedge(static_cast<int>(2 * k + 1), top, 2, deta);
    m.orientation = sgn(top.front().re()) >= 0 ? 1 : -1;
    if (datum.orientation != 0 && datum.orientation != m.orientation)
        throw std::domain_error("declared orientation disagrees with η∧(dη)^n");

    const Matrix ginv = inverse(m.g);
    m.volume_factor = rational_sqrt(determinant(m.g).re());
    for (int k = 0; k <= static_cast<int>(N); ++k) {
        const std::size_t dk = ext.dim(k);
        Matrix gk(dk, dk);
        std::vector<std::vector<std::size_t>> idx(dk);
        for (std::size_t r = 0; r < dk; ++r)
            for (std::size_t b = 0; b < N; ++b)
                if (ext.mask(k, r) & (1u << b)) idx[r].push_back(b);
        for (std::size_t r = 0; r < dk; ++r)
            for (std::size_t c = r; c < dk; ++c) {
                Matrix minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
                for (std::size_t i = 0; i < idx[r].size(); ++i)
                    for (std::size_t j = 0; j < idx[c].size(); ++j) minor(i, j) = ginv(idx[r][i], idx[c][j]);
                gk(r, c) = k == 0 ? Gaussian(1) : determinant(minor);
                gk(c, r) = gk(r, c);
            }
        m.gram.push_back(std::move(gk));
    }
    return m;
}

Matrix hodge_star(const CEComplex& ce, const ContactMetric& metric, int k) {
    if (!metric.volume_factor) throw std::domain_error("Hodge star needs a rational volume factor");
    const auto& ext = ce.ext();
    const int N = static_cast<int>(ext.n());
    const std::uint32_t full = (ext.n() >= 32) ? ~0u : ((1u << ext.n()) - 1);
    const Gaussian v = Gaussian(*metric.volume_factor) * Gaussian(metric.orientation);
    Matrix star(ext.dim(N - k), ext.dim(k));
    const Matrix& gk = metric.gram.at(static_cast<std::size_t>(k));
    for (std::size_t jp = 0; jp < ext.dim(k); ++jp) {
        const std::uint32_t m = ext.mask(k, jp);
        const int s = ExteriorAlgebra::wedge_sign(m, full & ~m);
        const std::size_t row = ext.index(full & ~m);
        for (std::size_t j = 0; j < ext.dim(k); ++j) {
            if (gk(jp, j).is_zero()) continue;
            star(row, j) = s > 0 ? v * gk(jp, j) : -(v * gk(jp, j));
        }
    }
    return star;
}

}  // namespace sasaki
