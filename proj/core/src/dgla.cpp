#include "sasaki/dgla.hpp"

#include <stdexcept>

namespace sasaki {

namespace {

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::vector<Gaussian> unit(std::size_t n, std::size_t i) {
    std::vector<Gaussian> v(n);
    v[i] = Gaussian(1);
    return v;
}

std::vector<Gaussian> scaled(std::vector<Gaussian> v, int s) {
    if (s < 0)
        for (auto& z : v) z = -z;
    return v;
}

void accumulate(std::vector<Gaussian>& acc, const std::vector<Gaussian>& v) {
    if (acc.empty()) acc.resize(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) acc[k] += v[k];
}

bool all_zero(const std::vector<Gaussian>& v) {
    for (const auto& z : v)
        if (!z.is_zero()) return false;
    return true;
}

}  // namespace

DGLAModel::DGLAModel(GradedVectorSpace spaces, std::vector<Matrix> differential,
                     std::map<std::pair<int, int>, Matrix> bracket)
    : spaces_(std::move(spaces)), d_(std::move(differential)), bracket_(std::move(bracket)) {
    d_.resize(static_cast<std::size_t>(std::max(top(), 0)));
    for (int k = 0; k < top(); ++k) {
        auto& m = d_[static_cast<std::size_t>(k)];
        if (m.rows() == 0 && m.cols() == 0) m = Matrix(dim(k + 1), dim(k));
        if (m.rows() != dim(k + 1) || m.cols() != dim(k)) throw std::invalid_argument("DGLA differential shape");
    }
    for (const auto& [deg, m] : bracket_) {
        if (m.rows() != dim(deg.first + deg.second) || m.cols() != dim(deg.first) * dim(deg.second))
            throw std::invalid_argument("DGLA bracket tensor shape");
        auto& cols = sparse_[deg];
        cols.resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
    }
}

Matrix DGLAModel::d(int k) const {
    if (k < 0 || k >= top()) return Matrix(dim(k + 1), dim(k));
    return d_[static_cast<std::size_t>(k)];
}

Matrix DGLAModel::bracket_tensor(int a, int b) const {
    auto it = bracket_.find({a, b});
    if (it == bracket_.end()) return Matrix(dim(a + b), dim(a) * dim(b));
    return it->second;
}

std::vector<Gaussian> DGLAModel::bracket(int a, std::span<const Gaussian> x, int b, std::span<const Gaussian> y) const {
    std::vector<Gaussian> out(dim(a + b));
    auto it = sparse_.find({a, b});
    if (it == sparse_.end() || out.empty()) return out;
    const auto& cols = it->second;
    const std::size_t nb = dim(b);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            const auto& col = cols[i * nb + j];
            if (col.empty()) continue;
            const Gaussian c = x[i] * y[j];
            for (const auto& [r, v] : col) out[r].add_product(v, c);
        }
    }
    return out;
}

const DGLAModel::SparseColumn& DGLAModel::bracket_column(int a, int b, std::size_t i, std::size_t j) const {
    static const SparseColumn empty;
    auto it = sparse_.find({a, b});
    if (it == sparse_.end()) return empty;
    return it->second[i * dim(b) + j];
}

const std::vector<DGLAModel::SparseColumn>* DGLAModel::bracket_columns(int a, int b) const {
    auto it = sparse_.find({a, b});
    return it == sparse_.end() ? nullptr : &it->second;
}

CochainComplex DGLAModel::underlying_complex() const { return CochainComplex(spaces_, d_); }

DGLAReport check_dgla(const DGLAModel& g) {
    DGLAReport rep;
    const int top = g.top();
    auto fail = [&](const char* axiom, std::vector<std::pair<int, std::size_t>> basis) {
        if (!rep.first_violation) rep.first_violation = DGLAViolation{axiom, std::move(basis)};
    };

    // Antisymmetry: [x, y] = -(-1)^{ab} [y, x].
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b <= top; ++b)
            for (std::size_t i = 0; i < g.dim(a); ++i)
                for (std::size_t j = 0; j < g.dim(b); ++j) {
                    const auto x = unit(g.dim(a), i);
                    const auto y = unit(g.dim(b), j);
                    auto lhs = g.bracket(a, x, b, y);
                    const auto rhs = scaled(g.bracket(b, y, a, x), -sign_of(a * b));
                    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
                    if (!all_zero(lhs)) {
                        rep.antisymmetry = false;
                        fail("antisymmetry", {{a, i}, {b, j}});
                    }
                }

    // Jacobi: (-1)^{ac}[x,[y,z]] + (-1)^{ba}[y,[z,x]] + (-1)^{cb}[z,[x,y]] = 0.
    std::vector<Gaussian> acc;
    std::vector<std::size_t> touched;
    using Cols = std::vector<DGLAModel::SparseColumn>;
    auto add_term = [&](const Cols* inner, const Cols* outer, std::size_t xi, std::size_t yi, std::size_t zi,
                        std::size_t dim_z, std::size_t dim_inner, int s) {
        if (!inner || !outer) return;
        for (const auto& [r, v] : (*inner)[yi * dim_z + zi])
            for (const auto& [q, w] : (*outer)[xi * dim_inner + r]) {
                if (acc[q].is_zero()) touched.push_back(q);
                acc[q].add_product(v, s > 0 ? w : -w);
            }
    };
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b <= top; ++b)
            for (int c = 0; a + b + c <= top; ++c) {
                acc.assign(g.dim(a + b + c), Gaussian());
                const Cols *bc = g.bracket_columns(b, c), *a_bc = g.bracket_columns(a, b + c);
                const Cols *ca = g.bracket_columns(c, a), *b_ca = g.bracket_columns(b, c + a);
                const Cols *ab = g.bracket_columns(a, b), *c_ab = g.bracket_columns(c, a + b);
                if (!(bc && a_bc) && !(ca && b_ca) && !(ab && c_ab)) continue;
                for (std::size_t i = 0; i < g.dim(a); ++i)
                    for (std::size_t j = 0; j < g.dim(b); ++j)
                        for (std::size_t k = 0; k < g.dim(c); ++k) {
                            touched.clear();
                            add_term(bc, a_bc, i, j, k, g.dim(c), g.dim(b + c), sign_of(a * c));
                            add_term(ca, b_ca, j, k, i, g.dim(a), g.dim(c + a), sign_of(b * a));
                            add_term(ab, c_ab, k, i, j, g.dim(b), g.dim(a + b), sign_of(c * b));
                            bool zero = true;
                            for (auto q : touched) {
                                zero = zero && acc[q].is_zero();
                                acc[q] = Gaussian();
                            }
                            if (!zero) {
                                rep.jacobi = false;
                                fail("jacobi", {{a, i}, {b, j}, {c, k}});
                            }
                        }
            }

    // Leibniz: d[x, y] = [dx, y] + (-1)^a [x, dy].
    for (int a = 0; a <= top; ++a)
        for (int b = 0; a + b + 1 <= top; ++b)
            for (std::size_t i = 0; i < g.dim(a); ++i)
                for (std::size_t j = 0; j < g.dim(b); ++j) {
                    const auto x = unit(g.dim(a), i);
                    const auto y = unit(g.dim(b), j);
                    auto lhs = g.d(a + b).apply(g.bracket(a, x, b, y));
                    const auto dx = g.d(a).apply(x);
                    const auto dy = g.d(b).apply(y);
                    const auto r1 = g.bracket(a + 1, dx, b, y);
                    const auto r2 = scaled(g.bracket(a, x, b + 1, dy), sign_of(a));
                    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= r1[k] + r2[k];
                    if (!all_zero(lhs)) {
                        rep.leibniz = false;
                        fail("leibniz", {{a, i}, {b, j}});
                    }
                }
    return rep;
}

MCConstraintSystem mc_system(const DGLAModel& g) {
    MCConstraintSystem s;
    const std::size_t n1 = g.dim(1);
    const std::size_t n2 = g.dim(2);
    const auto& labels = g.spaces().labels;
    for (std::size_t i = 0; i < n1; ++i)
        s.variables.push_back(labels.size() > 1 && labels[1].size() == n1 ? labels[1][i] : "w" + std::to_string(i));
    for (std::size_t c = 0; c < n2; ++c)
        s.targets.push_back(labels.size() > 2 && labels[2].size() == n2 ? labels[2][c] : "t" + std::to_string(c));
    s.linear_part = g.d(1);
    const Matrix t = g.bracket_tensor(1, 1);
    const Gaussian half(Rational(1, 2));
    for (std::size_t c = 0; c < n2; ++c) {
        Matrix q(n1, n1);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                if (!t(c, i * n1 + j).is_zero()) q(i, j) = half * t(c, i * n1 + j);
        s.quadratic_part.push_back(std::move(q));
    }
    return s;
}

std::vector<Gaussian> MCConstraintSystem::evaluate(std::span<const Gaussian> w) const {
    std::vector<Gaussian> out = linear_part.rows() ? linear_part.apply(w) : std::vector<Gaussian>(targets.size());
    for (std::size_t c = 0; c < quadratic_part.size(); ++c) {
        const auto qw = quadratic_part[c].apply(w);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero() && !qw[i].is_zero()) out[c].add_product(w[i], qw[i]);
    }
    return out;
}

bool MCConstraintSystem::is_solution(std::span<const Gaussian> w) const { return all_zero(evaluate(w)); }

std::vector<std::size_t> MCConstraintSystem::trivial_equations() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < targets.size(); ++c) {
        bool zero = quadratic_part[c].is_zero();
        for (std::size_t i = 0; zero && i < linear_part.cols(); ++i) zero = linear_part(c, i).is_zero();
        if (zero) out.push_back(c);
    }
    return out;
}

}  // namespace sasaki
