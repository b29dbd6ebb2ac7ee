#include "sasaki/group.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace sasaki {

namespace {

bool is_inverse_letter(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

/// Ad_M on row-major vec: X ↦ M X M^{-1}.
Matrix ad(const Matrix& m) { return kron(m, inverse(m).transpose()); }

/// Polynomial of degree <= 2 in nv variables.
struct Poly {
    Gaussian c;
    std::vector<Gaussian> lin;
    Matrix quad;

    explicit Poly(std::size_t nv, Gaussian constant = Gaussian()) : c(std::move(constant)), lin(nv), quad(nv, nv) {}
};

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix constant(const Matrix& m, std::size_t nv) {
    PolyMatrix p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        p.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j) p.back().emplace_back(nv, m(i, j));
    }
    return p;
}

void add_product(Poly& out, const Poly& a, const Poly& b) {
    const std::size_t nv = out.lin.size();
    out.c.add_product(a.c, b.c);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!b.lin[v].is_zero()) out.lin[v].add_product(a.c, b.lin[v]);
        if (!a.lin[v].is_zero()) out.lin[v].add_product(b.c, a.lin[v]);
    }
    if (!a.c.is_zero() && !b.quad.is_zero()) out.quad += b.quad * a.c;
    if (!b.c.is_zero() && !a.quad.is_zero()) out.quad += a.quad * b.c;
    for (std::size_t v = 0; v < nv; ++v) {
        if (a.lin[v].is_zero()) continue;
        for (std::size_t w = 0; w < nv; ++w)
            if (!b.lin[w].is_zero()) out.quad(v, w).add_product(a.lin[v], b.lin[w]);
    }
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t nv) {
    const std::size_t m = a.size();
    PolyMatrix out(m, std::vector<Poly>(m, Poly(nv)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j) add_product(out[i][j], a[i][k], b[k][j]);
    return out;
}

/// I + s U + U^2/2 where U = (u_{g,ij}).
PolyMatrix truncated_exp(std::size_t g, std::size_t m, std::size_t nv, int s) {
    const std::size_t base = g * m * m;
    PolyMatrix e(m, std::vector<Poly>(m, Poly(nv)));
    const Gaussian half(Rational(1, 2));
    for (std::size_t i = 0; i < m; ++i) {
        e[i][i].c = Gaussian(1);
        for (std::size_t j = 0; j < m; ++j) {
            e[i][j].lin[base + i * m + j] = Gaussian(s);
            for (std::size_t k = 0; k < m; ++k) e[i][j].quad(base + i * m + k, base + k * m + j) += half;
        }
    }
    return e;
}

Matrix symmetrize(const Matrix& q) { return (q + q.transpose()) * Gaussian(Rational(1, 2)); }

/// Column vector of a square matrix, row-major.
std::vector<Gaussian> vec(const Matrix& m) {
    std::vector<Gaussian> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Subspace span_of_forms(const std::vector<Matrix>& forms, std::size_t h) {
    Matrix cols(h * h, forms.size());
    for (std::size_t c = 0; c < forms.size(); ++c) cols.set_col(c, vec(forms[c]));
    return forms.empty() ? Subspace(h * h) : Subspace::span(cols);
}

}  // namespace

std::size_t GroupPresentation::index(char letter) const {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].size() == 1 && generators[i][0] == lower) return i;
    throw std::invalid_argument(std::string("unknown generator letter '") + letter + "'");
}

void GroupPresentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
            throw std::invalid_argument("generator label '" + g + "' is not a single lowercase letter");
        if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
    }
    for (const auto& r : relators) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            index(r[i]);
            if (i + 1 < r.size() && r[i] != r[i + 1] &&
                std::tolower(static_cast<unsigned char>(r[i])) == std::tolower(static_cast<unsigned char>(r[i + 1])))
                throw std::invalid_argument("relator '" + r + "' is not freely reduced");
        }
    }
}

Representation Representation::trivial(const GroupPresentation& gp, std::size_t rank) {
    Representation r;
    r.rank = rank;
    for (const auto& g : gp.generators) r.images[g] = Matrix::identity(rank);
    return r;
}

Matrix Representation::evaluate(const GroupPresentation& gp, const std::string& word) const {
    Matrix out = Matrix::identity(rank);
    for (char c : word) {
        const auto& g = gp.generators[gp.index(c)];
        const auto it = images.find(g);
        if (it == images.end()) throw std::invalid_argument("no image for generator '" + g + "'");
        out = out * (is_inverse_letter(c) ? inverse(it->second) : it->second);
    }
    return out;
}

void Representation::validate(const GroupPresentation& gp) const {
    for (const auto& g : gp.generators) {
        const auto it = images.find(g);
        if (it == images.end()) throw std::invalid_argument("no image for generator '" + g + "'");
        if (it->second.rows() != rank || it->second.cols() != rank)
            throw std::invalid_argument("image of '" + g + "' has the wrong size");
        if (determinant(it->second).is_zero()) throw std::invalid_argument("image of '" + g + "' is not invertible");
    }
    const Matrix id = Matrix::identity(rank);
    for (const auto& r : gp.relators)
        if (!(evaluate(gp, r) == id)) throw std::invalid_argument("relator '" + r + "' does not map to the identity");
}

FoxTangent fox_tangent(const GroupPresentation& gp, const Representation& rho) {
    gp.validate();
    rho.validate(gp);
    FoxTangent t;
    const std::size_t m = rho.rank, mm = m * m, G = gp.generators.size(), nv = G * mm;
    for (const auto& g : gp.generators)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                t.variables.push_back("u_" + g + "[" + std::to_string(i) + "," + std::to_string(j) + "]");

    // v(w g) = Ad_{ρ(g)^{-1}} v(w) + v(g), v(g) = u_g, v(g^{-1}) = -Ad_{ρ(g)} u_g.
    t.jacobian = Matrix(gp.relators.size() * mm, nv);
    for (std::size_t r = 0; r < gp.relators.size(); ++r) {
        Matrix v(mm, nv);
        for (char c : gp.relators[r]) {
            const std::size_t g = gp.index(c);
            const Matrix& img = rho.images.at(gp.generators[g]);
            const Matrix letter = is_inverse_letter(c) ? inverse(img) : img;
            v = ad(inverse(letter)) * v;
            const Matrix u = is_inverse_letter(c) ? -ad(img) : Matrix::identity(mm);
            for (std::size_t i = 0; i < mm; ++i)
                for (std::size_t j = 0; j < mm; ++j) v(i, g * mm + j) += u(i, j);
        }
        t.jacobian.set_block(r * mm, 0, v);
    }
    t.cocycles = gp.relators.empty() ? Subspace::full(nv) : kernel(t.jacobian);

    // X ↦ (X - Ad_{ρ(g)^{-1}} X)_g.
    Matrix principal(nv, mm);
    for (std::size_t g = 0; g < G; ++g)
        principal.set_block(g * mm, 0, Matrix::identity(mm) - ad(inverse(rho.images.at(gp.generators[g]))));
    t.coboundaries = image(principal);
    t.cohomology = quotient_basis(t.cocycles, t.coboundaries);
    t.z1 = t.cocycles.dim();
    t.b1 = t.coboundaries.dim();
    t.h1 = t.cohomology.cols();
    return t;
}

MCConstraintSystem relator_order2(const GroupPresentation& gp, const Representation& rho) {
    gp.validate();
    rho.validate(gp);
    MCConstraintSystem s;
    const std::size_t m = rho.rank, mm = m * m, nv = gp.generators.size() * mm;
    for (const auto& g : gp.generators)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                s.variables.push_back("u_" + g + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
    s.linear_part = Matrix(gp.relators.size() * mm, nv);
    for (std::size_t r = 0; r < gp.relators.size(); ++r) {
        const auto& word = gp.relators[r];
        PolyMatrix p = constant(Matrix::identity(m), nv);
        for (char c : word) {
            const std::size_t g = gp.index(c);
            const Matrix& img = rho.images.at(gp.generators[g]);
            // ρ(g) e^{U}  and  (ρ(g) e^{U})^{-1} = e^{-U} ρ(g)^{-1}.
            if (is_inverse_letter(c))
                p = multiply(multiply(p, truncated_exp(g, m, nv, -1), nv), constant(inverse(img), nv), nv);
            else
                p = multiply(multiply(p, constant(img, nv), nv), truncated_exp(g, m, nv, 1), nv);
        }
        // Relators hold at ρ, so ρ(w)^{-1} = I and the constant term is I.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t row = r * mm + i * m + j;
                s.targets.push_back(word + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
                for (std::size_t v = 0; v < nv; ++v) s.linear_part(row, v) = p[i][j].lin[v];
                s.quadratic_part.push_back(symmetrize(p[i][j].quad));
            }
    }
    return s;
}

VarietyComparison compare_cone_with_variety(const GermModelDGLA& g, const TwistedComplex& end_tc,
                                            const GroupPresentation& gp, const Representation& rho,
                                            const std::map<std::string, int>& matching) {
    VarietyComparison rep;
    const FoxTangent fox = fox_tangent(gp, rho);
    const MCConstraintSystem order2 = relator_order2(gp, rho);
    const std::size_t m = rho.rank, mm = m * m;
    if (g.fiber_rank != m)
        throw DimensionMismatch("fiber rank " + std::to_string(g.fiber_rank) + " of the model against representation rank " +
                                std::to_string(m));

    const Subspace lin_kernel = gp.relators.empty() ? Subspace::full(order2.variables.size()) : kernel(order2.linear_part);
    rep.linear_blocks_agree = lin_kernel == fox.cocycles;
    rep.checks.push_back(make_check("repvar.linear_blocks", "Z¹ from the Fox Jacobian = kernel of the order-1 expansion",
                                    rep.linear_blocks_agree));

    const CochainComplex cone = g.dgla.underlying_complex();
    rep.fox_h1 = fox.h1;
    rep.model_h1 = cohomology(cone, 1).dim;
    rep.dims_agree = rep.fox_h1 == rep.model_h1;
    rep.checks.push_back(make_check("repvar.h1_dims", "dim H¹(π₁, ad ρ) = dim H¹ of the model",
                                    rep.dims_agree,
                                    std::to_string(rep.fox_h1) + " vs " + std::to_string(rep.model_h1)));
    if (!rep.dims_agree)
        throw DimensionMismatch("H¹ dimensions differ: group " + std::to_string(rep.fox_h1) + ", model " +
                                std::to_string(rep.model_h1));

    // Identification of the group H¹ representatives with H¹_B(End E).
    const std::size_t h = fox.h1, h1b = g.h(1);
    const auto h1 = cohomology(end_tc.complex(), 1);
    Matrix M(h1b, h);
    for (std::size_t c = 0; c < h; ++c) {
        const auto z = fox.cohomology.col(c);
        std::vector<Gaussian> form(end_tc.full_dim(1));
        for (std::size_t gi = 0; gi < gp.generators.size(); ++gi) {
            const auto it = matching.find(gp.generators[gi]);
            const int idx = it == matching.end() ? -1 : it->second;
            for (std::size_t x = 0; x < mm; ++x) {
                const Gaussian& u = z[gi * mm + x];
                if (u.is_zero()) continue;
                if (idx < 0)
                    throw DimensionMismatch("generator '" + gp.generators[gi] + "' carries a tangent component but has no matching 1-form");
                form[static_cast<std::size_t>(idx) * mm + x] += u;
            }
        }
        const auto coords = end_tc.retraction(1).apply(form);
        if (end_tc.inclusion(1).apply(coords) != form) throw DimensionMismatch("matched 1-form is not basic");
        for (const auto& dz : end_tc.D(1).apply(coords))
            if (!dz.is_zero()) throw DimensionMismatch("matched 1-form is not closed");
        if (h1b) M.set_col(c, h1.projection.apply(coords));
    }
    if (rank(M) != h || h != h1b) throw DimensionMismatch("the matching is not an isomorphism onto H¹_B");

    // Group side: forms Σ λ_c Q_c with λ ⟂ im(linear part), restricted to H¹ representatives.
    std::vector<Matrix> fox_forms;
    if (!gp.relators.empty()) {
        const Matrix lambdas = kernel_basis(order2.linear_part.transpose());
        for (std::size_t l = 0; l < lambdas.cols(); ++l) {
            Matrix q(order2.variables.size(), order2.variables.size());
            for (std::size_t c = 0; c < order2.targets.size(); ++c)
                if (!lambdas(c, l).is_zero()) q += order2.quadratic_part[c] * lambdas(c, l);
            fox_forms.push_back(symmetrize(fox.cohomology.transpose() * q * fox.cohomology));
        }
    }
    // Model side: quadratic block with β eliminated, pulled back along the matching.
    const MCCone mc = mc_cone(g);
    const auto& qb = mc.quadratic_block;
    std::vector<Matrix> model_forms;
    if (!qb.targets.empty()) {
        const Matrix mus = kernel_basis(qb.linear_part.transpose());
        for (std::size_t l = 0; l < mus.cols(); ++l) {
            Matrix q(h1b, h1b);
            for (std::size_t c = 0; c < qb.targets.size(); ++c)
                if (!mus(c, l).is_zero()) q += qb.quadratic_part[c].block(0, 0, h1b, h1b) * mus(c, l);
            model_forms.push_back(symmetrize(M.transpose() * q * M));
        }
    }
    const Subspace fi = span_of_forms(fox_forms, h), mi = span_of_forms(model_forms, h);
    rep.fox_ideal_dim = fi.dim();
    rep.model_ideal_dim = mi.dim();
    rep.ideals_agree = fi == mi;
    rep.checks.push_back(make_check("repvar.quadratic_ideals", "order-2 relator ideal = quadratic-block ideal",
                                    rep.ideals_agree,
                                    "quadrics: group " + std::to_string(rep.fox_ideal_dim) + ", model " +
                                        std::to_string(rep.model_ideal_dim)));

    rep.augmentation_rank = g.augmentation_rank;
    rep.fiber_dim = mm;
    rep.quotient_trivial = rep.augmentation_rank == mm;
    bool trivial_rho = true;
    for (const auto& [name, img] : rho.images) trivial_rho = trivial_rho && img == Matrix::identity(m);
    const std::string aug = "dim ε(L⁰) = " + std::to_string(rep.augmentation_rank) + " in End(E_x) of dim " + std::to_string(mm);
    if (trivial_rho)
        rep.checks.push_back(make_check("repvar.augmentation", "End(E_x)/ε(L⁰) = 0", rep.quotient_trivial, aug));
    else
        rep.checks.push_back(make_info("repvar.augmentation", "End(E_x)/ε(L⁰)", aug));
    return rep;
}

}  // namespace sasaki
