#include "sasaki/sasakian.hpp"

#include "sasaki/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace sasaki {

std::vector<Gaussian> unit_vector(std::size_t n, std::size_t k) {
    std::vector<Gaussian> v(n);
    v.at(k) = Gaussian(1);
    return v;
}

bool ValidationReport::ok() const {
    for (const auto& a : axioms)
        if (!a.passed) return false;
    return true;
}

const AxiomResult* ValidationReport::find(const std::string& axiom) const {
    for (const auto& a : axioms)
        if (a.axiom == axiom) return &a;
    return nullptr;
}

LieAlgebra::LieAlgebra(const SasakianLieDatum& datum) : dim_(datum.dim), c_(datum.dim * datum.dim * datum.dim) {
    for (const auto& sc : datum.brackets) {
        if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_) throw std::invalid_argument("structure constant index out of range");
        if (sc.i == sc.j) {
            if (!sc.coeff.is_zero()) throw std::invalid_argument("nonzero bracket [e_i, e_i]");
            continue;
        }
        c_[(sc.i * dim_ + sc.j) * dim_ + sc.k] += sc.coeff;
        c_[(sc.j * dim_ + sc.i) * dim_ + sc.k] -= sc.coeff;
    }
}

std::vector<Gaussian> LieAlgebra::bracket(std::span<const Gaussian> x, std::span<const Gaussian> y) const {
    std::vector<Gaussian> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Gaussian xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out[k].add_product(c(i, j, k), xy);
        }
    }
    return out;
}

Matrix LieAlgebra::coadjoint(std::span<const Gaussian> x) const {
    // Column j holds the 1-form α_j = e^j ∘ ad_X, i.e. (e^j∘ad_X)(e_l) = [X, e_l]_j.
    Matrix m(dim_, dim_);
    for (std::size_t l = 0; l < dim_; ++l) {
        const auto bl = bracket(x, unit_vector(dim_, l));
        for (std::size_t j = 0; j < dim_; ++j) m(l, j) = bl[j];
    }
    return m;
}

Matrix LieAlgebra::d_on_one_forms(const ExteriorAlgebra& ext) const {
    // d e^k = -Σ_{i<j} c_ij^k e^i ∧ e^j
    Matrix m(ext.dim(2), dim_);
    for (std::size_t r = 0; r < ext.dim(2); ++r) {
        const std::uint32_t mk = ext.mask(2, r);
        std::size_t i = 0;
        while (!(mk & (1u << i))) ++i;
        std::size_t j = i + 1;
        while (!(mk & (1u << j))) ++j;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!c(i, j, k).is_zero()) m(r, k) = -c(i, j, k);
    }
    return m;
}

bool LieAlgebra::jacobi(std::string* witness) const {
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = a + 1; b < dim_; ++b)
            for (std::size_t c = b + 1; c < dim_; ++c) {
                const auto ea = unit_vector(dim_, a), eb = unit_vector(dim_, b), ec = unit_vector(dim_, c);
                auto s = bracket(ea, bracket(eb, ec));
                const auto t = bracket(eb, bracket(ec, ea));
                const auto u = bracket(ec, bracket(ea, eb));
                bool zero = true;
                for (std::size_t k = 0; k < dim_; ++k) {
                    s[k] += t[k] + u[k];
                    zero = zero && s[k].is_zero();
                }
                if (!zero) {
                    if (witness) *witness = "Jacobi fails on (e" + std::to_string(a) + ", e" + std::to_string(b) + ", e" + std::to_string(c) + ")";
                    return false;
                }
            }
    return true;
}

namespace {

Gaussian dot(std::span<const Gaussian> a, std::span<const Gaussian> b) {
    Gaussian s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s.add_product(a[k], b[k]);
    return s;
}

std::string vec_str(std::span<const Gaussian> v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
    os << ")";
    return os.str();
}

}  // namespace

ValidationReport validate_sasakian(const SasakianLieDatum& datum) {
    ValidationReport rep;
    auto record = [&](std::string axiom, bool passed, std::string witness = {}) {
        rep.axioms.push_back({std::move(axiom), passed, passed ? std::string() : std::move(witness)});
    };
    const std::size_t N = datum.dim;
    const bool shape_ok = N % 2 == 1 && datum.eta.size() == N && datum.xi.size() == N &&
                          datum.complex_structure.rows() == N && datum.complex_structure.cols() == N;
    record("odd_dimension", shape_ok, "dimension must be odd and vectors/matrix must match it");
    if (!shape_ok) return rep;

    const LieAlgebra g(datum);
    std::string w;
    record("jacobi", g.jacobi(&w), w);
    const ExteriorAlgebra ext(N);
    const Matrix d1 = g.d_on_one_forms(ext);
    const auto deta = d1.apply(datum.eta);
    const std::size_t n = datum.n();

    const Gaussian eta_xi = dot(datum.eta, datum.xi);
    record("reeb_normalized", eta_xi == Gaussian(1), "η(ξ) = " + eta_xi.to_string());

    const auto ixi_deta = ext.interior(datum.xi, 2).apply(deta);
    bool zero = true;
    for (const auto& z : ixi_deta) zero = zero && z.is_zero();
    record("reeb_kills_deta", zero, "i_ξ dη = " + vec_str(ixi_deta));

    // η ∧ (dη)^n, a multiple of the top form.
    std::vector<Gaussian> top = datum.eta;
    for (std::size_t k = 0; k < n; ++k) top = ext.wedge(static_cast<int>(2 * k + 1), top, 2, deta);
    const Gaussian vol = top.empty() ? Gaussian(0) : top.front();
    const int sign = vol.is_zero() ? 0 : (sgn(vol.re()) > 0 ? 1 : -1);
    const bool real_vol = vol.is_real();
    record("contact", sign != 0 && real_vol && (datum.orientation == 0 || datum.orientation == sign),
           "η∧(dη)^n = " + vol.to_string() + " * e0..e" + std::to_string(N - 1) +
               (datum.orientation ? ", declared orientation " + std::to_string(datum.orientation) : ""));

    const Matrix& I = datum.complex_structure;
    bool ixi0 = true;
    for (const auto& z : I.apply(datum.xi)) ixi0 = ixi0 && z.is_zero();
    record("complex_structure_kills_reeb", ixi0, "I(ξ) = " + vec_str(I.apply(datum.xi)));

    // S = ker η, as columns.
    Matrix eta_row(1, N);
    for (std::size_t k = 0; k < N; ++k) eta_row(0, k) = datum.eta[k];
    const Matrix S = kernel_basis(eta_row);
    const Matrix IS = I * S;
    const bool preserves = (eta_row * IS).is_zero();
    const bool square = (I * IS + S).is_zero();
    record("complex_structure_on_contact_distribution", preserves && square,
           preserves ? "I^2 != -Id on ker η" : "I does not preserve ker η");

    // T^{1,0}: +i eigenvectors of I inside S ⊗ C.
    const Matrix shifted = IS - S * Gaussian::i();
    const Matrix T10 = S * kernel_basis(shifted);
    record("cr_rank", T10.cols() == n, "dim T^{1,0} = " + std::to_string(T10.cols()) + ", expected " + std::to_string(n));
    const Subspace t10 = Subspace::span(T10);
    bool integrable = true;
    std::string integ_w;
    for (std::size_t a = 0; a < T10.cols() && integrable; ++a)
        for (std::size_t b = a + 1; b < T10.cols() && integrable; ++b) {
            const auto br = g.bracket(T10.col(a), T10.col(b));
            if (!t10.contains(br)) {
                integrable = false;
                integ_w = "[Z" + std::to_string(a) + ", Z" + std::to_string(b) + "] = " + vec_str(br) + " not in T^{1,0}";
            }
        }
    record("cr_integrable", integrable, integ_w);
    bool reeb_cr = true;
    std::string reeb_w;
    for (std::size_t a = 0; a < T10.cols() && reeb_cr; ++a) {
        const auto br = g.bracket(datum.xi, T10.col(a));
        if (!t10.contains(br)) {
            reeb_cr = false;
            reeb_w = "[ξ, Z" + std::to_string(a) + "] = " + vec_str(br) + " not in T^{1,0}";
        }
    }
    record("reeb_preserves_cr", reeb_cr, reeb_w);

    // L_η(X, Y) = dη(X, IY) on S: symmetric, real, positive definite.
    const std::size_t s = S.cols();
    Matrix L(s, s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) L(a, b) = ext.evaluate2(deta, S.col(a), IS.col(b));
    bool symmetric = L == L.transpose();
    bool real = true;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) real = real && L(a, b).is_real();
    bool positive = symmetric && real;
    std::string pos_w = symmetric ? (real ? "" : "L_η has non-real entries") : "L_η is not symmetric";
    for (std::size_t k = 1; positive && k <= s; ++k) {
        const Gaussian minor = determinant(L.block(0, 0, k, k));
        if (!(minor.is_real() && sgn(minor.re()) > 0)) {
            positive = false;
            pos_w = "leading principal minor " + std::to_string(k) + " = " + minor.to_string();
        }
    }
    record("strongly_pseudoconvex", positive, pos_w);
    return rep;
}

CEComplex::CEComplex(const SasakianLieDatum& datum) : datum_(datum), algebra_(datum), ext_(datum.dim) {
    const Matrix d1 = algebra_.d_on_one_forms(ext_);
    const int N = static_cast<int>(datum.dim);
    GradedVectorSpace spaces;
    for (int k = 0; k <= N; ++k) {
        spaces.dims.push_back(ext_.dim(k));
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < ext_.dim(k); ++i) labels.push_back(ext_.label(k, i));
        spaces.labels.push_back(std::move(labels));
    }
    for (int k = 0; k < N; ++k) d_.push_back(ext_.odd_derivation_extension(d1, k));
    d_.emplace_back(0, ext_.dim(N));
    std::vector<Matrix> ds(d_.begin(), d_.end() - 1);
    // The CochainComplex constructor rejects d∘d != 0, which is how a Jacobi
    // failure surfaces here.
    complex_ = CochainComplex(std::move(spaces), std::move(ds));
}

Matrix CEComplex::lie_derivative(std::span<const Gaussian> x, int k) const {
    // (L_X α)(Y) = -α([X, Y]) on invariant 1-forms.
    return ext_.derivation_extension(-algebra_.coadjoint(x), k);
}

bool CEComplex::cartan_formula_holds(std::string* witness) const {
    const int N = static_cast<int>(datum_.dim);
    for (std::size_t a = 0; a < datum_.dim; ++a) {
        const auto x = unit_vector(datum_.dim, a);
        for (int k = 0; k <= N; ++k) {
            Matrix rhs = ext_.interior(x, k + 1) * d(k);
            if (k > 0) rhs += d(k - 1) * ext_.interior(x, k);
            if (!(lie_derivative(x, k) == rhs)) {
                if (witness) *witness = "L_X != d i_X + i_X d for X = e" + std::to_string(a) + " in degree " + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool CEComplex::wedge_axioms_hold() const {
    const int N = static_cast<int>(datum_.dim);
    // wedge() on basis pairs must agree with the sign rule, which is then checked on masks.
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            for (std::size_t i = 0; i < ext_.dim(p); ++i)
                for (std::size_t j = 0; j < ext_.dim(q); ++j) {
                    const std::uint32_t a = ext_.mask(p, i), b = ext_.mask(q, j);
                    const auto ab = ext_.wedge(p, unit_vector(ext_.dim(p), i), q, unit_vector(ext_.dim(q), j));
                    const int s = ExteriorAlgebra::wedge_sign(a, b);
                    for (std::size_t k = 0; k < ab.size(); ++k) {
                        const bool hit = s != 0 && ext_.mask(p + q, k) == (a | b);
                        if (!(ab[k] == Gaussian(hit ? s : 0))) return false;
                    }
                    if (s != ((p * q) % 2 ? -1 : 1) * ExteriorAlgebra::wedge_sign(b, a)) return false;
                }
    const std::uint32_t full = (1u << N) - 1;
    for (std::uint32_t a = 0; a <= full; ++a)
        for (std::uint32_t b = full & ~a;; b = (b - 1) & ~a & full) {
            for (std::uint32_t c = full & ~(a | b);; c = (c - 1) & ~(a | b) & full) {
                if (ExteriorAlgebra::wedge_sign(a, b) * ExteriorAlgebra::wedge_sign(a | b, c) !=
                    ExteriorAlgebra::wedge_sign(b, c) * ExteriorAlgebra::wedge_sign(a, b | c))
                    return false;
                if (c == 0) break;
            }
            if (b == 0) break;
        }
    return true;
}

CEComplex build_ce(const SasakianLieDatum& datum) { return CEComplex(datum); }

}  // namespace sasaki
