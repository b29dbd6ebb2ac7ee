#include "sasaki/basic.hpp"

#include <functional>
#include <sstream>

namespace sasaki {

namespace {

Matrix zero_op(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

std::string degree_list(const std::vector<int>& degrees) {
    std::ostringstream os;
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    return os.str();
}

}  // namespace

BasicComplex::BasicComplex(const CEComplex& ce, FlatBundleDatum bundle)
    : ce_(ce), bundle_(std::move(bundle)), metric_(contact_metric(ce)) {
    const std::size_t N = ce_.datum().dim;
    const int top_full = static_cast<int>(N);
    if (bundle_.rank == 0) throw BundleError("bundle rank must be positive");
    if (bundle_.connection.empty()) bundle_.connection.assign(N, Matrix(bundle_.rank, bundle_.rank));
    if (bundle_.metric.rows() == 0) bundle_.metric = Matrix::identity(bundle_.rank);
    if (bundle_.connection.size() != N) throw BundleError("connection form has the wrong number of components");
    for (const auto& c : bundle_.connection)
        if (c.rows() != bundle_.rank || c.cols() != bundle_.rank) throw BundleError("connection coefficient has the wrong size");
    if (!positive_definite(bundle_.metric)) throw BundleError("bundle metric is not Hermitian positive definite");

    const std::size_t m = bundle_.rank;
    const Matrix Im = Matrix::identity(m);

    // Full twisted complex.
    GradedVectorSpace full_spaces;
    for (int k = 0; k <= top_full; ++k) {
        full_spaces.dims.push_back(full_dim(k));
        full_gram_.push_back(kron(metric_.gram[static_cast<std::size_t>(k)], bundle_.metric));
    }
    for (int k = 0; k < top_full; ++k)
        full_d_.push_back(kron(ce_.d(k), Im) + full_form_wedge(bundle_.connection, k));
    for (int k = 0; k + 1 < top_full; ++k)
        if (!(full_d_[static_cast<std::size_t>(k + 1)] * full_d_[static_cast<std::size_t>(k)]).is_zero())
            throw BundleError("connection is not flat: D∘D != 0 on degree " + std::to_string(k));
    full_ = CochainComplex(full_spaces, full_d_);

    harmonic_ = harmonic_split(bundle_);
    Matrix phi_xi(m, m);
    for (std::size_t a = 0; a < N; ++a)
        if (!ce_.datum().xi[a].is_zero()) phi_xi += harmonic_.phi[a] * ce_.datum().xi[a];
    if (!phi_xi.is_zero()) throw BundleError("φ(ξ) != 0: the metric is not basic");

    // Basic forms: ker i_ξ ∩ ker (L_ξ + A(ξ)).
    const int T = top();
    for (int k = 0; k <= T; ++k) {
        const Matrix cond = vstack(full_interior(ce_.datum().xi, k), covariant_lie(ce_.datum().xi, k));
        incl_.push_back(kernel_basis(cond));
        retr_.push_back(left_inverse(incl_.back()));
        gram_.push_back(incl_.back().adjoint() * full_gram_[static_cast<std::size_t>(k)] * incl_.back());
    }
    for (int k = T + 1; k <= top_full; ++k) {
        const Matrix cond = vstack(full_interior(ce_.datum().xi, k), covariant_lie(ce_.datum().xi, k));
        if (kernel_basis(cond).cols() != 0) throw BundleError("basic forms above the transverse dimension");
    }

    GradedVectorSpace basic_spaces;
    for (int k = 0; k <= T; ++k) basic_spaces.dims.push_back(incl_[static_cast<std::size_t>(k)].cols());
    for (int k = 0; k <= T; ++k) D_.push_back(restrict(full_d(k), k, 1));
    std::vector<Matrix> ds(D_.begin(), D_.end() - 1);
    basic_ = CochainComplex(basic_spaces, ds);

    // Bigrading from the derivation J(α) = α∘I.
    const Matrix j1 = ce_.datum().complex_structure.transpose();
    for (int k = 0; k <= T; ++k) J_.push_back(restrict(kron(ce_.ext().derivation_extension(j1, k), Im), k, 0));
    const int nn = n();
    for (int r = 0; r <= T; ++r) {
        const std::size_t dr = dim(r);
        const int plo = std::max(0, r - nn), phi = std::min(r, nn);
        for (int p = plo; p <= phi; ++p) {
            Matrix P = Matrix::identity(dr);
            const Gaussian lp = Gaussian::i() * Gaussian(2 * p - r);
            for (int p2 = plo; p2 <= phi; ++p2) {
                if (p2 == p) continue;
                const Gaussian l2 = Gaussian::i() * Gaussian(2 * p2 - r);
                P = P * (J_[static_cast<std::size_t>(r)] - Matrix::identity(dr) * l2) * (Gaussian(1) / (lp - l2));
            }
            proj_[{p, r - p}] = std::move(P);
        }
    }

    const auto deta = ce_.d_eta();
    for (int k = 0; k <= T; ++k) L_.push_back(restrict(full_wedge(2, deta, k), k, 2));
    for (int k = 0; k <= T; ++k)
        Lambda_.push_back(k >= 2 ? adjoint(L_[static_cast<std::size_t>(k - 2)], k - 2, 2) : zero_op(dim(k - 2), dim(k)));

    // θ = (φ - i φ∘I)/2 on the form part, θ̄ = φ - θ.
    const Gaussian half(Rational(1, 2));
    const Matrix p10 = (Matrix::identity(N) - j1 * Gaussian::i()) * half;
    for (std::size_t b = 0; b < N; ++b) {
        Matrix t(m, m);
        for (std::size_t a = 0; a < N; ++a)
            if (!p10(b, a).is_zero()) t += harmonic_.phi[a] * p10(b, a);
        theta_bar_form_.push_back(harmonic_.phi[b] - t);
        theta_form_.push_back(std::move(t));
    }

    for (int k = 0; k <= T; ++k) {
        phi_.push_back(restrict(full_form_wedge(harmonic_.phi, k), k, 1));
        theta_.push_back(restrict(full_form_wedge(theta_form_, k), k, 1));
        theta_bar_.push_back(restrict(full_form_wedge(theta_bar_form_, k), k, 1));
        nabla_.push_back(D_[static_cast<std::size_t>(k)] - phi_.back());
    }

    bool split_ok = true, theta_ok = true;
    std::vector<int> bad_split, bad_theta;
    for (int k = 0; k <= T; ++k) {
        Matrix dl(dim(k + 1), dim(k)), db(dim(k + 1), dim(k)), tt(dim(k + 1), dim(k)), tb(dim(k + 1), dim(k));
        for (int p = std::max(0, k - nn); p <= std::min(k, nn); ++p) {
            const int q = k - p;
            const Matrix& P = proj_.at({p, q});
            const auto& nab = nabla_[static_cast<std::size_t>(k)];
            if (p + 1 <= nn) dl += projector(p + 1, q) * nab * P;
            if (q + 1 <= nn) db += projector(p, q + 1) * nab * P;
            if (p + 1 <= nn) tt += projector(p + 1, q) * theta_[static_cast<std::size_t>(k)] * P;
            if (q + 1 <= nn) tb += projector(p, q + 1) * theta_bar_[static_cast<std::size_t>(k)] * P;
        }
        if (!(dl + db == nabla_[static_cast<std::size_t>(k)])) {
            split_ok = false;
            bad_split.push_back(k);
        }
        if (!(tt == theta_[static_cast<std::size_t>(k)]) || !(tb == theta_bar_[static_cast<std::size_t>(k)])) {
            theta_ok = false;
            bad_theta.push_back(k);
        }
        del_.push_back(std::move(dl));
        delbar_.push_back(std::move(db));
    }
    construction_checks_.push_back(make_check("basic.d_splits", "d=∂_ξ+∂̄_ξ", split_ok,
                                              split_ok ? "" : "∇ != ∂ + ∂̄ in degrees " + degree_list(bad_split)));
    construction_checks_.push_back(make_check("basic.theta_type", "φ=θ+θ̄", theta_ok,
                                              theta_ok ? "" : "θ not of type (1,0) in degrees " + degree_list(bad_theta)));

    for (int k = 0; k <= T; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        Dp_.push_back(del_[kk] + theta_bar_[kk]);
        Dpp_.push_back(delbar_[kk] + theta_[kk]);
        Dc_.push_back((Dpp_[kk] - Dp_[kk]) * Gaussian::i());
    }
    auto adjoints = [&](const std::vector<Matrix>& ops, std::vector<Matrix>& out) {
        for (int k = 0; k <= T; ++k)
            out.push_back(k >= 1 ? adjoint(ops[static_cast<std::size_t>(k - 1)], k - 1, 1) : zero_op(0, dim(0)));
    };
    adjoints(D_, D_adj_);
    adjoints(del_, del_adj_);
    adjoints(delbar_, delbar_adj_);
    adjoints(Dp_, Dp_adj_);
    adjoints(Dpp_, Dpp_adj_);
    adjoints(Dc_, Dc_adj_);
}

Matrix BasicComplex::get(const std::vector<Matrix>& ops, int k, int shift) const {
    if (k >= 0 && static_cast<std::size_t>(k) < ops.size()) return ops[static_cast<std::size_t>(k)];
    return zero_op(dim(k + shift), dim(k));
}

Matrix BasicComplex::full_d(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < full_d_.size()) return full_d_[static_cast<std::size_t>(k)];
    return zero_op(full_dim(k + 1), full_dim(k));
}

Matrix BasicComplex::full_gram(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < full_gram_.size()) return full_gram_[static_cast<std::size_t>(k)];
    return zero_op(0, 0);
}

Matrix BasicComplex::full_delta(int k) const {
    if (k < 1 || k > full_top()) return zero_op(full_dim(k - 1), full_dim(k));
    return gram_adjoint(full_d(k - 1), full_gram(k - 1), full_gram(k));
}

Matrix BasicComplex::full_wedge(int p, std::span<const Gaussian> alpha, int k) const {
    return kron(ce_.ext().left_wedge(p, alpha, k), Matrix::identity(rank()));
}

Matrix BasicComplex::full_interior(std::span<const Gaussian> x, int k) const {
    return kron(ce_.ext().interior(x, k), Matrix::identity(rank()));
}

Matrix BasicComplex::full_form_wedge(const std::vector<Matrix>& form, int k) const {
    const auto& ext = ce_.ext();
    const std::size_t N = ext.n();
    Matrix out(full_dim(k + 1), full_dim(k));
    if (out.empty()) return out;
    for (std::size_t a = 0; a < N; ++a) {
        if (form[a].is_zero()) continue;
        out += kron(ext.left_wedge(1, unit_vector(N, a), k), form[a]);
    }
    return out;
}

Matrix BasicComplex::covariant_lie(std::span<const Gaussian> x, int k) const {
    Matrix out = kron(ce_.lie_derivative(x, k), Matrix::identity(rank()));
    const Matrix ax = bundle_.at(x);
    if (!ax.is_zero()) out += kron(Matrix::identity(ce_.dim(k)), ax);
    return out;
}

std::optional<Matrix> BasicComplex::full_star(int k) const {
    if (!metric_.has_star() || !(bundle_.metric == Matrix::identity(rank()))) return std::nullopt;
    if (k < 0 || k > full_top()) return std::nullopt;
    return kron(hodge_star(ce_, metric_, k), Matrix::identity(rank()));
}

Matrix BasicComplex::inclusion(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < incl_.size()) return incl_[static_cast<std::size_t>(k)];
    return zero_op(full_dim(k), 0);
}

Matrix BasicComplex::retraction(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < retr_.size()) return retr_[static_cast<std::size_t>(k)];
    return zero_op(0, full_dim(k));
}

Matrix BasicComplex::gram(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < gram_.size()) return gram_[static_cast<std::size_t>(k)];
    return zero_op(0, 0);
}

Matrix BasicComplex::restrict(const Matrix& full_op, int k, int shift) const {
    const Matrix src = inclusion(k);
    const Matrix image = full_op * src;
    const Matrix coords = retraction(k + shift) * image;
    if (!(inclusion(k + shift) * coords == image))
        throw BundleError("operator does not preserve basic forms (degree " + std::to_string(k) + ")");
    return coords;
}

Matrix BasicComplex::adjoint(const Matrix& op, int k, int shift) const {
    return gram_adjoint(op, gram(k), gram(k + shift));
}

Matrix BasicComplex::projector(int p, int q) const {
    auto it = proj_.find({p, q});
    if (it != proj_.end()) return it->second;
    return zero_op(dim(p + q), dim(p + q));
}

std::size_t BasicComplex::bidegree_dim(int p, int q) const {
    auto it = proj_.find({p, q});
    return it == proj_.end() ? 0 : sasaki::rank(it->second);
}

std::optional<Matrix> BasicComplex::star_xi(int k) const {
    if (k < 0 || k > top()) return std::nullopt;
    auto star = full_star(k + 1);
    if (!star) return std::nullopt;
    return restrict(*star * full_wedge(1, ce_.datum().eta, k), k, top() - 2 * k);
}

BasicComplex basic_subcomplex(const CEComplex& ce) { return BasicComplex(ce); }

// ---------------------------------------------------------------------------

BigradingReport bigrading(const BasicComplex& bc) {
    BigradingReport rep;
    const int n = bc.n();
    bool sum_ok = true, idem_ok = true, orth_ok = true, dims_ok = true;
    std::string w;
    for (int r = 0; r <= bc.top(); ++r) {
        const std::size_t dr = bc.dim(r);
        Matrix sum(dr, dr);
        std::size_t total = 0;
        for (int p = std::max(0, r - n); p <= std::min(r, n); ++p) {
            const Matrix P = bc.projector(p, r - p);
            rep.dims[{p, r - p}] = bc.bidegree_dim(p, r - p);
            total += rep.dims[{p, r - p}];
            sum += P;
            if (!(P * P == P)) idem_ok = false;
            for (int p2 = std::max(0, r - n); p2 <= std::min(r, n); ++p2)
                if (p2 != p && !(P * bc.projector(p2, r - p2)).is_zero()) orth_ok = false;
        }
        if (!(sum == Matrix::identity(dr))) {
            sum_ok = false;
            w = "Σ P^{p,q} != 1 in degree " + std::to_string(r);
        }
        if (total != dr) dims_ok = false;
    }
    rep.checks.push_back(make_check("bigrading.partition", "A^r_B⊗ℂ=⊕_{p+q=r}A^{p,q}", sum_ok && dims_ok, w));
    rep.checks.push_back(make_check("bigrading.idempotent", "P^{p,q}P^{p,q}=P^{p,q}", idem_ok && orth_ok));

    // Conjugation swaps types when it preserves the basic forms.
    bool conj_applicable = true;
    for (int r = 0; r <= bc.top(); ++r) {
        const Matrix inc = bc.inclusion(r);
        if (!(Subspace::span(inc.conj()) == Subspace::span(inc))) conj_applicable = false;
    }
    if (conj_applicable) {
        bool conj_ok = true;
        for (int r = 0; r <= bc.top(); ++r) {
            const Matrix inc = bc.inclusion(r), ret = bc.retraction(r);
            for (int p = std::max(0, r - n); p <= std::min(r, n); ++p) {
                const Matrix fp = inc * bc.projector(p, r - p) * ret;
                const Matrix fq = inc * bc.projector(r - p, p) * ret;
                // Compare on the basic span only.
                if (!(fp.conj() * inc == fq * inc)) conj_ok = false;
            }
        }
        rep.checks.push_back(make_check("bigrading.conjugation", "conj(A^{p,q})=A^{q,p}", conj_ok));
    } else {
        rep.checks.push_back(make_info("bigrading.conjugation", "conj(A^{p,q})=A^{q,p}",
                                       "conjugation does not preserve basic forms of this bundle"));
    }
    append(rep.checks, bc.construction_checks());
    return rep;
}

MetricReport metric_and_star(const BasicComplex& bc) {
    MetricReport rep;
    const auto& g = bc.metric().g;
    const auto& xi = bc.datum().xi;
    Gaussian gxx;
    for (std::size_t a = 0; a < xi.size(); ++a)
        for (std::size_t b = 0; b < xi.size(); ++b) gxx += xi[a] * g(a, b) * xi[b];
    rep.checks.push_back(make_check("metric.positive", "g_η=L_η(X,Y)+η(X)η(Y)", positive_definite(g)));
    rep.checks.push_back(make_check("metric.reeb_unit", "g_η(ξ,ξ)=1", gxx == Gaussian(1), "g(ξ,ξ) = " + gxx.to_string()));
    bool herm = true;
    for (int k = 0; k <= bc.top(); ++k)
        if (!positive_definite(bc.gram(k)) && bc.dim(k) > 0) herm = false;
    rep.checks.push_back(make_check("metric.gram_hermitian", "⟨·,·⟩ Hermitian positive on A^r_B", herm));
    if (!bc.metric().has_star()) {
        rep.checks.push_back(make_info("metric.star", "∗∗=1", "volume factor sqrt(det g) is irrational; ∗ unavailable"));
        return rep;
    }
    bool ss = true;
    for (int k = 0; k <= bc.full_top(); ++k) {
        const Matrix s1 = hodge_star(bc.ce(), bc.metric(), k);
        const Matrix s2 = hodge_star(bc.ce(), bc.metric(), bc.full_top() - k);
        if (!(s2 * s1 == Matrix::identity(bc.ce().dim(k)))) ss = false;
    }
    rep.checks.push_back(make_check("metric.star_involution", "∗∗=1", ss));
    // α∧∗β = g(α,β) vol for basis forms.
    const auto& ext = bc.ce().ext();
    const int N = bc.full_top();
    const Gaussian vol_coef = Gaussian(*bc.metric().volume_factor) * Gaussian(bc.metric().orientation);
    bool defining = true;
    for (int k = 0; k <= N && defining; ++k) {
        const Matrix s = hodge_star(bc.ce(), bc.metric(), k);
        for (std::size_t i = 0; i < ext.dim(k) && defining; ++i)
            for (std::size_t j = 0; j < ext.dim(k) && defining; ++j) {
                const auto w = ext.wedge(k, unit_vector(ext.dim(k), i), N - k, s.col(j));
                if (!(w.front() == vol_coef * bc.metric().gram[static_cast<std::size_t>(k)](i, j))) defining = false;
            }
    }
    rep.checks.push_back(make_check("metric.star_defining", "α∧∗β=g(α,β)vol", defining));
    return rep;
}

namespace {

/// +1 when gram == formula, -1 when gram == -formula, 0 otherwise.
int compare_sign(const Matrix& gram_op, const Matrix& formula) {
    if (gram_op == formula) return 1;
    if (gram_op == -formula) return -1;
    return 0;
}

bool adjoint_pair_holds(const BasicComplex& bc, const Matrix& a, const Matrix& a_adj, int k, int shift) {
    if (a.empty()) return true;
    return bc.gram(k + shift) * a == a_adj.adjoint() * bc.gram(k);
}

}  // namespace

OperatorSuite operator_suite(const BasicComplex& bc) {
    OperatorSuite suite;
    const int T = bc.top();
    bool pairs = true;
    for (int k = 0; k < T; ++k) {
        pairs = pairs && adjoint_pair_holds(bc, bc.D(k), bc.D_adj(k + 1), k, 1);
        pairs = pairs && adjoint_pair_holds(bc, bc.del(k), bc.del_adj(k + 1), k, 1);
        pairs = pairs && adjoint_pair_holds(bc, bc.delbar(k), bc.delbar_adj(k + 1), k, 1);
        pairs = pairs && adjoint_pair_holds(bc, bc.Dp(k), bc.Dp_adj(k + 1), k, 1);
        pairs = pairs && adjoint_pair_holds(bc, bc.Dpp(k), bc.Dpp_adj(k + 1), k, 1);
        if (k + 2 <= T) pairs = pairs && adjoint_pair_holds(bc, bc.L(k), bc.Lambda(k + 2), k, 2);
    }
    suite.checks.push_back(make_check("operators.gram_adjoint", "⟨Ax,y⟩=⟨x,A*y⟩", pairs));

    auto report = [&](StarComparison cmp, const std::string& anchor) {
        std::vector<int> bad, negative;
        for (std::size_t k = 0; k < cmp.sign_by_degree.size(); ++k) {
            if (cmp.sign_by_degree[k] == 0) bad.push_back(static_cast<int>(k));
            if (cmp.sign_by_degree[k] < 0) negative.push_back(static_cast<int>(k));
        }
        if (!cmp.available) {
            suite.checks.push_back(make_info("operators.star." + cmp.name, anchor, "∗ unavailable for this model"));
        } else {
            suite.checks.push_back(make_check("operators.star." + cmp.name, anchor, bad.empty(),
                                              bad.empty() ? "" : "no sign matches in degrees " + degree_list(bad)));
            suite.checks.push_back(make_info("operators.star_sign." + cmp.name, anchor,
                                             negative.empty() ? "formula agrees with the Gram adjoint in every degree"
                                                              : "formula is minus the Gram adjoint in degrees " +
                                                                    degree_list(negative)));
        }
        suite.comparisons.push_back(std::move(cmp));
    };

    const int N = bc.full_top();
    StarComparison delta{"delta", {}, bc.full_star(0).has_value()};
    if (delta.available)
        for (int k = 1; k <= N; ++k) {
            // The formal adjoint of ∇ + φ is built from the dual connection ∇ - φ.
            const Matrix dual = bc.full_d(N - k) - bc.full_form_wedge(bc.harmonic().phi, N - k) * Gaussian(2);
            const Matrix formula = -(*bc.full_star(N - k + 1) * dual * *bc.full_star(k));
            delta.sign_by_degree.push_back(compare_sign(bc.full_delta(k), formula));
        }
    if (delta.available) delta.sign_by_degree.insert(delta.sign_by_degree.begin(), 1);
    report(std::move(delta), "δ=−∗d∗");

    const bool avail = bc.star_xi(0).has_value();
    auto xi_formula = [&](const std::string& name, const std::string& anchor, std::function<Matrix(int)> gram_op,
                          std::function<Matrix(int)> middle, int middle_shift) {
        StarComparison cmp{name, {}, avail};
        if (avail)
            for (int k = 0; k <= T; ++k) {
                const int mid_src = T - k;
                const int mid_dst = mid_src + middle_shift;
                if (mid_dst < 0 || mid_dst > T) {
                    cmp.sign_by_degree.push_back(gram_op(k).is_zero() ? 1 : 0);
                    continue;
                }
                const Matrix formula = -(*bc.star_xi(mid_dst) * middle(mid_src) * *bc.star_xi(k));
                cmp.sign_by_degree.push_back(compare_sign(gram_op(k), formula));
            }
        report(std::move(cmp), anchor);
    };
    xi_formula("delta_xi", "δ_ξ=−⋆_ξd⋆_ξ", [&](int k) { return bc.D_adj(k); },
               [&](int k) { return bc.nabla(k) - bc.phi(k); }, 1);
    xi_formula("lambda", "Λ=−⋆_ξ(dη∧)⋆_ξ", [&](int k) { return bc.Lambda(k); }, [&](int k) { return bc.L(k); }, 2);
    xi_formula("del_adj", "∂_ξ*=−⋆_ξ∂̄_ξ⋆_ξ", [&](int k) { return bc.del_adj(k); }, [&](int k) { return bc.delbar(k); }, 1);
    xi_formula("delbar_adj", "∂̄_ξ*=−⋆_ξ∂_ξ⋆_ξ", [&](int k) { return bc.delbar_adj(k); }, [&](int k) { return bc.del(k); }, 1);
    return suite;
}

namespace {

using Op = std::function<Matrix(int)>;

/// Tests [Λ, X] = c Y on every bidegree, X of degree +1 and Y of degree -1.
IdentityVariant test_commutator_identity(const BasicComplex& bc, const std::string& form, const Op& X, const Op& Y,
                                         const Gaussian& c) {
    IdentityVariant v{form, true, {}};
    const int n = bc.n();
    for (int k = 0; k <= bc.top(); ++k) {
        const Matrix lhs = bc.Lambda(k + 1) * X(k) - X(k - 2) * bc.Lambda(k);
        const Matrix diff = lhs - Y(k) * c;
        for (int p = std::max(0, k - n); p <= std::min(k, n); ++p)
            if (!(diff * bc.projector(p, k - p)).is_zero()) {
                v.holds = false;
                v.failing_bidegrees.emplace_back(p, k - p);
            }
    }
    return v;
}

std::string bidegree_list(const std::vector<std::pair<int, int>>& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << "(" << b[i].first << "," << b[i].second << ")";
    return os.str();
}

Matrix laplacian(const Op& d, const Op& adj, int k) { return d(k - 1) * adj(k) + adj(k + 1) * d(k); }

}  // namespace

KahlerReport verify_kahler_identities(const BasicComplex& bc) {
    KahlerReport rep;
    const Gaussian i = Gaussian::i();
    const Op del = [&](int k) { return bc.del(k); };
    const Op delbar = [&](int k) { return bc.delbar(k); };
    const Op del_adj = [&](int k) { return bc.del_adj(k); };
    const Op delbar_adj = [&](int k) { return bc.delbar_adj(k); };

    auto run = [&](const std::string& id, const std::string& printed, const Op& X, const Op& Y, const Gaussian& c,
                   const std::string& other, const Gaussian& c_other) {
        auto a = test_commutator_identity(bc, printed, X, Y, c);
        auto b = test_commutator_identity(bc, other, X, Y, c_other);
        rep.checks.push_back(make_check(id, printed, a.holds,
                                        a.holds ? "" : "fails in bidegrees " + bidegree_list(a.failing_bidegrees) +
                                                           (b.holds ? "; " + other + " holds in every bidegree" : "")));
        rep.checks.push_back(make_info(id + ".opposite_sign", other, b.holds ? "holds" : "fails"));
        rep.variants.push_back(std::move(a));
        rep.variants.push_back(std::move(b));
    };
    run("kahler.lambda_del", "[Λ,∂_ξ]=−√−1∂̄_ξ*", del, delbar_adj, -i, "[Λ,∂_ξ]=√−1∂̄_ξ*", i);
    run("kahler.lambda_delbar", "[Λ,∂̄_ξ]=√−1∂_ξ*", delbar, del_adj, i, "[Λ,∂̄_ξ]=−√−1∂_ξ*", -i);

    const Op D = [&](int k) { return bc.D(k); };
    const Op Da = [&](int k) { return bc.D_adj(k); };
    const Op Dp = [&](int k) { return bc.Dp(k); };
    const Op Dpa = [&](int k) { return bc.Dp_adj(k); };
    const Op Dpp = [&](int k) { return bc.Dpp(k); };
    const Op Dppa = [&](int k) { return bc.Dpp_adj(k); };
    bool lap = true;
    std::vector<int> bad;
    for (int k = 0; k <= bc.top(); ++k) {
        const Matrix full = laplacian(D, Da, k);
        const Matrix lp = laplacian(Dp, Dpa, k) * Gaussian(2);
        const Matrix lpp = laplacian(Dpp, Dppa, k) * Gaussian(2);
        if (!(full == lp) || !(full == lpp)) {
            lap = false;
            bad.push_back(k);
        }
    }
    rep.checks.push_back(make_check("kahler.laplacians", "Δ_ξ=2Δ′_ξ=2Δ″_ξ", lap,
                                    lap ? "" : "fails in degrees " + degree_list(bad)));
    return rep;
}

DeltaRelationReport delta_relation_check(const BasicComplex& bc) {
    DeltaRelationReport rep;
    const int T = bc.top();
    const auto deta = bc.ce().d_eta();
    bool rel = true, one = true, func = true;
    std::vector<int> bad;
    const bool avail = bc.star_xi(0).has_value();
    for (int k = 0; k <= T; ++k) {
        const Matrix lhs = bc.full_delta(k) * bc.inclusion(k);
        Matrix rhs = bc.inclusion(k - 1) * bc.D_adj(k);
        if (avail) {
            const int s = T - k;  // degree of ⋆_ξ ω
            if (s + 2 <= bc.full_top()) {
                const Matrix extra = *bc.full_star(s + 2) * bc.full_wedge(2, deta, s) * bc.inclusion(s) * *bc.star_xi(k);
                rhs += extra;
            }
        }
        if (avail && !(lhs == rhs)) {
            rel = false;
            bad.push_back(k);
        }
        if (k == 1 && !(lhs == bc.inclusion(0) * bc.D_adj(1))) one = false;
    }
    {
        const Matrix full_lap = bc.full_delta(1) * bc.full_d(0) * bc.inclusion(0);
        const Matrix basic_lap = bc.inclusion(0) * (bc.D_adj(1) * bc.D(0));
        func = full_lap == basic_lap;
    }
    if (avail)
        rep.checks.push_back(make_check("delta.relation", "δω=δ_ξω+∗(dη∧⋆_ξω)", rel,
                                        rel ? "" : "fails in degrees " + degree_list(bad)));
    else
        rep.checks.push_back(make_info("delta.relation", "δω=δ_ξω+∗(dη∧⋆_ξω)", "∗ unavailable for this model"));
    rep.checks.push_back(make_check("delta.one_forms", "δ_ξω=δω on basic 1-forms", one));
    rep.checks.push_back(make_check("delta.functions", "Δ_ξf=Δf", func));
    return rep;
}

LefschetzReport lefschetz_map(const BasicComplex& bc, int r) {
    LefschetzReport rep;
    rep.degree = r;
    const auto src = cohomology(bc.complex(), r);
    const auto dst = cohomology(bc.complex(), r + 2);
    rep.source_dim = src.dim;
    rep.target_dim = dst.dim;
    if (src.dim > 0 && dst.dim > 0) rep.map = dst.projection * bc.L(r) * src.representatives;
    else rep.map = Matrix(dst.dim, src.dim);
    rep.rank = sasaki::rank(rep.map);
    rep.injective = rep.rank == rep.source_dim;
    rep.surjective = rep.rank == rep.target_dim;
    const int n = bc.n();
    rep.injectivity_predicted = r <= n - 1;
    rep.surjectivity_predicted = r >= n - 1;
    rep.prediction_holds = (!rep.injectivity_predicted || rep.injective) && (!rep.surjectivity_predicted || rep.surjective);
    return rep;
}

}  // namespace sasaki
