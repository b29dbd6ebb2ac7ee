#include "oracles.hpp"

#include "sasaki/flat.hpp"

#include <doctest.h>

using namespace sasaki;

namespace {

struct Case {
    int n;
    FlatBundleDatum bundle;
    const char* label;
};

std::vector<Case> cases(int max_n = 2) {
    std::vector<Case> out;
    for (int n = 1; n <= max_n; ++n) {
        const std::size_t N = static_cast<std::size_t>(2 * n + 1);
        std::vector<Gaussian> a(N), b(N);
        a[1] = 1;
        b[2] = 1;
        out.push_back({n, FlatBundleDatum::trivial(N, 1), "trivial"});
        out.push_back({n, FlatBundleDatum::trivial(N, 2), "trivial2"});
        out.push_back({n, oracle::character(N, 1, Gaussian::i()), "unitary"});
        out.push_back({n, oracle::character(N, 1, Gaussian(1)), "real"});
        out.push_back({n, FlatBundleDatum::diagonal({a, b}), "rank2"});
    }
    return out;
}

}  // namespace

TEST_CASE("bundle algebra") {
    const auto e = oracle::character(3, 1, Gaussian(2));
    CHECK(e.is_diagonal());
    CHECK_FALSE(e.is_trivial());
    const auto end = end_bundle(e);
    CHECK(end.rank == 1);
    CHECK(end.is_trivial());  // [A, ·] vanishes in rank one
    const auto t = tensor_bundle(e, oracle::character(3, 1, Gaussian(-2)));
    CHECK(t.is_trivial());
    const auto h = harmonic_split(oracle::character(3, 1, Gaussian(Rational(1), Rational(3))));
    CHECK(h.phi[1] == Matrix::from_rows({{1}}));
    CHECK(h.skew[1] == Matrix::from_rows({{Gaussian(Rational(0), Rational(3))}}));
    const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(h_adjoint(m, Matrix::identity(2)) == m.adjoint());
}

TEST_CASE("non-flat and non-basic connections are rejected") {
    const auto d = oracle::heisenberg(1);
    // e^0 is not closed, so c·e^0 is not flat.
    CHECK_THROWS_AS(attach_bundle(d, oracle::character(3, 0, Gaussian(1))), BundleError);
    // Non-commuting constant matrices give curvature [A_1, A_2] ≠ 0.
    FlatBundleDatum b = FlatBundleDatum::trivial(3, 2);
    b.connection[1] = Matrix::from_rows({{0, 1}, {0, 0}});
    b.connection[2] = Matrix::from_rows({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(attach_bundle(d, b), BundleError);
}

TEST_CASE("trivial bundle cohomology equals untwisted cohomology") {
    for (int n = 1; n <= 3; ++n) {
        const auto d = oracle::heisenberg(n);
        const auto tc = attach_bundle(d, FlatBundleDatum::trivial(d.dim, 1));
        CHECK(betti_numbers(tc.full()) == oracle::heisenberg_betti(n));
        CHECK(betti_numbers(extended_complex(tc)) == oracle::heisenberg_betti(n));
    }
}

TEST_CASE("character bundles are acyclic") {
    // L^D_{X_1} = D i_{X_1} + i_{X_1} D = c + (nilpotent L_{X_1}) is invertible and null-homotopic.
    for (int n = 1; n <= 2; ++n) {
        const auto d = oracle::heisenberg(n);
        for (const Gaussian& c : {Gaussian(1), Gaussian::i(), Gaussian(Rational(-2, 3))}) {
            const auto tc = attach_bundle(d, oracle::character(d.dim, 1, c));
            const auto x1 = sasaki::unit_vector(d.dim, 1);
            for (int k = 0; k <= static_cast<int>(d.dim); ++k) {
                Matrix h = Matrix::zero(tc.full_dim(k), tc.full_dim(k));
                if (k > 0) h += tc.full_d(k - 1) * tc.full_interior(x1, k);
                if (k < static_cast<int>(d.dim)) h += tc.full_interior(x1, k + 1) * tc.full_d(k);
                const Matrix nil = h - c * Matrix::identity(tc.full_dim(k));
                CHECK(oracle::nilpotency(nil) > 0);
            }
            for (auto b : betti_numbers(tc.full())) CHECK(b == 0);
            for (auto b : betti_numbers(extended_complex(tc))) CHECK(b == 0);
        }
    }
}

TEST_CASE("extended model computes the full twisted cohomology") {
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        CAPTURE(c.n);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const auto ext = extended_complex(tc);
        const auto inc = extended_inclusion(tc, ext);
        CHECK(commutes_with_differentials(inc));
        CHECK(is_quasi_isomorphism(inc).quasi_isomorphism);
        CHECK(betti_numbers(ext) == betti_numbers(tc.full()));
    }
}

TEST_CASE("D', D'' and Dᶜ identities") {
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        CHECK(build_dprime_dsecond(tc).ok());
        for (int k = 0; k + 1 <= tc.top(); ++k) {
            CHECK(tc.Dp(k) + tc.Dpp(k) == tc.D(k));
            if (k + 2 <= tc.top()) {
                CHECK((tc.Dp(k + 1) * tc.Dp(k)).is_zero());
                CHECK((tc.Dpp(k + 1) * tc.Dpp(k)).is_zero());
                CHECK((tc.Dp(k + 1) * tc.Dpp(k) + tc.Dpp(k + 1) * tc.Dp(k)).is_zero());
            }
        }
    }
}

TEST_CASE("twisted Kähler identities hold with the opposite sign") {
    // Computed here from the operator matrices: [Λ, D'] = +i (D'')*, [Λ, D''] = -i (D')*.
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        CAPTURE(c.n);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const Gaussian i = Gaussian::i();
        for (int k = 1; k <= tc.top(); ++k) {
            Matrix first = tc.Lambda(k + 1) * tc.Dp(k), second = tc.Lambda(k + 1) * tc.Dpp(k);
            if (k >= 2) {
                first -= tc.Dp(k - 2) * tc.Lambda(k);
                second -= tc.Dpp(k - 2) * tc.Lambda(k);
            }
            CHECK(first == i * tc.Dpp_adj(k));
            CHECK(second == -i * tc.Dp_adj(k));
        }
        const auto rep = verify_twisted_kahler(tc);
        bool laplacians = false;
        for (const auto& ch : rep.checks)
            if (ch.id == "kahler_twisted.laplacians") laplacians = ch.status == Status::pass;
        CHECK(laplacians);
    }
}

TEST_CASE("harmonic metric and the θ decomposition") {
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const auto h = check_harmonicity(tc);
        CHECK(h.harmonic);
        for (const auto& v : h.gram_divergence) CHECK(v.is_zero());
        const auto t = theta_split_and_thm42(tc);
        CHECK(all_pass(t.checks));
        CHECK(t.harmonic == h.harmonic);
        for (std::size_t a = 0; a < t.theta.size(); ++a) CHECK(t.theta[a] + t.theta_bar[a] == tc.harmonic().phi[a]);
    }
}

TEST_CASE("DDᶜ-lemma on every case") {
    for (const auto& c : cases(3)) {
        if (c.n == 3 && std::string(c.label) == "trivial2") continue;
        CAPTURE(c.label);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const auto r = verify_ddc_lemma(tc);
        CHECK(r.ok());
        CHECK(r.degrees.size() == static_cast<std::size_t>(tc.top() + 1));
        // im DDᶜ ⊆ ker Dᶜ, from DᶜD = -DDᶜ and (Dᶜ)² = 0.
        for (int k = 0; k + 3 <= tc.top(); ++k) CHECK((tc.Dc(k + 2) * tc.D(k + 1) * tc.Dc(k)).is_zero());
    }
}

TEST_CASE("almost-formality chain") {
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const auto f = formality_chain(tc);
        CHECK(f.ok());
        CHECK(f.induced_differential_zero);
        CHECK(f.model_betti == f.full_betti);
        CHECK(f.extended_betti == f.full_betti);
        for (const auto& a : f.arrows) {
            CAPTURE(a.name);
            CHECK(a.chain_map);
            CHECK(a.quasi_iso.quasi_isomorphism);
        }
    }
}

TEST_CASE("ker D_ξ splitting") {
    const auto tc = attach_bundle(oracle::heisenberg(2), FlatBundleDatum::trivial(5, 1));
    const auto r = ker_dxi_splitting(tc);
    std::map<std::string, Status> by_id;
    for (const auto& c : r.checks) by_id[c.id] = c.status;
    CHECK(by_id.at("splitting.direct_sum") == Status::pass);
    // The literal decomposition with i_ξω∧η on the right only works in odd degree.
    CHECK(by_id.at("splitting.decomposition") == Status::fail);
    CHECK(by_id.at("splitting.decomposition_left") == Status::info);
}

TEST_CASE("Hodge decomposition on basic and full complexes") {
    for (const auto& c : cases()) {
        CAPTURE(c.label);
        const auto tc = attach_bundle(oracle::heisenberg(c.n), c.bundle);
        const auto full = betti_numbers(tc.full());
        const auto basic = betti_numbers(tc.complex());
        for (int k = 0; k <= tc.top(); ++k) {
            const auto h = harmonic_projector(tc, k);
            CHECK(all_pass(h.checks));
            CHECK(h.harmonic_dim == basic[static_cast<std::size_t>(k)]);
            CHECK(h.harmonic * h.harmonic == h.harmonic);
        }
        for (int k = 0; k <= tc.full_top(); ++k) {
            const auto h = full_harmonic_projector(tc, k);
            CHECK(all_pass(h.checks));
            CHECK(h.harmonic_dim == full[static_cast<std::size_t>(k)]);
        }
    }
}
