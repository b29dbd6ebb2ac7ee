#include "oracles.hpp"

#include "sasaki/basic.hpp"
#include "sasaki/metric.hpp"

#include <doctest.h>

using namespace sasaki;

TEST_CASE("heisenberg models satisfy the Sasakian axioms") {
    for (int n = 1; n <= 3; ++n) {
        const auto rep = validate_sasakian(oracle::heisenberg(n));
        CHECK(rep.ok());
        CHECK(rep.axioms.size() >= 10);
    }
}

TEST_CASE("broken data is caught by the right axiom") {
    auto d = oracle::heisenberg(1);
    d.complex_structure(2, 1) = 2;
    auto rep = validate_sasakian(d);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.find("complex_structure_on_contact_distribution"));
    CHECK_FALSE(rep.find("complex_structure_on_contact_distribution")->passed);

    d = oracle::heisenberg(1);
    d.eta = sasaki::unit_vector(3, 1);
    CHECK_FALSE(validate_sasakian(d).ok());

    d = oracle::heisenberg(1);
    d.complex_structure = -d.complex_structure;  // reverses pseudoconvexity
    rep = validate_sasakian(d);
    REQUIRE(rep.find("strongly_pseudoconvex"));
    CHECK_FALSE(rep.find("strongly_pseudoconvex")->passed);

    d = oracle::heisenberg(1);
    d.dim = 4;
    CHECK_FALSE(validate_sasakian(d).ok());
}

TEST_CASE("CE differential matches the invariant Cartan formula") {
    for (int n = 1; n <= 3; ++n) {
        const auto d = oracle::heisenberg(n);
        const CEComplex ce(d);
        for (int k = 0; k < static_cast<int>(d.dim); ++k) CHECK(ce.d(k) == oracle::ce_differential(d, k));
        CHECK(ce.cartan_formula_holds());
    }
}

TEST_CASE("CE cohomology of heisenberg algebras") {
    for (int n = 1; n <= 3; ++n) {
        const CEComplex ce(oracle::heisenberg(n));
        CHECK(betti_numbers(ce.complex()) == oracle::heisenberg_betti(n));
    }
}

TEST_CASE("basic cohomology of h_{2n+1} is the exterior algebra on 2n generators") {
    for (int n = 1; n <= 3; ++n) {
        const CEComplex ce(oracle::heisenberg(n));
        const BasicComplex bc(ce);
        const auto b = betti_numbers(bc.complex());
        REQUIRE(b.size() == static_cast<std::size_t>(2 * n + 1));
        for (int k = 0; k <= 2 * n; ++k) CHECK(b[static_cast<std::size_t>(k)] == static_cast<std::size_t>(oracle::binom(2 * n, k)));
    }
}

TEST_CASE("contact metric, Gram matrices and Hodge star") {
    const CEComplex ce(oracle::heisenberg(2));
    const auto m = contact_metric(ce);
    // g = dη(X,IY) + η⊗η is the identity in the standard basis.
    CHECK(m.g == Matrix::identity(5));
    REQUIRE(m.has_star());
    CHECK(*m.volume_factor == 1);
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)));
    for (int k = 0; k <= 5; ++k) {
        const Matrix s = hodge_star(ce, m, k);
        const Matrix back = hodge_star(ce, m, 5 - k);
        CHECK(back * s == Matrix::identity(ce.dim(k)));  // ∗∗ = (-1)^{k(N-k)} = 1 in odd dimension
    }
    const Matrix a = Matrix::from_rows({{1, 2}, {0, Gaussian::i()}});
    const Matrix gs = Matrix::from_rows({{2, 0}, {0, 1}});
    const Matrix gt = Matrix::identity(2);
    const Matrix as = gram_adjoint(a, gs, gt);
    // ⟨Ax, y⟩_t = ⟨x, A*y⟩_s on basis vectors
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Matrix x = Matrix::column(sasaki::unit_vector(2, i)), y = Matrix::column(sasaki::unit_vector(2, j));
            CHECK((y.adjoint() * gt * a * x) == (((as * y).adjoint()) * gs * x));
        }
    CHECK(positive_definite(gs));
    CHECK_FALSE(positive_definite(Matrix::from_rows({{1, 2}, {2, 1}})));
}

TEST_CASE("untwisted operator suite on heisenberg models") {
    for (int n = 1; n <= 3; ++n) {
        const CEComplex ce(oracle::heisenberg(n));
        const BasicComplex bc(ce);
        CHECK(bigrading(bc).ok());
        CHECK(metric_and_star(bc).ok());
        CHECK(operator_suite(bc).ok());
        CHECK(verify_kahler_identities(bc).ok());
        CHECK(delta_relation_check(bc).ok());
        // bidegree dimensions: C(n,p)C(n,q)
        const auto b = bigrading(bc);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                CHECK(b.dims.at({p, q}) == static_cast<std::size_t>(oracle::binom(n, p) * oracle::binom(n, q)));
    }
}

TEST_CASE("Lefschetz on basic cohomology has the predicted ranks") {
    for (int n = 1; n <= 3; ++n) {
        const CEComplex ce(oracle::heisenberg(n));
        const BasicComplex bc(ce);
        for (int r = 0; r + 2 <= 2 * n; ++r) {
            const auto l = lefschetz_map(bc, r);
            // dη∧ on Λ(ℝ^{2n}): hard Lefschetz gives rank min(C(2n,r), C(2n,r+2)).
            CHECK(l.rank == static_cast<std::size_t>(std::min(oracle::binom(2 * n, r), oracle::binom(2 * n, r + 2))));
            CHECK(l.prediction_holds);
            if (r <= n - 1) CHECK(l.injective);
            if (r >= n - 1) CHECK(l.surjective);
        }
    }
}

TEST_CASE("delta relation pieces on a twisted complex") {
    const auto d = oracle::heisenberg(2);
    const CEComplex ce(d);
    const BasicComplex bc(ce, oracle::character(5, 1, Gaussian(1)));
    CHECK(delta_relation_check(bc).ok());
    CHECK(bigrading(bc).ok());
    // Δ = D D* + D* D commutes with D
    for (int k = 1; k + 1 <= bc.top(); ++k) {
        const Matrix lap_k = bc.D(k - 1) * bc.D_adj(k) + bc.D_adj(k + 1) * bc.D(k);
        const Matrix lap_k1 = bc.D(k) * bc.D_adj(k + 1) + (k + 2 <= bc.top() ? bc.D_adj(k + 2) * bc.D(k + 1) : Matrix::zero(bc.dim(k + 1), bc.dim(k + 1)));
        CHECK(bc.D(k) * lap_k == lap_k1 * bc.D(k));
    }
}
