#include "oracles.hpp"

#include "sasaki/flat.hpp"
#include "sasaki/germ.hpp"

#include <doctest.h>

#include <random>

using namespace sasaki;

namespace {

std::map<std::string, Status> statuses(const std::vector<Check>& checks) {
    std::map<std::string, Status> m;
    for (const auto& c : checks) m[c.id] = c.status;
    return m;
}

}  // namespace

TEST_CASE("fiber pairings") {
    const Matrix p = composition_pairing(2);
    CHECK(p.rows() == 4);
    CHECK(p.cols() == 16);
    // E_01 E_10 = E_00, E_10 E_01 = E_11, E_01 E_01 = 0
    CHECK(p((0 * 2 + 0), (0 * 2 + 1) * 4 + (1 * 2 + 0)) == Gaussian(1));
    CHECK(p((1 * 2 + 1), (1 * 2 + 0) * 4 + (0 * 2 + 1)) == Gaussian(1));
    CHECK(p.apply(sasaki::unit_vector(16, (0 * 2 + 1) * 4 + (0 * 2 + 1))) == std::vector<Gaussian>(4));
    CHECK(tensor_pairing(2, 3) == Matrix::identity(6));
}

TEST_CASE("twisted wedge reduces to the ordinary wedge on trivial line bundles") {
    const ExteriorAlgebra ext(5);
    const auto a = std::vector<Gaussian>{0, 1, 2, 0, -1};
    const auto b = std::vector<Gaussian>{3, 0, 1, 1, 0};
    CHECK(twisted_wedge(ext, tensor_pairing(1, 1), 1, a, 1, b) == ext.wedge(1, a, 1, b));
}

TEST_CASE("germ model of the trivial line bundle on h5") {
    const auto g = build_germ_model(oracle::heisenberg(2), FlatBundleDatum::trivial(5, 1));
    CHECK(g.dgla_report.ok());
    CHECK(g.basic_dims == std::vector<std::size_t>{1, 4, 6, 4, 1});
    // L^k = H^k_B ⊕ H^{k-1}_B η
    for (int k = 0; k <= 5; ++k) CHECK(g.dgla.dim(k) == g.h(k) + g.h(k - 1));
    CHECK(g.augmentation_rank == 1);
    // End of a line bundle is abelian.
    for (const auto& [deg, m] : g.bracket) CHECK(m.is_zero());
    const auto q = quadraticity_check(g, 2);
    CHECK(q.verdict == Verdict::quadratic_certified);
    CHECK(q.lefschetz_rank == 4);
    // Cone: β[dη] = 0 in H^2_B; [dη] = [e^{12}] + [e^{34}] touches two coordinates but one direction.
    CHECK(q.cone.quadratic_targets == 6);
    CHECK(q.cone.quadratic_block.targets.size() == 2);
    CHECK(rank(q.cone.quadratic_block.linear_part) == 1);
    CHECK(q.cone.bracket_block.targets.empty());
}

TEST_CASE("germ model of the trivial rank-2 bundle on h5") {
    const auto g = build_germ_model(oracle::heisenberg(2), FlatBundleDatum::trivial(5, 2));
    CHECK(g.basic_dims == std::vector<std::size_t>{4, 16, 24, 16, 4});
    CHECK(g.dgla_report.ok());
    // Independent Jacobi spot check on H^1 with the commutator bracket of gl_2-valued forms.
    const Matrix b11 = g.bracket_tensor(1, 1);
    const Matrix b12 = g.bracket_tensor(1, 2);
    const std::size_t h1 = g.h(1), h2 = g.h(2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, h1 - 1);
    for (int t = 0; t < 40; ++t) {
        const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        auto br12 = [&](std::size_t x, std::size_t y) { return b11.col(x * h1 + y); };
        auto br1_2 = [&](std::size_t x, const std::vector<Gaussian>& v) {
            std::vector<Gaussian> out(g.h(3));
            for (std::size_t j = 0; j < h2; ++j)
                if (!v[j].is_zero())
                    for (std::size_t r = 0; r < out.size(); ++r) out[r] += b12(r, x * h2 + j) * v[j];
            return out;
        };
        const auto s1 = br1_2(a, br12(b, c)), s2 = br1_2(b, br12(c, a)), s3 = br1_2(c, br12(a, b));
        for (std::size_t r = 0; r < s1.size(); ++r) CHECK((s1[r] + s2[r] + s3[r]).is_zero());
    }
    const auto q = quadraticity_check(g, 2);
    CHECK(q.lefschetz_rank == 16);
    CHECK(q.lefschetz_injective);
    CHECK(q.identity_check);
    CHECK(q.verdict == Verdict::quadratic_certified);
    CHECK(q.cone.full.variables.size() == 20);
    CHECK(q.cone.quadratic_targets == 24);
    CHECK(q.cone.bracket_targets == 16);
    // Zero is a Maurer-Cartan element; a scalar-only α is one as well.
    CHECK(q.cone.full.is_solution(std::vector<Gaussian>(20)));
}

TEST_CASE("quadraticity needs n >= 2") {
    const auto g = build_germ_model(oracle::heisenberg(1), FlatBundleDatum::trivial(3, 1));
    const auto q = quadraticity_check(g, 1);
    CHECK(q.verdict == Verdict::hypothesis_violated);
    CHECK(std::string(to_string(q.verdict)) == "hypothesis-violated");
    const auto st = statuses(q.checks);
    CHECK(st.at("quadraticity.verdict") == Status::fail);
    CHECK(st.at("quadraticity.lefschetz") == Status::fail);
}

TEST_CASE("zero model is trivially quadratic") {
    const auto q = quadraticity_check(zero_germ_model(2), 2);
    CHECK(q.verdict == Verdict::quadratic_certified);
    CHECK(q.cone.full.variables.empty());
}

TEST_CASE("cup products vanish in the theorem range on h7") {
    const auto d = oracle::heisenberg(3);
    const auto triv = attach_bundle(d, FlatBundleDatum::trivial(7, 1));
    const auto r = cup_vanishing_check(triv, triv, 2, 2);
    CHECK(r.ok());
    CHECK(r.product.zero);
    CHECK(r.product.source_dim1 == 14);
    CHECK(r.product.target_dim == 14);
    CHECK(r.product.full_map.is_zero());
    const auto uni = attach_bundle(d, oracle::character(7, 1, Gaussian::i()));
    CHECK(cup_vanishing_check(uni, triv, 2, 2).ok());
}

TEST_CASE("cup products outside the range can be nonzero") {
    // In H^*(h7), e^1 and e^2 are closed and e^{12} is not exact: only e^{12}+e^{34}+e^{56} is.
    const auto d = oracle::heisenberg(3);
    const CEComplex ce(d);
    const Subspace exact2 = image(ce.d(1));
    CHECK(exact2.dim() == 1);
    const ExteriorAlgebra& ext = ce.ext();
    CHECK_FALSE(exact2.contains(ext.wedge(1, sasaki::unit_vector(7, 1), 1, sasaki::unit_vector(7, 2))));
    const auto triv = attach_bundle(d, FlatBundleDatum::trivial(7, 1));
    const auto p = cup_product(triv, triv, 1, 1);
    CHECK_FALSE(p.zero);
    CHECK_FALSE(p.map.is_zero());
}

TEST_CASE("cup-vanishing range guard") {
    const auto tc = attach_bundle(oracle::heisenberg(2), FlatBundleDatum::trivial(5, 1));
    CHECK_THROWS_AS(cup_vanishing_check(tc, tc, 1, 1), RangeError);
    CHECK_THROWS_AS(cup_vanishing_check(tc, tc, 2, 1), RangeError);
}
