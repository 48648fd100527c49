#include "ritz/analysis.hpp"

#include "oracles.hpp"
#include "ritz/assembly.hpp"
#include "ritz/dirichlet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace ritz {
namespace {

const double continuum_a = 1.0 / std::sqrt(2.0 * std::numbers::pi * std::numbers::pi);

ScalarFunction constant(double c) {
    return [c](double, double) { return c; };
}

TEST(Poincare, SingleInteriorNode) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 2, 2));
    const PoincareEstimate est = estimate_poincare(disc);
    // Pencil (4, 0.125).
    EXPECT_NEAR(est.lambda_min, 32.0, 1e-12);
    EXPECT_NEAR(est.a, 1.0 / std::sqrt(32.0), 1e-12);
    EXPECT_NEAR(est.a, 0.176777, 1e-6);
}

TEST(Poincare, MatchesDenseGeneralizedEigenvalue) {
    for (auto [nx, ny] : {std::pair<std::size_t, std::size_t>{3, 3}, {5, 4}, {8, 8}, {6, 11}}) {
        const Discretization disc(build_rect_mesh(0, 0, 1.5, 1, nx, ny));
        const double oracle = testing::dense_min_generalized_eigenvalue(disc.stiffness_interior(), disc.mass_interior());
        const PoincareEstimate est = estimate_poincare(disc);
        EXPECT_NEAR(est.lambda_min, oracle, 1e-6 * oracle) << nx << "x" << ny;
        EXPECT_DOUBLE_EQ(est.a, 1.0 / std::sqrt(est.lambda_min));
    }
}

TEST(Poincare, UnitSquareFineGrid) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 64, 64));
    const PoincareEstimate est = estimate_poincare(disc);
    EXPECT_NEAR(est.a, continuum_a, 0.02 * continuum_a);
    EXPECT_LE(est.a, continuum_a);
}

TEST(Poincare, TwoByOneRectangle) {
    const Discretization disc(build_rect_mesh(0, 0, 2, 1, 64, 32));
    const double expected = 1.0 / std::sqrt(5.0 * std::numbers::pi * std::numbers::pi / 4.0);
    EXPECT_NEAR(estimate_poincare(disc).a, expected, 0.03 * expected);
}

TEST(Poincare, MonotoneUnderRefinement) {
    double previous = 0.0;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        const double a = estimate_poincare(Discretization(build_rect_mesh(0, 0, 1, 1, n, n))).a;
        EXPECT_GE(a, previous * (1.0 - 1e-10)) << "n = " << n;
        previous = a;
    }
}

TEST(Poincare, BoundHoldsForRandomFields) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 12, 12));
    const PoincareEstimate est = estimate_poincare(disc);
    std::mt19937_64 rng(51);
    for (int k = 0; k < 100; ++k) {
        const auto v = testing::random_vector(rng, disc.mesh().interior_count());
        const double l2 = norm_l2(disc.mass_interior(), v);
        const double grad = norm_grad(disc.stiffness_interior(), v);
        EXPECT_LE(l2, est.a * grad * (1.0 + 1e-8));
    }
}

TEST(Poincare, EigenvectorIsSharp) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const PoincareEstimate est = estimate_poincare(disc);
    const auto v = est.eigenvector.values();
    const double l2 = norm_l2(disc.mass_interior(), v);
    const double grad = norm_grad(disc.stiffness_interior(), v);
    EXPECT_NEAR(l2, 1.0, 1e-12);
    EXPECT_NEAR(l2, est.a * grad, 1e-6 * l2);
    EXPECT_LE(est.residual, 1e-3);
}

TEST(SourceNorm, AgainstDenseMassSolve) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 6, 6));
    const Field load = assemble_load(disc.mesh(), [](double x, double y) { return std::exp(x) * std::cos(y); });
    const InteriorField b = restrict_interior(disc.mesh(), load);
    const auto x = testing::dense_solve(disc.mass_interior(), b.values());
    EXPECT_NEAR(source_norm(disc, load, {1e-13, {}}), std::sqrt(dot(b.values(), x)), 1e-10);
}

TEST(SourceNorm, NeverExceedsInterpolantNormForP1Sources) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 8, 8));
    std::mt19937_64 rng(52);
    for (int k = 0; k < 20; ++k) {
        const Field fh(testing::random_vector(rng, disc.mesh().node_count()));
        const ScalarFunction f = p1_function(disc.mesh(), fh);
        const double s = source_norm(disc, assemble_load(disc.mesh(), f), {1e-13, {}});
        EXPECT_LE(s, interpolant_norm(disc, f) * (1.0 + 1e-10));
    }
}

TEST(FunctionalBound, ZeroData) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 4, 4));
    const Bound b = check_functional_bound(disc, {constant(0.0), Field(25)}, 0.2);
    EXPECT_EQ(b.lhs, 0.0);
    EXPECT_EQ(b.rhs, 0.0);
    EXPECT_TRUE(b.holds());
}

TEST(FunctionalBound, SingleInteriorNode) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 2, 2));
    const double a = estimate_poincare(disc).a;
    const Bound b = check_functional_bound(disc, {constant(1.0), Field(9)}, a);
    // p = 0.0625, sqrt(4 * 0.0625^2)
    EXPECT_NEAR(b.lhs, 0.125, 1e-15);
    // sqrt(0.25^2 / 0.125)
    EXPECT_NEAR(b.rhs, a * std::sqrt(0.5), 1e-14);
    EXPECT_TRUE(b.holds());
}

TEST(FunctionalBound, PureBoundaryDataIsCauchySchwarz) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 8, 8));
    std::mt19937_64 rng(53);
    for (int k = 0; k < 20; ++k) {
        const Field g(testing::random_vector(rng, disc.mesh().node_count()));
        const Bound b = check_functional_bound(disc, {constant(0.0), g}, 0.2);
        EXPECT_LE(b.lhs, norm_grad(disc.stiffness(), g.values()) * (1.0 + 1e-8));
    }
}

TEST(Stability, ZeroData) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 4, 4));
    const ProblemData data{constant(0.0), Field(25)};
    const StabilityCheck c = check_stability(disc, solve(disc, data), data, 0.2);
    EXPECT_EQ(c.solution.lhs, 0.0);
    EXPECT_EQ(c.solution.rhs, 0.0);
    EXPECT_TRUE(c.solution.holds());
    EXPECT_TRUE(c.offset.holds());
}

TEST(Stability, SingleInteriorNode) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 2, 2));
    const double a = estimate_poincare(disc).a;
    const ProblemData data{constant(1.0), Field(9)};
    const SolveReport r = solve(disc, data);
    const StabilityCheck c = check_stability(disc, r, data, a);
    // ||u||^2 = 0.125 * 0.0625^2 + 4 * 0.0625^2
    EXPECT_NEAR(c.solution.lhs, 0.0625 * std::sqrt(4.125), 1e-15);
    EXPECT_NEAR(c.solution.rhs, std::sqrt(a * a + 1.0) * a * std::sqrt(0.5), 1e-14);
    EXPECT_TRUE(c.solution.holds());
    EXPECT_TRUE(c.offset.holds());
}

TEST(Stability, RandomDraws) {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const double a = estimate_poincare(disc).a;
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const Field fh(testing::random_vector(rng, disc.mesh().node_count(), -10.0, 10.0));
        const double c0 = unit(rng);
        const double c1 = unit(rng);
        // Mix of P1 and smooth components.
        const ScalarFunction f = [fh_fn = p1_function(disc.mesh(), fh), c0, c1](double x, double y) {
            return fh_fn(x, y) + c0 * std::sin(3.0 * x + c1 * y);
        };
        const Field g(testing::random_vector(rng, disc.mesh().node_count()));
        const ProblemData data{f, g};
        EXPECT_TRUE(check_functional_bound(disc, data, a).holds()) << "draw " << k;
        const StabilityCheck c = check_stability(disc, solve(disc, data), data, a);
        EXPECT_TRUE(c.solution.holds()) << "draw " << k << ": " << c.solution.lhs << " > " << c.solution.rhs;
        EXPECT_TRUE(c.offset.holds()) << "draw " << k << ": " << c.offset.lhs << " > " << c.offset.rhs;
    }
}

TEST(L2Error, ExactForP1Functions) {
    const Mesh mesh = build_rect_mesh(0, 0, 1, 1, 5, 7);
    const ScalarFunction affine = [](double x, double y) { return 2.0 * x - 3.0 * y + 0.5; };
    EXPECT_NEAR(l2_error(mesh, interpolate(mesh, affine), affine), 0.0, 1e-14);
    EXPECT_EQ(max_nodal_error(mesh, interpolate(mesh, affine), affine), 0.0);
}

TEST(L2Error, ConstantOffset) {
    const Mesh mesh = build_rect_mesh(0, 0, 2, 1, 4, 4);
    // ||0 - 1||_2 over area 2
    EXPECT_NEAR(l2_error(mesh, Field(mesh.node_count()), constant(1.0)), std::sqrt(2.0), 1e-14);
}

TEST(L2Error, QuarticIntegratedExactly) {
    // u = 0 against x y on (0,1)^2: integral of x^2 y^2 = 1/9.
    const Mesh mesh = build_rect_mesh(0, 0, 1, 1, 3, 3);
    EXPECT_NEAR(l2_error(mesh, Field(mesh.node_count()), [](double x, double y) { return x * y; }), 1.0 / 3.0, 1e-14);
}

}  // namespace
}  // namespace ritz
