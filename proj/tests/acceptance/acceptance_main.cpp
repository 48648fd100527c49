// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "ritz/analysis.hpp"
#include "ritz/assembly.hpp"
#include "ritz/commands.hpp"
#include "ritz/dirichlet.hpp"
#include "ritz/riesz.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ritz;
using Clock = std::chrono::steady_clock;

constexpr double pi = std::numbers::pi;
const SolverSettings tight{1e-12, {}};

struct Verdict {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<double> uniform_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

ScalarFunction zero_fn() {
    return [](double, double) { return 0.0; };
}

double w12(const Discretization& disc, const Field& u) { return norm_w12(disc.stiffness(), disc.mass(), u.values()); }

Verdict bracket_min() {
    const auto t0 = Clock::now();
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const SparseSymMatrix& a = disc.stiffness_interior();
    const std::size_t n = a.dimension();
    std::mt19937_64 rng(1001);
    double worst_identity = 0.0;
    bool minimal = true;
    for (int k = 0; k < 100; ++k) {
        const LinearFunctional lam(uniform_vector(rng, n));
        const InteriorField p = riesz_represent(a, lam, tight).point;
        const double e0 = energy(a, lam, p);
        for (int j = 0; j < 4; ++j) {
            const InteriorField d(uniform_vector(rng, n));
            for (double eps : {0.1, -0.1, 0.01, -0.01}) {
                const InteriorField x = p + eps * d;
                if (energy(a, lam, x) < e0) minimal = false;
                const double scale = std::max({a.bilinear(p.values(), p.values()), a.bilinear(x.values(), x.values()), 1e-300});
                worst_identity = std::max(worst_identity, check_square_identity(a, lam, p, x) / scale);
            }
            const InteriorField x(uniform_vector(rng, n));
            const double scale = std::max(a.bilinear(p.values(), p.values()), a.bilinear(x.values(), x.values()));
            worst_identity = std::max(worst_identity, check_square_identity(a, lam, p, x) / scale);
        }
    }
    const double t = seconds_since(t0);
    return {minimal && worst_identity <= 1e-10 && t < 5.0,
            fmt("minimal=%s, max square-identity discrepancy %.3e (limit 1e-10), %.2f s (limit 5 s)",
                minimal ? "yes" : "no", worst_identity, t)};
}

Verdict principle_equivalence() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const ScalarFunction f = [](double x, double y) { return 2 * pi * pi * std::sin(pi * x) * std::sin(pi * y) + x; };
    const Field g = interpolate(disc.mesh(), [](double x, double y) { return std::cos(x) * y; });
    const Field load = assemble_load(disc.mesh(), f);
    const SolveReport r1 = solve(disc, {f, g}, {1e-10, {}});
    const SolveReport r2 = solve(disc, {f, g}, {1e-12, {}});
    const double wr = weak_residual(disc, r1.u, f);
    const double diff = verify_uniqueness(disc, r1.u, r2.u, load, 1e-9);
    const double rel = diff / r1.norms.grad;
    return {wr <= 1e-9 && rel <= 1e-9,
            fmt("weak residual %.3e (limit 1e-9), independent solves differ by %.3e relative in grad norm (limit 1e-9)",
                wr, rel)};
}

Verdict hand_oracle() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 2, 2));
    const SolveReport r = solve(disc, {[](double, double) { return 1.0; }, Field(9)});
    const double center = evaluate_p1(disc.mesh(), r.u, 0.5, 0.5);
    const double err = std::abs(center - 0.0625);
    return {err <= 1e-10 * 0.0625, fmt("u(0.5,0.5) = %.17g, |u - 0.0625| = %.3e", center, err)};
}

Verdict affine_exactness() {
    double worst = 0.0;
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
        const Discretization disc(build_rect_mesh(0, 0, 1, 1, n, n));
        const ScalarFunction gx = [](double x, double) { return x; };
        const SolveReport r = solve(disc, {zero_fn(), interpolate(disc.mesh(), gx)});
        worst = std::max(worst, max_nodal_error(disc.mesh(), r.u, gx));
    }
    return {worst <= 1e-8, fmt("max nodal error %.3e over grids 2..64 (limit 1e-8)", worst)};
}

Verdict manufactured_convergence() {
    const auto t0 = Clock::now();
    const ScalarFunction f = [](double x, double y) { return 2 * pi * pi * std::sin(pi * x) * std::sin(pi * y); };
    const ScalarFunction exact = [](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); };
    std::vector<double> errors;
    for (std::size_t n : {8u, 16u, 32u}) {
        const Discretization disc(build_rect_mesh(0, 0, 1, 1, n, n));
        const SolveReport r = solve(disc, {f, Field(disc.mesh().node_count())});
        errors.push_back(l2_error(disc.mesh(), r.u, exact));
    }
    const double r1 = errors[0] / errors[1];
    const double r2 = errors[1] / errors[2];
    const double t = seconds_since(t0);
    const bool ok = r1 >= 3.4 && r1 <= 4.6 && r2 >= 3.4 && r2 <= 4.6 && t < 30.0;
    return {ok, fmt("L2 errors %.4e %.4e %.4e, ratios %.4f %.4f (range [3.4, 4.6]), %.2f s (limit 30 s)", errors[0],
                    errors[1], errors[2], r1, r2, t)};
}

Verdict poincare_constant() {
    const double target = 1.0 / std::sqrt(2.0 * pi * pi);
    std::vector<double> a;
    for (std::size_t n : {8u, 16u, 32u, 64u}) a.push_back(estimate_poincare(Discretization(build_rect_mesh(0, 0, 1, 1, n, n))).a);
    bool monotone = true;
    for (std::size_t i = 1; i < a.size(); ++i) monotone = monotone && a[i] >= a[i - 1] * (1.0 - 1e-10);
    const double rel = std::abs(a.back() - target) / target;
    return {rel <= 0.02 && monotone,
            fmt("a_h = %.6f %.6f %.6f %.6f (8/16/32/64), 64x64 off 1/sqrt(2 pi^2) by %.4f%% (limit 2%%), monotone=%s",
                a[0], a[1], a[2], a[3], 100.0 * rel, monotone ? "yes" : "no")};
}

Verdict stability_bounds() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const Mesh& mesh = disc.mesh();
    const double a = estimate_poincare(disc).a;
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    int failures = 0;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const ScalarFunction fh = p1_function(mesh, Field(uniform_vector(rng, mesh.node_count())));
        const double c0 = coef(rng);
        const double c1 = coef(rng);
        const ScalarFunction f = [fh, c0, c1](double x, double y) { return fh(x, y) + c0 * std::sin(pi * c1 * x * y); };
        const ProblemData data{f, Field(uniform_vector(rng, mesh.node_count()))};
        const Bound functional = check_functional_bound(disc, data, a);
        const StabilityCheck st = check_stability(disc, solve(disc, data), data, a);
        for (const Bound& b : {functional, st.offset, st.solution}) {
            if (!b.holds()) ++failures;
            if (b.rhs > 0.0) worst = std::max(worst, b.lhs / b.rhs);
        }
    }
    return {failures == 0, fmt("%d violations in 50 draws x 3 bounds, max lhs/rhs %.7f (limit 1 + 1e-8)", failures, worst)};
}

Verdict class_invariance() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const Mesh& mesh = disc.mesh();
    std::mt19937_64 rng(1008);
    double worst = 0.0;
    double worst_zero = 0.0;
    for (int k = 0; k < 20; ++k) {
        const ScalarFunction f = p1_function(mesh, Field(uniform_vector(rng, mesh.node_count())));
        const Field g(uniform_vector(rng, mesh.node_count()));
        const Field psi = extend_by_zero(mesh, InteriorField(uniform_vector(rng, mesh.interior_count())));
        const SolveReport base = solve(disc, {f, g}, tight);
        const SolveReport shifted = solve(disc, {f, g + psi}, tight);
        worst = std::max(worst, w12(disc, shifted.u - base.u) / (1.0 + base.norms.w12));
        worst_zero = std::max(worst_zero, solve(disc, {zero_fn(), psi}, tight).norms.w12);
    }
    return {worst <= 1e-8 && worst_zero <= 1e-8,
            fmt("max shifted difference %.3e, max |S(0, psi)| %.3e (limit 1e-8)", worst, worst_zero)};
}

Verdict linearity() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const Mesh& mesh = disc.mesh();
    std::mt19937_64 rng(1009);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Field f1(uniform_vector(rng, mesh.node_count()));
        const Field f2(uniform_vector(rng, mesh.node_count()));
        const Field g1(uniform_vector(rng, mesh.node_count()));
        const Field g2(uniform_vector(rng, mesh.node_count()));
        const double alpha = coef(rng);
        const double beta = coef(rng);
        const SolveReport s1 = solve(disc, {p1_function(mesh, f1), g1}, tight);
        const SolveReport s2 = solve(disc, {p1_function(mesh, f2), g2}, tight);
        const SolveReport s12 = solve(disc, {p1_function(mesh, alpha * f1 + beta * f2), alpha * g1 + beta * g2}, tight);
        const double scale = std::abs(alpha) * s1.norms.w12 + std::abs(beta) * s2.norms.w12;
        worst = std::max(worst, w12(disc, s12.u - alpha * s1.u - beta * s2.u) / scale);
    }
    return {worst <= 1e-8, fmt("max superposition defect %.3e relative (limit 1e-8)", worst)};
}

Verdict quotient_factorization() {
    const Discretization disc(build_rect_mesh(0, 0, 1, 1, 16, 16));
    const Mesh& mesh = disc.mesh();
    std::mt19937_64 rng(1010);
    const ScalarFunction f = [](double x, double y) { return 1.0 + x * y; };
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Field g(uniform_vector(rng, mesh.node_count()));
        const SolveReport full = solve(disc, {f, g}, tight);
        const SolveReport quot = quotient_solve(disc, f, trace(mesh, g), tight);
        worst = std::max(worst, w12(disc, quot.u - full.u) / (1.0 + full.norms.w12));
    }
    return {worst <= 1e-8, fmt("max |quotient - full| %.3e relative (limit 1e-8)", worst)};
}

Verdict determinism() {
    const auto path = std::filesystem::temp_directory_path() / "ritz_acceptance_determinism.txt";
    {
        std::ofstream out(path);
        out << "grid = 16 16\nf = 2*pi^2*sin(pi*x)*sin(pi*y)\ng = x*y\nseed = 42\n";
    }
    std::ostringstream out1, out2, err;
    const int c1 = cmd_verify(path, 42, out1, err);
    const int c2 = cmd_verify(path, 42, out2, err);
    std::filesystem::remove(path);
    const bool same = out1.str() == out2.str();
    return {same && c1 == exit_ok && c2 == exit_ok,
            fmt("exit codes %d %d, %zu bytes each, identical=%s", c1, c2, out1.str().size(), same ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"bracket-min lemma", bracket_min},
        {"principle equivalence", principle_equivalence},
        {"hand oracle", hand_oracle},
        {"affine exactness", affine_exactness},
        {"manufactured convergence", manufactured_convergence},
        {"poincare constant", poincare_constant},
        {"stability bounds", stability_bounds},
        {"class invariance", class_invariance},
        {"linearity", linearity},
        {"quotient factorization", quotient_factorization},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.passed) ++failed;
        std::printf("%s %2zu %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
