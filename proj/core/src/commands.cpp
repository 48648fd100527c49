#include "ritz/commands.hpp"

#include "ritz/analysis.hpp"
#include "ritz/csv.hpp"
#include "ritz/errors.hpp"
#include "ritz/riesz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

namespace ritz {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

ScalarFunction as_function(const expr::Expr& e) {
    return [e](double x, double y) { return e(x, y); };
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << '\n';
        return exit_solver_failure;
    } catch (const EvaluationError& e) {
        err << "evaluation failure: " << e.what() << '\n';
        return exit_solver_failure;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return exit_solver_failure;
    }
}

// Seeded source of random test data.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    std::vector<double> vector(std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v) x = uniform(-1.0, 1.0);
        return v;
    }

    InteriorField interior(const Mesh& mesh) { return InteriorField(vector(mesh.interior_count())); }
    Field field(const Mesh& mesh) { return Field(vector(mesh.node_count())); }

private:
    std::mt19937_64 rng_;
};

class CheckList {
public:
    void record(std::string name, bool passed, std::string detail) {
        outcomes_.push_back({std::move(name), passed, std::move(detail)});
    }
    std::vector<CheckOutcome> take() { return std::move(outcomes_); }

private:
    std::vector<CheckOutcome> outcomes_;
};

ScalarFunction combine(double alpha, ScalarFunction f1, double beta, ScalarFunction f2) {
    return [=](double x, double y) { return alpha * f1(x, y) + beta * f2(x, y); };
}

double w12(const Discretization& disc, const Field& u) {
    return norm_w12(disc.stiffness(), disc.mass(), u.values());
}

}  // namespace

ProblemSetup make_setup(const ProblemSpec& spec) { return make_setup(spec, spec.nx, spec.ny); }

ProblemSetup make_setup(const ProblemSpec& spec, std::size_t nx, std::size_t ny) {
    Discretization disc(Mesh(spec.domain, nx, ny));
    expr::Expr f_expr = expr::parse(spec.f);
    expr::Expr g_expr = expr::parse(spec.g);
    ScalarFunction f = as_function(f_expr);
    const ScalarFunction g_fn = as_function(g_expr);
    Field g;
    if (spec.mode == BoundaryMode::extension) {
        g = interpolate(disc.mesh(), g_fn);
    } else {
        const Mesh& mesh = disc.mesh();
        BoundaryData g0(mesh.boundary_count());
        for (std::size_t k = 0; k < mesh.boundary_count(); ++k) {
            const Point p = mesh.node(mesh.boundary_nodes()[k]);
            g0[k] = g_fn(p.x, p.y);
        }
        g = extend(mesh, g0);
    }
    return ProblemSetup{std::move(disc), std::move(f_expr), std::move(g_expr), std::move(f), std::move(g), spec.mode};
}

std::vector<CheckOutcome> run_invariant_checks(const ProblemSpec& spec, std::uint64_t seed) {
    constexpr std::size_t draws = 20;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr std::array<double, 4> steps{0.1, -0.1, 0.01, -0.01};

    const ProblemSetup setup = make_setup(spec);
    const Discretization& disc = setup.disc;
    const Mesh& mesh = disc.mesh();
    const SparseSymMatrix& a_int = disc.stiffness_interior();
    const ProblemData data = setup.data();
    const SolverSettings& settings = spec.solver;
    // Identity checks compare against 1e-8..1e-10 relative limits; solve well below them.
    SolverSettings tight = settings;
    tight.rel_tolerance = std::min(settings.rel_tolerance, 1e-12);

    Draws rng(seed);
    CheckList checks;

    const Field load = assemble_load(mesh, data.f);
    const LinearFunctional lam = build_functional(disc, load, data.g);

    // Base functional plus random ones scaled to unit dual norm.
    std::vector<LinearFunctional> functionals{lam};
    for (std::size_t k = 0; k < draws; ++k) {
        LinearFunctional r(rng.vector(mesh.interior_count()));
        functionals.push_back((1.0 / dual_norm(a_int, r, tight)) * r);
    }

    {
        double worst = 0.0;
        bool ok = true;
        for (const LinearFunctional& l : functionals) {
            const InteriorField p = riesz_represent(a_int, l, tight).point;
            for (std::size_t k = 0; k < 5; ++k) {
                InteriorField x = p + (1.0 + norm_inf(p.values())) * rng.interior(mesh);
                if (k == 0) x = InteriorField(p.size());
                const InteriorField d = x - p;
                const double scale = std::max({1.0, std::abs(energy(a_int, l, x)), 0.5 * a_int.bilinear(p.values(), p.values()),
                                               0.5 * a_int.bilinear(d.values(), d.values())});
                const double rel = check_square_identity(a_int, l, p, x) / scale;
                worst = std::max(worst, rel);
                ok = ok && rel <= 1e-10;
            }
        }
        checks.record("square_identity", ok, "max discrepancy/scale " + sci(worst) + " (limit 1.000000e-10)");
    }

    {
        bool minimal = true;
        double worst_quad = 0.0;
        for (const LinearFunctional& l : functionals) {
            const InteriorField p = riesz_represent(a_int, l, tight).point;
            const double e0 = energy(a_int, l, p);
            for (std::size_t k = 0; k < 5; ++k) {
                InteriorField d = rng.interior(mesh);
                d *= 1.0 / norm_grad(a_int, d.values());
                for (double step : steps) {
                    const double e1 = energy(a_int, l, p + step * d);
                    minimal = minimal && e0 <= e1;
                    const double expected = 0.5 * step * step;
                    const double limit = 1e-9 * expected + 8.0 * eps * (std::abs(e0) + std::abs(e1));
                    worst_quad = std::max(worst_quad, std::abs((e1 - e0) - expected) / limit);
                }
            }
        }
        checks.record("bracket_min_minimality", minimal, "energy(p) <= energy(p + eps d) on all perturbations");
        checks.record("bracket_min_strictness", worst_quad <= 1.0,
                      "quadratic-expansion error / limit " + sci(worst_quad) + " (limit 1)");
    }

    const SolveReport report = solve(disc, data, settings);

    {
        const double base = objective(disc, load, report.u);
        bool ok = true;
        for (std::size_t k = 0; k < draws; ++k) {
            InteriorField d = rng.interior(mesh);
            d *= 1.0 / norm_grad(a_int, d.values());
            const Field dir = extend_by_zero(mesh, d);
            for (double step : steps) ok = ok && base <= objective(disc, load, report.u + step * dir);
        }
        checks.record("dirichlet_minimality", ok, "objective(u) " + sci(base) + " below every perturbed value");
    }

    {
        double worst = 0.0;
        const double og = objective(disc, load, data.g);
        for (std::size_t k = 0; k < draws; ++k) {
            const InteriorField v = rng.interior(mesh);
            const Field shifted = extend_by_zero(mesh, v) + data.g;
            const double ov = objective(disc, load, shifted);
            const double rhs = 0.5 * a_int.bilinear(v.values(), v.values()) - lam(v);
            const double scale = std::max({1.0, std::abs(ov), std::abs(og), std::abs(rhs)});
            worst = std::max(worst, std::abs((ov - og) - rhs) / scale);
        }
        checks.record("shift_identity", worst <= 1e-10, "max relative gap " + sci(worst) + " (limit 1.000000e-10)");
    }

    checks.record("weak_residual", report.weak_residual <= 1e-9,
                  "normalized residual " + sci(report.weak_residual) + " (limit 1.000000e-09)");

    {
        const SolveReport second = solve(disc, data, tight);
        const double residual_limit = std::max(1e-9, 10.0 * settings.rel_tolerance);
        const double gap = verify_uniqueness(disc, report.u, second.u, load, residual_limit);
        const double limit = std::max(1e-9, 10.0 * settings.rel_tolerance) * report.norms.grad;
        checks.record("uniqueness", gap <= limit,
                      "grad-norm gap between solves " + sci(gap) + " (limit " + sci(limit) + ")");

        bool rejected = false;
        try {
            const Field perturbed = report.u + extend_by_zero(mesh, rng.interior(mesh));
            (void)verify_uniqueness(disc, report.u, perturbed, load, residual_limit);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        checks.record("uniqueness_rejects_non_solution", rejected, "perturbed field fails the critical equation");
    }

    const SolveReport reference = solve(disc, data, tight);
    const double ref_norm = w12(disc, reference.u);

    {
        double worst = 0.0;
        for (std::size_t k = 0; k < draws; ++k) {
            const double alpha = rng.uniform(-2.0, 2.0);
            const double beta = rng.uniform(-2.0, 2.0);
            const ScalarFunction f2 = p1_function(mesh, rng.field(mesh));
            const Field g2 = rng.field(mesh);
            const Field u_comb =
                solve(disc, {combine(alpha, data.f, beta, f2), alpha * data.g + beta * g2}, tight).u;
            const Field u_sum = alpha * reference.u + beta * solve(disc, {f2, g2}, tight).u;
            worst = std::max(worst, w12(disc, u_comb - u_sum) / (1.0 + w12(disc, u_sum)));
        }
        checks.record("linearity", worst <= 1e-8, "max superposition gap " + sci(worst) + " (limit 1.000000e-08)");
    }

    {
        double worst = 0.0;
        double worst_zero = 0.0;
        const ScalarFunction zero = [](double, double) { return 0.0; };
        for (std::size_t k = 0; k < draws; ++k) {
            const Field psi = extend_by_zero(mesh, rng.interior(mesh));
            const Field shifted = solve(disc, {data.f, data.g + psi}, tight).u;
            worst = std::max(worst, w12(disc, shifted - reference.u) / (1.0 + ref_norm));
            worst_zero = std::max(worst_zero, w12(disc, solve(disc, {zero, psi}, tight).u));
        }
        checks.record("class_invariance", worst <= 1e-8 && worst_zero <= 1e-8,
                      "max class gap " + sci(worst) + ", max |S(0, psi)| " + sci(worst_zero) +
                          " (limit 1.000000e-08)");
    }

    {
        double worst = 0.0;
        for (std::size_t k = 0; k < draws; ++k) {
            const Field gk = data.g + extend_by_zero(mesh, rng.interior(mesh));
            const Field direct = solve(disc, {data.f, gk}, tight).u;
            const Field via_class = quotient_solve(disc, data.f, trace(mesh, gk), tight).u;
            worst = std::max(worst, w12(disc, via_class - direct) / (1.0 + w12(disc, direct)));
        }
        checks.record("quotient_factorization", worst <= 1e-8,
                      "max quotient gap " + sci(worst) + " (limit 1.000000e-08)");
    }

    const PoincareEstimate poincare = estimate_poincare(disc, tight);

    {
        bool functional_ok = true;
        bool solution_ok = true;
        bool offset_ok = true;
        double worst_ratio = 0.0;
        for (std::size_t k = 0; k <= draws; ++k) {
            const ProblemData d = k == 0 ? data : ProblemData{p1_function(mesh, rng.field(mesh)), rng.field(mesh)};
            const Bound fb = check_functional_bound(disc, d, poincare.a, tight);
            const SolveReport r = solve(disc, d, tight);
            const StabilityCheck st = check_stability(disc, r, d, poincare.a, tight);
            functional_ok = functional_ok && fb.holds();
            solution_ok = solution_ok && st.solution.holds();
            offset_ok = offset_ok && st.offset.holds();
            if (st.solution.rhs > 0.0) worst_ratio = std::max(worst_ratio, st.solution.lhs / st.solution.rhs);
        }
        checks.record("functional_bound", functional_ok, "dual norm of Lambda <= a ||f|| + ||g||_grad");
        checks.record("offset_bound", offset_ok, "||u - g||_{1,2} <= sqrt(a^2+1) (a ||f|| + ||g||_grad)");
        checks.record("stability_bound", solution_ok, "max lhs/rhs " + sci(worst_ratio));
    }

    {
        const InteriorField& v = poincare.eigenvector;
        const double sharp = norm_l2(disc.mass_interior(), v.values()) /
                             (poincare.a * norm_grad(a_int, v.values()));
        bool bound_ok = true;
        for (std::size_t k = 0; k < draws; ++k) {
            const InteriorField w = rng.interior(mesh);
            bound_ok = bound_ok && norm_l2(disc.mass_interior(), w.values()) <=
                                       poincare.a * norm_grad(a_int, w.values()) * (1.0 + 1e-8);
        }
        checks.record("poincare_bound", bound_ok, "a_h " + sci(poincare.a) + " bounds random interior fields");
        checks.record("poincare_sharpness", std::abs(sharp - 1.0) <= 1e-6,
                      "eigenvector ratio - 1 = " + sci(sharp - 1.0) + " (limit 1.000000e-06)");
    }

    return checks.take();
}

std::filesystem::path report_path_for(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".report.txt");
    return p;
}

int cmd_solve(const std::filesystem::path& spec_path, const std::filesystem::path& out_path, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        const ProblemSpec spec = load_problem_spec(spec_path);
        const ProblemSetup setup = make_setup(spec);
        const Discretization& disc = setup.disc;
        const Mesh& mesh = disc.mesh();

        SolveReport report = spec.mode == BoundaryMode::border
                                 ? quotient_solve(disc, setup.f, trace(mesh, setup.g), spec.solver)
                                 : solve(disc, setup.data(), spec.solver);
        const PoincareEstimate poincare = estimate_poincare(disc, spec.solver);
        const StabilityCheck st = check_stability(disc, report, setup.data(), poincare.a);
        report.stability = st.solution;

        write_solution_csv(out_path, mesh, report.u);

        std::ostringstream text;
        text << "mesh: " << mesh.nx() << "x" << mesh.ny() << " cells, " << mesh.node_count() << " nodes, "
             << mesh.interior_count() << " interior\n"
             << "mode: " << to_string(spec.mode) << '\n'
             << "energy: " << format_real(report.energy_value) << '\n'
             << "weak_residual: " << format_real(report.weak_residual) << '\n'
             << "norm_l2: " << format_real(report.norms.l2) << '\n'
             << "norm_grad: " << format_real(report.norms.grad) << '\n'
             << "norm_w12: " << format_real(report.norms.w12) << '\n'
             << "poincare_lambda_min: " << format_real(poincare.lambda_min) << '\n'
             << "poincare_a: " << format_real(poincare.a) << '\n'
             << "stability_lhs: " << format_real(st.solution.lhs) << '\n'
             << "stability_rhs: " << format_real(st.solution.rhs) << '\n'
             << "stability_holds: " << (st.solution.holds() ? "yes" : "no") << '\n'
             << "offset_bound_lhs: " << format_real(st.offset.lhs) << '\n'
             << "offset_bound_rhs: " << format_real(st.offset.rhs) << '\n'
             << "source_norm: " << format_real(st.source_norm) << '\n'
             << "source_interpolant_norm: " << format_real(interpolant_norm(disc, setup.f)) << '\n'
             << "cg_iterations: " << report.iterations << '\n'
             << "note: ||f||_2 in the bounds is the discrete L2 norm of the load functional\n";

        const std::filesystem::path report_file = report_path_for(out_path);
        std::ofstream rf(report_file, std::ios::binary);
        if (!rf) throw IoError("cannot open '" + report_file.string() + "' for writing");
        rf << text.str();
        rf.flush();
        if (!rf) throw IoError("failed writing '" + report_file.string() + "'");

        out << text.str();
        return exit_ok;
    });
}

int cmd_verify(const std::filesystem::path& spec_path, std::optional<std::uint64_t> seed, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        const ProblemSpec spec = load_problem_spec(spec_path);
        const std::uint64_t used_seed = seed.value_or(spec.seed);
        const std::vector<CheckOutcome> outcomes = run_invariant_checks(spec, used_seed);
        std::size_t passed = 0;
        out << "seed: " << used_seed << '\n';
        for (const CheckOutcome& c : outcomes) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            passed += c.passed ? 1 : 0;
        }
        out << passed << "/" << outcomes.size() << " checks passed\n";
        return passed == outcomes.size() ? exit_ok : exit_check_failed;
    });
}

int cmd_poincare(const std::filesystem::path& spec_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProblemSpec spec = load_problem_spec(spec_path);
        const Discretization disc(Mesh(spec.domain, spec.nx, spec.ny));
        const PoincareEstimate est = estimate_poincare(disc, spec.solver);
        out << "lambda_min: " << format_real(est.lambda_min) << '\n'
            << "a_h: " << format_real(est.a) << '\n'
            << "iterations: " << est.iterations << '\n'
            << "eigen_residual: " << sci(est.residual) << '\n';
        return exit_ok;
    });
}

int cmd_convergence(const std::filesystem::path& spec_path, std::size_t levels, std::ostream& out,
                    std::ostream& err) {
    return guarded(err, [&] {
        const ProblemSpec spec = load_problem_spec(spec_path);
        if (!spec.u_exact) throw std::invalid_argument("convergence needs an exact solution: set u_exact in the problem file");
        if (levels < 1) throw std::invalid_argument("levels must be >= 1");
        const ScalarFunction exact = as_function(expr::parse(*spec.u_exact));

        out << "nx ny h max_nodal_error l2_error l2_ratio l2_order\n";
        double previous = 0.0;
        for (std::size_t level = 0; level < levels; ++level) {
            const std::size_t nx = spec.nx << level;
            const std::size_t ny = spec.ny << level;
            const ProblemSetup setup = make_setup(spec, nx, ny);
            const Mesh& mesh = setup.disc.mesh();
            const SolveReport report = solve(setup.disc, setup.data(), spec.solver);
            const double e_max = max_nodal_error(mesh, report.u, exact);
            const double e_l2 = l2_error(mesh, report.u, exact);
            const double h = std::max(spec.domain.width() / static_cast<double>(nx),
                                      spec.domain.height() / static_cast<double>(ny));
            out << nx << ' ' << ny << ' ' << sci(h) << ' ' << sci(e_max) << ' ' << sci(e_l2);
            if (level > 0 && e_l2 > 0.0 && previous > 0.0) {
                const double ratio = previous / e_l2;
                out << ' ' << sci(ratio) << ' ' << sci(std::log2(ratio));
            } else {
                out << " - -";
            }
            out << '\n';
            previous = e_l2;
        }
        return exit_ok;
    });
}

}  // namespace ritz
