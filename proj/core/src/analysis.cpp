#include "ritz/analysis.hpp"

#include "ritz/errors.hpp"
#include "ritz/riesz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ritz {

double source_norm(const Discretization& disc, const Field& load, const SolverSettings& settings) {
    const InteriorField b = restrict_interior(disc.mesh(), load);
    const CgResult cg = cg_solve(disc.mass_interior(), b.values(), settings);
    return std::sqrt(std::max(0.0, dot(b.values(), cg.x)));
}

double interpolant_norm(const Discretization& disc, const ScalarFunction& f) {
    const Field fh = interpolate(disc.mesh(), f);
    return norm_l2(disc.mass(), fh.values());
}

PoincareEstimate estimate_poincare(const Discretization& disc, const SolverSettings& settings,
                                   const PoincareOptions& options) {
    const SparseSymMatrix& a = disc.stiffness_interior();
    const SparseSymMatrix& m = disc.mass_interior();
    const std::size_t n = a.dimension();

    std::vector<double> x(n, 1.0);
    {
        const double s = std::sqrt(m.bilinear(x, x));
        for (double& v : x) v /= s;
    }
    double rq = a.bilinear(x, x);

    PoincareEstimate est;
    for (std::size_t it = 1;; ++it) {
        if (it > options.max_outer_iterations) {
            throw SolverError("estimate_poincare: Rayleigh quotient did not settle within " +
                                  std::to_string(options.max_outer_iterations) + " iterations",
                              options.max_outer_iterations, rq);
        }
        CgResult cg = cg_solve(a, m.apply(x), settings);
        const double s = std::sqrt(m.bilinear(cg.x, cg.x));
        for (double& v : cg.x) v /= s;
        x = std::move(cg.x);
        const double rq_next = a.bilinear(x, x);
        const bool settled = std::abs(rq_next - rq) < options.rq_tolerance * std::abs(rq_next);
        rq = rq_next;
        if (settled) {
            est.iterations = it;
            break;
        }
    }

    est.lambda_min = rq;
    est.a = 1.0 / std::sqrt(rq);
    const std::vector<double> ax = a.apply(x);
    const std::vector<double> mx = m.apply(x);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = ax[i] - rq * mx[i];
    est.residual = norm2(r) / (rq * norm2(mx));
    est.eigenvector = InteriorField(std::move(x));
    return est;
}

Bound check_functional_bound(const Discretization& disc, const ProblemData& data, double a,
                             const SolverSettings& settings) {
    const Field load = assemble_load(disc.mesh(), data.f);
    const LinearFunctional lam = build_functional(disc, load, data.g);
    const Representation rep = riesz_represent(disc.stiffness_interior(), lam, settings);
    Bound b;
    b.lhs = norm_grad(disc.stiffness_interior(), rep.point.values());
    b.rhs = a * source_norm(disc, load, settings) + norm_grad(disc.stiffness(), data.g.values());
    return b;
}

StabilityCheck check_stability(const Discretization& disc, const SolveReport& report, const ProblemData& data,
                               double a, const SolverSettings& settings) {
    StabilityCheck out;
    out.source_norm = source_norm(disc, assemble_load(disc.mesh(), data.f), settings);
    const double data_bound = a * out.source_norm + norm_grad(disc.stiffness(), data.g.values());
    const double lift = std::sqrt(a * a + 1.0);

    out.solution.lhs = norm_w12(disc.stiffness(), disc.mass(), report.u.values());
    out.solution.rhs = lift * data_bound + norm_w12(disc.stiffness(), disc.mass(), data.g.values());
    const Field offset = report.u - data.g;
    out.offset.lhs = norm_w12(disc.stiffness(), disc.mass(), offset.values());
    out.offset.rhs = lift * data_bound;
    return out;
}

double l2_error(const Mesh& mesh, const Field& u, const ScalarFunction& exact) {
    if (u.size() != mesh.node_count()) throw std::invalid_argument("l2_error: field does not match mesh");
    // Dunavant degree-4 rule: two orbits of three points.
    struct Orbit {
        double weight;
        double a;
    };
    constexpr std::array<Orbit, 2> orbits{{{0.223381589678011, 0.445948490915965},
                                           {0.109951743655322, 0.091576213509771}}};
    const auto nodes = mesh.nodes();
    double sum = 0.0;
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        const Triangle& tri = mesh.triangles()[t];
        const double area = mesh.signed_area(t);
        for (const Orbit& o : orbits) {
            const double b = 1.0 - 2.0 * o.a;
            const std::array<std::array<double, 3>, 3> bary{{{b, o.a, o.a}, {o.a, b, o.a}, {o.a, o.a, b}}};
            for (const auto& l : bary) {
                double x = 0.0;
                double y = 0.0;
                double uh = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    x += l[k] * nodes[tri[k]].x;
                    y += l[k] * nodes[tri[k]].y;
                    uh += l[k] * u[tri[k]];
                }
                const double e = exact(x, y) - uh;
                sum += o.weight * area * e * e;
            }
        }
    }
    return std::sqrt(sum);
}

double max_nodal_error(const Mesh& mesh, const Field& u, const ScalarFunction& exact) {
    if (u.size() != mesh.node_count()) throw std::invalid_argument("max_nodal_error: field does not match mesh");
    double m = 0.0;
    const auto nodes = mesh.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) m = std::max(m, std::abs(exact(nodes[i].x, nodes[i].y) - u[i]));
    return m;
}

}  // namespace ritz
