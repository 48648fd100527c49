#include "ritz/dirichlet.hpp"

#include "ritz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ritz {

namespace {

void require_mesh_field(const Mesh& mesh, const Field& u, const char* what) {
    if (u.size() != mesh.node_count()) {
        throw std::invalid_argument(std::string(what) + ": field has " + std::to_string(u.size()) +
                                    " values, mesh has " + std::to_string(mesh.node_count()) + " nodes");
    }
}

struct InteriorResidual {
    double max_abs = 0.0;
    double normalizer = 1.0;
};

InteriorResidual interior_residual(const Discretization& disc, const Field& u, const Field& load) {
    const Mesh& mesh = disc.mesh();
    require_mesh_field(mesh, u, "weak_residual");
    require_mesh_field(mesh, load, "weak_residual");
    const std::vector<double> au = disc.stiffness().apply(u.values());
    double max_res = 0.0;
    double max_load = 0.0;
    double max_au = 0.0;
    for (std::size_t node : mesh.interior_nodes()) {
        max_res = std::max(max_res, std::abs(au[node] - load[node]));
        max_load = std::max(max_load, std::abs(load[node]));
        max_au = std::max(max_au, std::abs(au[node]));
    }
    return {max_res, std::max(1.0, max_load + max_au)};
}

}  // namespace

LinearFunctional build_functional(const Discretization& disc, const Field& load, const Field& g) {
    const Mesh& mesh = disc.mesh();
    require_mesh_field(mesh, load, "build_functional");
    require_mesh_field(mesh, g, "build_functional");
    const std::vector<double> ag = disc.stiffness().apply(g.values());
    const auto interior = mesh.interior_nodes();
    std::vector<double> c(interior.size());
    for (std::size_t k = 0; k < interior.size(); ++k) c[k] = load[interior[k]] - ag[interior[k]];
    return LinearFunctional(std::move(c));
}

LinearFunctional build_functional(const Discretization& disc, const ProblemData& data) {
    return build_functional(disc, assemble_load(disc.mesh(), data.f), data.g);
}

double objective(const Discretization& disc, const Field& load, const Field& w) {
    require_mesh_field(disc.mesh(), w, "objective");
    return 0.5 * disc.stiffness().bilinear(w.values(), w.values()) - dot(load.values(), w.values());
}

SolveReport solve(const Discretization& disc, const ProblemData& data, const SolverSettings& settings) {
    const Mesh& mesh = disc.mesh();
    require_mesh_field(mesh, data.g, "solve");
    const Field load = assemble_load(mesh, data.f);
    const LinearFunctional lam = build_functional(disc, load, data.g);
    Representation rep = riesz_represent(disc.stiffness_interior(), lam, settings);

    SolveReport report;
    report.u = extend_by_zero(mesh, rep.point) + data.g;
    report.offset = std::move(rep.point);
    report.iterations = rep.iterations;
    report.cg_residual = rep.residual;

    const InteriorResidual res = interior_residual(disc, report.u, load);
    report.weak_residual = res.max_abs / res.normalizer;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double guaranteed = settings.rel_tolerance * norm2(lam.coefficients());
    const double roundoff = 64.0 * eps * res.normalizer * static_cast<double>(std::max<std::size_t>(1, lam.size()));
    report.residual_limit = (guaranteed + roundoff) / res.normalizer;
    if (report.weak_residual > report.residual_limit) {
        throw SolverError("solve: weak residual " + std::to_string(report.weak_residual) +
                              " exceeds the solver guarantee " + std::to_string(report.residual_limit),
                          report.iterations, report.cg_residual);
    }

    report.energy_value = objective(disc, load, report.u);
    report.norms.l2 = norm_l2(disc.mass(), report.u.values());
    report.norms.grad = norm_grad(disc.stiffness(), report.u.values());
    report.norms.w12 = norm_w12(disc.stiffness(), disc.mass(), report.u.values());
    return report;
}

double weak_residual(const Discretization& disc, const Field& u, const Field& load) {
    const InteriorResidual res = interior_residual(disc, u, load);
    return res.max_abs / res.normalizer;
}

double weak_residual(const Discretization& disc, const Field& u, const ScalarFunction& f) {
    return weak_residual(disc, u, assemble_load(disc.mesh(), f));
}

double verify_uniqueness(const Discretization& disc, const Field& u1, const Field& u2, const Field& load,
                         double residual_tolerance) {
    const Mesh& mesh = disc.mesh();
    require_mesh_field(mesh, u1, "verify_uniqueness");
    require_mesh_field(mesh, u2, "verify_uniqueness");
    for (std::size_t node : mesh.boundary_nodes()) {
        if (u1[node] != u2[node]) {
            throw std::invalid_argument("verify_uniqueness: boundary values differ at node " + std::to_string(node) +
                                        "; the fields extend different border data");
        }
    }
    for (const Field* u : {&u1, &u2}) {
        const double r = weak_residual(disc, *u, load);
        if (r > residual_tolerance) {
            throw std::invalid_argument("verify_uniqueness: field violates the critical equation (weak residual " +
                                        std::to_string(r) + " > " + std::to_string(residual_tolerance) + ")");
        }
    }
    const Field diff = u1 - u2;
    return norm_grad(disc.stiffness(), diff.values());
}

BoundaryData trace(const Mesh& mesh, const Field& u) {
    require_mesh_field(mesh, u, "trace");
    const auto boundary = mesh.boundary_nodes();
    BoundaryData g0(boundary.size());
    for (std::size_t k = 0; k < boundary.size(); ++k) g0[k] = u[boundary[k]];
    return g0;
}

Field extend(const Mesh& mesh, const BoundaryData& g0) {
    const auto boundary = mesh.boundary_nodes();
    if (g0.size() != boundary.size()) {
        throw std::invalid_argument("extend: border data has " + std::to_string(g0.size()) + " values, mesh has " +
                                    std::to_string(boundary.size()) + " boundary nodes");
    }
    Field g(mesh.node_count());
    for (std::size_t k = 0; k < boundary.size(); ++k) g[boundary[k]] = g0[k];
    return g;
}

SolveReport quotient_solve(const Discretization& disc, const ScalarFunction& f, const BoundaryData& g0,
                           const SolverSettings& settings) {
    return solve(disc, ProblemData{f, extend(disc.mesh(), g0)}, settings);
}

}  // namespace ritz
