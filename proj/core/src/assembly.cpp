#include "ritz/assembly.hpp"

#include "ritz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ritz {

namespace {

double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double checked_value(const ScalarFunction& f, double x, double y) {
    const double v = f(x, y);
    if (!std::isfinite(v)) throw EvaluationError("data function is not finite", x, y);
    return v;
}

template <typename LocalFn>
SparseSymMatrix assemble(const Mesh& mesh, LocalFn local) {
    std::vector<MatrixEntry> entries;
    entries.reserve(6 * mesh.triangle_count());
    const auto nodes = mesh.nodes();
    for (const Triangle& t : mesh.triangles()) {
        const LocalMatrix k = local(nodes[t[0]], nodes[t[1]], nodes[t[2]]);
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a; b < 3; ++b) entries.push_back({t[a], t[b], k[a][b]});
        }
    }
    return SparseSymMatrix::from_entries(mesh.node_count(), entries);
}

double nonnegative_form(const SparseSymMatrix& m, std::span<const double> u, const char* name) {
    const auto q = m.quadratic(u);
    if (q.value < 0.0) {
        if (q.value < -1e-12 * q.scale) {
            throw std::logic_error(std::string(name) + ": quadratic form is negative (" + std::to_string(q.value) +
                                   "); matrix is not semidefinite");
        }
        return 0.0;
    }
    return q.value;
}

}  // namespace

LocalMatrix local_stiffness(const Point& a, const Point& b, const Point& c) {
    const double area = signed_area(a, b, c);
    // Unscaled barycentric gradients: grad lambda_k = g_k / (2 area).
    const std::array<Point, 3> g{{{b.y - c.y, c.x - b.x}, {c.y - a.y, a.x - c.x}, {a.y - b.y, b.x - a.x}}};
    LocalMatrix k{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) k[i][j] = (g[i].x * g[j].x + g[i].y * g[j].y) / (4.0 * area);
    }
    return k;
}

LocalMatrix local_mass(const Point& a, const Point& b, const Point& c) {
    const double s = signed_area(a, b, c) / 12.0;
    LocalMatrix m{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = i == j ? 2.0 * s : s;
    }
    return m;
}

SparseSymMatrix assemble_stiffness(const Mesh& mesh) { return assemble(mesh, local_stiffness); }

SparseSymMatrix assemble_mass(const Mesh& mesh) { return assemble(mesh, local_mass); }

Field assemble_load(const Mesh& mesh, const ScalarFunction& f) {
    Field load(mesh.node_count());
    const auto nodes = mesh.nodes();
    for (const Triangle& t : mesh.triangles()) {
        const Point& a = nodes[t[0]];
        const Point& b = nodes[t[1]];
        const Point& c = nodes[t[2]];
        const double w = signed_area(a, b, c) / 6.0;
        const double f_ab = checked_value(f, 0.5 * (a.x + b.x), 0.5 * (a.y + b.y));
        const double f_bc = checked_value(f, 0.5 * (b.x + c.x), 0.5 * (b.y + c.y));
        const double f_ca = checked_value(f, 0.5 * (c.x + a.x), 0.5 * (c.y + a.y));
        // phi_k is 1/2 at the two midpoints of edges touching vertex k, 0 at the third.
        load[t[0]] += w * (f_ab + f_ca);
        load[t[1]] += w * (f_ab + f_bc);
        load[t[2]] += w * (f_bc + f_ca);
    }
    return load;
}

Field interpolate(const Mesh& mesh, const ScalarFunction& f) {
    Field u(mesh.node_count());
    const auto nodes = mesh.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) u[i] = checked_value(f, nodes[i].x, nodes[i].y);
    return u;
}

double evaluate_p1(const Mesh& mesh, const Field& u, double x, double y) {
    if (u.size() != mesh.node_count()) throw std::invalid_argument("evaluate_p1: field does not match mesh");
    const Rect& d = mesh.domain();
    const double sx = (x - d.x0) / d.width() * static_cast<double>(mesh.nx());
    const double sy = (y - d.y0) / d.height() * static_cast<double>(mesh.ny());
    if (!(sx >= -1e-12 && sy >= -1e-12 && sx <= static_cast<double>(mesh.nx()) + 1e-12 &&
          sy <= static_cast<double>(mesh.ny()) + 1e-12)) {
        throw EvaluationError("point outside the mesh domain", x, y);
    }
    const auto i = std::min(static_cast<std::size_t>(std::max(sx, 0.0)), mesh.nx() - 1);
    const auto j = std::min(static_cast<std::size_t>(std::max(sy, 0.0)), mesh.ny() - 1);
    const double s = sx - static_cast<double>(i);
    const double t = sy - static_cast<double>(j);
    const double u00 = u[mesh.node_id(i, j)];
    const double u10 = u[mesh.node_id(i + 1, j)];
    const double u11 = u[mesh.node_id(i + 1, j + 1)];
    const double u01 = u[mesh.node_id(i, j + 1)];
    if (s >= t) return u00 + s * (u10 - u00) + t * (u11 - u10);
    return u00 + t * (u01 - u00) + s * (u11 - u01);
}

ScalarFunction p1_function(const Mesh& mesh, Field u) {
    auto state = std::make_shared<const std::pair<Mesh, Field>>(mesh, std::move(u));
    return [state](double x, double y) { return evaluate_p1(state->first, state->second, x, y); };
}

Discretization::Discretization(Mesh mesh)
    : mesh_(std::move(mesh)),
      gram_{assemble_stiffness(mesh_), assemble_mass(mesh_)},
      stiffness_interior_(gram_.stiffness.principal_submatrix(mesh_.interior_nodes())),
      mass_interior_(gram_.mass.principal_submatrix(mesh_.interior_nodes())) {}

double norm_grad(const SparseSymMatrix& stiffness, std::span<const double> u) {
    return std::sqrt(nonnegative_form(stiffness, u, "norm_grad"));
}

double norm_l2(const SparseSymMatrix& mass, std::span<const double> u) {
    return std::sqrt(nonnegative_form(mass, u, "norm_l2"));
}

double norm_w12(const SparseSymMatrix& stiffness, const SparseSymMatrix& mass, std::span<const double> u) {
    return std::sqrt(nonnegative_form(stiffness, u, "norm_w12") + nonnegative_form(mass, u, "norm_w12"));
}

InteriorField restrict_interior(const Mesh& mesh, const Field& u) {
    if (u.size() != mesh.node_count()) {
        throw std::invalid_argument("restrict_interior: field has " + std::to_string(u.size()) +
                                    " values, mesh has " + std::to_string(mesh.node_count()) + " nodes");
    }
    const auto interior = mesh.interior_nodes();
    InteriorField v(interior.size());
    for (std::size_t k = 0; k < interior.size(); ++k) v[k] = u[interior[k]];
    return v;
}

Field extend_by_zero(const Mesh& mesh, const InteriorField& v) {
    const auto interior = mesh.interior_nodes();
    if (v.size() != interior.size()) {
        throw std::invalid_argument("extend_by_zero: interior field has " + std::to_string(v.size()) +
                                    " values, mesh has " + std::to_string(interior.size()) + " interior nodes");
    }
    Field u(mesh.node_count());
    for (std::size_t k = 0; k < interior.size(); ++k) u[interior[k]] = v[k];
    return u;
}

}  // namespace ritz
