#pragma once

#include "ritz/assembly.hpp"
#include "ritz/field.hpp"
#include "ritz/linsolve.hpp"
#include "ritz/riesz.hpp"

#include <cstddef>
#include <optional>

namespace ritz {

// Data pair (f, g): source f and an initial extension g of the border data.
struct ProblemData {
    ScalarFunction f;
    Field g;
};

struct NormTriple {
    double l2 = 0.0;
    double grad = 0.0;
    double w12 = 0.0;
};

// One side-by-side inequality check; holds when lhs <= rhs * (1 + slack).
struct Bound {
    double lhs = 0.0;
    double rhs = 0.0;

    [[nodiscard]] bool holds(double slack = 1e-8) const noexcept { return lhs <= rhs * (1.0 + slack); }
};

struct SolveReport {
    Field u;
    // u - g, the representer of the data functional.
    InteriorField offset;
    // 1/2 ||u||_grad^2 - (f | u), with (f | .) from the load quadrature.
    double energy_value = 0.0;
    double weak_residual = 0.0;
    // Largest weak residual the solver tolerance guarantees for this solve.
    double residual_limit = 0.0;
    NormTriple norms;
    std::size_t iterations = 0;
    double cg_residual = 0.0;
    // Filled by check_stability; absent until then.
    std::optional<Bound> stability;
};

// Lambda(phi) = (f | phi)_2 - (g | phi)_grad on interior basis functions.
[[nodiscard]] LinearFunctional build_functional(const Discretization& disc, const ProblemData& data);
[[nodiscard]] LinearFunctional build_functional(const Discretization& disc, const Field& load, const Field& g);

// Objective 1/2 w^T A w - load^T w over all nodes.
[[nodiscard]] double objective(const Discretization& disc, const Field& load, const Field& w);

// Solution map S(f, g) = R Lambda(.; f, g) + g. The returned u equals g on
// every boundary node exactly. Throws SolverError when CG fails or the
// weak residual exceeds what the solver tolerance guarantees.
[[nodiscard]] SolveReport solve(const Discretization& disc, const ProblemData& data,
                                const SolverSettings& settings = {});

// max_i |(A u)_i - load_i| over interior nodes, divided by
// max(1, ||load||_inf + ||A u||_inf) (both over interior nodes).
[[nodiscard]] double weak_residual(const Discretization& disc, const Field& u, const Field& load);
[[nodiscard]] double weak_residual(const Discretization& disc, const Field& u, const ScalarFunction& f);

// ||u1 - u2||_grad for two solutions of the same problem. Throws
// std::invalid_argument if their boundary values differ or either one
// violates the critical equation by more than residual_tolerance.
[[nodiscard]] double verify_uniqueness(const Discretization& disc, const Field& u1, const Field& u2,
                                       const Field& load, double residual_tolerance);

// Boundary nodal values in global order.
[[nodiscard]] BoundaryData trace(const Mesh& mesh, const Field& u);
// Canonical member of the extension class: g0 on the border, zero inside.
[[nodiscard]] Field extend(const Mesh& mesh, const BoundaryData& g0);

// Quotient solution map: solves with the canonical extension of g0. Agrees
// with solve(f, g) for every g whose trace is g0.
[[nodiscard]] SolveReport quotient_solve(const Discretization& disc, const ScalarFunction& f, const BoundaryData& g0,
                                         const SolverSettings& settings = {});

}  // namespace ritz
