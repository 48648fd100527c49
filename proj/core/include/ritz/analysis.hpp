#pragma once

#include "ritz/assembly.hpp"
#include "ritz/dirichlet.hpp"
#include "ritz/linsolve.hpp"

#include <cstddef>

namespace ritz {

// Discrete Poincare/Friedrichs constant: ||v||_2 <= a ||v||_grad for every
// interior field v, with a = 1 / sqrt(lambda_min) of the pencil (A_int, M_int).
struct PoincareEstimate {
    double a = 0.0;
    double lambda_min = 0.0;
    std::size_t iterations = 0;
    // ||A_int v - lambda M_int v||_2 / ||lambda M_int v||_2 at the returned v.
    double residual = 0.0;
    // M-normalized minimizing eigenvector.
    InteriorField eigenvector;
};

struct PoincareOptions {
    double rq_tolerance = 1e-8;
    std::size_t max_outer_iterations = 10000;
};

// Inverse power iteration from the all-ones vector. Throws SolverError if CG
// fails or the Rayleigh quotient has not settled within the outer limit.
[[nodiscard]] PoincareEstimate estimate_poincare(const Discretization& disc, const SolverSettings& settings = {},
                                                 const PoincareOptions& options = {});

// L2 size of the source as the discrete space sees it: the norm of
// phi -> load^T phi against ||phi||_2 on interior fields,
// sqrt(b^T M_int^{-1} b) with b the interior part of the load. Never exceeds
// the mass norm of f's nodal interpolant when f is itself P1.
[[nodiscard]] double source_norm(const Discretization& disc, const Field& load, const SolverSettings& settings = {});

// Mass norm of the nodal interpolant of f.
[[nodiscard]] double interpolant_norm(const Discretization& disc, const ScalarFunction& f);

// Dual norm of Lambda(.; f, g) against a ||f|| + ||g||_grad, with ||f|| from
// source_norm.
[[nodiscard]] Bound check_functional_bound(const Discretization& disc, const ProblemData& data, double a,
                                           const SolverSettings& settings = {});

struct StabilityCheck {
    // ||u||_{1,2} against sqrt(a^2+1) (a ||f|| + ||g||_grad) + ||g||_{1,2}
    Bound solution;
    // ||u - g||_{1,2} against sqrt(a^2+1) (a ||f|| + ||g||_grad)
    Bound offset;
    double source_norm = 0.0;
};

[[nodiscard]] StabilityCheck check_stability(const Discretization& disc, const SolveReport& report,
                                             const ProblemData& data, double a, const SolverSettings& settings = {});

// L2 distance between the P1 function u and an exact solution, by a
// degree-4 six-point rule on every triangle.
[[nodiscard]] double l2_error(const Mesh& mesh, const Field& u, const ScalarFunction& exact);
[[nodiscard]] double max_nodal_error(const Mesh& mesh, const Field& u, const ScalarFunction& exact);

}  // namespace ritz
