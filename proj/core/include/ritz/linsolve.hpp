#pragma once

#include "ritz/sparse.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ritz {

struct SolverSettings {
    double rel_tolerance = 1e-10;
    // Unset means 10 x the system dimension.
    std::optional<std::size_t> max_iterations;

    // Throws std::invalid_argument unless rel_tolerance is in (0, 1) and
    // max_iterations (when set) is at least 1.
    void validate() const;
    [[nodiscard]] std::size_t iteration_limit(std::size_t dimension) const;
};

struct CgResult {
    std::vector<double> x;
    std::size_t iterations = 0;
    // ||A x - b||_2, recomputed from the returned x.
    double residual = 0.0;
};

// Jacobi-preconditioned conjugate gradients for a symmetric positive definite
// matrix. Converged when ||A x - b||_2 <= rel_tolerance * ||b||_2.
// Throws SolverError on breakdown (non-positive curvature, NaN/Inf) or when
// the iteration limit is reached.
[[nodiscard]] CgResult cg_solve(const SparseSymMatrix& a, std::span<const double> b,
                                const SolverSettings& settings = {});

}  // namespace ritz
