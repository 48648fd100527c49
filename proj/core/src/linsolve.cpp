#include "ritz/linsolve.hpp"

#include "ritz/errors.hpp"
#include "ritz/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ritz {

void SolverSettings::validate() const {
    if (!(rel_tolerance > 0.0 && rel_tolerance < 1.0)) {
        throw std::invalid_argument("solver rel_tolerance must lie in (0, 1), got " + std::to_string(rel_tolerance));
    }
    if (max_iterations && *max_iterations < 1) throw std::invalid_argument("solver max_iterations must be >= 1");
}

std::size_t SolverSettings::iteration_limit(std::size_t dimension) const {
    return max_iterations.value_or(std::max<std::size_t>(1, 10 * dimension));
}

namespace {

void residual_of(const SparseSymMatrix& a, std::span<const double> x, std::span<const double> b,
                 std::vector<double>& r) {
    a.apply(x, r);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
}

}  // namespace

CgResult cg_solve(const SparseSymMatrix& a, std::span<const double> b, const SolverSettings& settings) {
    settings.validate();
    const std::size_t n = a.dimension();
    if (b.size() != n) {
        throw std::invalid_argument("cg_solve: right-hand side has " + std::to_string(b.size()) +
                                    " entries, matrix dimension is " + std::to_string(n));
    }

    CgResult out;
    out.x.assign(n, 0.0);
    const double b_norm = norm2(b);
    if (!std::isfinite(b_norm)) throw SolverError("cg_solve: right-hand side is not finite", 0, b_norm);
    if (b_norm == 0.0) return out;

    std::vector<double> inv_diag = a.diagonal();
    for (double& d : inv_diag) {
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw SolverError("cg_solve: matrix diagonal is not positive; matrix is not positive definite", 0, b_norm);
        }
        d = 1.0 / d;
    }

    const double target = settings.rel_tolerance * b_norm;
    const std::size_t limit = settings.iteration_limit(n);

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z(n);
    std::vector<double> p(n);
    std::vector<double> ap(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] = inv_diag[i] * r[i];
    double rz = dot(r, z);
    double r_norm = b_norm;

    while (true) {
        if (r_norm <= target) {
            // The recursive residual drifts from the true one; only stop on the latter.
            residual_of(a, out.x, b, r);
            r_norm = norm2(r);
            if (r_norm <= target) break;
            for (std::size_t i = 0; i < n; ++i) p[i] = z[i] = inv_diag[i] * r[i];
            rz = dot(r, z);
        }
        if (out.iterations >= limit) {
            residual_of(a, out.x, b, r);
            out.residual = norm2(r);
            throw SolverError("cg_solve: no convergence within " + std::to_string(limit) +
                                  " iterations (residual " + std::to_string(out.residual) + ", target " +
                                  std::to_string(target) + ")",
                              out.iterations, out.residual);
        }

        a.apply(p, ap);
        const double curvature = dot(p, ap);
        if (!std::isfinite(curvature) || curvature <= 0.0) {
            throw SolverError("cg_solve: non-positive or non-finite curvature; matrix is indefinite or broken",
                              out.iterations, r_norm);
        }
        const double alpha = rz / curvature;
        for (std::size_t i = 0; i < n; ++i) {
            out.x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        ++out.iterations;

        r_norm = norm2(r);
        if (!std::isfinite(r_norm)) {
            throw SolverError("cg_solve: residual became non-finite", out.iterations, r_norm);
        }
        for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    out.residual = r_norm;
    return out;
}

}  // namespace ritz
