#include "ritz/riesz.hpp"

#include <algorithm>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ritz {

LinearFunctional::LinearFunctional(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (!std::isfinite(coefficients_[i])) {
            throw std::invalid_argument("linear functional coefficient " + std::to_string(i) + " is not finite");
        }
    }
}

double LinearFunctional::operator()(const InteriorField& v) const { return dot(coefficients_, v.values()); }

LinearFunctional operator+(const LinearFunctional& a, const LinearFunctional& b) {
    if (a.size() != b.size()) throw std::invalid_argument("linear functional dimension mismatch");
    std::vector<double> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return LinearFunctional(std::move(c));
}

LinearFunctional operator*(double s, const LinearFunctional& a) {
    std::vector<double> c(a.coefficients().begin(), a.coefficients().end());
    for (double& v : c) v *= s;
    return LinearFunctional(std::move(c));
}

LinearFunctional apply_dual(const SparseSymMatrix& stiffness_interior, const InteriorField& x) {
    return LinearFunctional(stiffness_interior.apply(x.values()));
}

Representation riesz_represent(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                               const SolverSettings& settings) {
    CgResult cg = cg_solve(stiffness_interior, lam.coefficients(), settings);
    return {InteriorField(std::move(cg.x)), cg.iterations, cg.residual};
}

double energy(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam, const InteriorField& x) {
    if (lam.size() != x.size()) throw std::invalid_argument("energy: functional and field dimensions differ");
    return 0.5 * stiffness_interior.bilinear(x.values(), x.values()) - lam(x);
}

double check_square_identity(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                             const InteriorField& p, const InteriorField& x) {
    const double shifted = energy(stiffness_interior, lam, x) + 0.5 * stiffness_interior.bilinear(p.values(), p.values());
    const InteriorField d = x - p;
    const double square = 0.5 * stiffness_interior.bilinear(d.values(), d.values());
    return std::abs(shifted - square);
}

double dual_norm(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                 const SolverSettings& settings) {
    const Representation r = riesz_represent(stiffness_interior, lam, settings);
    return std::sqrt(std::max(0.0, lam(r.point)));
}

}  // namespace ritz
