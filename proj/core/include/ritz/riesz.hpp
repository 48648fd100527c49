#pragma once

#include "ritz/field.hpp"
#include "ritz/linsolve.hpp"
#include "ritz/sparse.hpp"

#include <cstddef>
#include <vector>

namespace ritz {

// A bounded linear functional on the interior space, stored by its values on
// the interior basis: coefficients[i] = lambda(phi_i).
class LinearFunctional {
public:
    LinearFunctional() = default;
    // Throws std::invalid_argument if any coefficient is non-finite.
    explicit LinearFunctional(std::vector<double> coefficients);

    [[nodiscard]] std::size_t size() const noexcept { return coefficients_.size(); }
    [[nodiscard]] std::span<const double> coefficients() const noexcept { return coefficients_; }
    double operator[](std::size_t i) const { return coefficients_[i]; }

    // lambda(v)
    [[nodiscard]] double operator()(const InteriorField& v) const;

    friend LinearFunctional operator+(const LinearFunctional& a, const LinearFunctional& b);
    friend LinearFunctional operator*(double s, const LinearFunctional& a);

private:
    std::vector<double> coefficients_;
};

struct Representation {
    InteriorField point;
    std::size_t iterations = 0;
    double residual = 0.0;
};

// The duality map J: x -> (x | .)_grad, i.e. A_int x.
[[nodiscard]] LinearFunctional apply_dual(const SparseSymMatrix& stiffness_interior, const InteriorField& x);

// Its inverse R: the unique p with (p | phi)_grad = lambda(phi) for all
// interior phi, found by one SPD solve A_int p = lambda.
[[nodiscard]] Representation riesz_represent(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                                             const SolverSettings& settings = {});

// Bracket-min objective 1/2 x^T A_int x - lambda(x).
[[nodiscard]] double energy(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                            const InteriorField& x);

// |energy(x) + 1/2 ||p||^2 - 1/2 ||x - p||^2| for the representer p of lam.
// Zero up to roundoff and solver error when p represents lam.
[[nodiscard]] double check_square_identity(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                                           const InteriorField& p, const InteriorField& x);

// Dual norm sqrt(lambda^T A_int^{-1} lambda), evaluated as sqrt(lambda(p)).
[[nodiscard]] double dual_norm(const SparseSymMatrix& stiffness_interior, const LinearFunctional& lam,
                               const SolverSettings& settings = {});

}  // namespace ritz
