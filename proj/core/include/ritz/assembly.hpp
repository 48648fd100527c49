#pragma once

#include "ritz/field.hpp"
#include "ritz/mesh.hpp"
#include "ritz/sparse.hpp"

#include <array>
#include <functional>

namespace ritz {

// Scalar data function of (x, y); may throw EvaluationError.
using ScalarFunction = std::function<double(double, double)>;

using LocalMatrix = std::array<std::array<double, 3>, 3>;

// Exact P1 element matrices for a triangle given by its three vertices.
[[nodiscard]] LocalMatrix local_stiffness(const Point& a, const Point& b, const Point& c);
[[nodiscard]] LocalMatrix local_mass(const Point& a, const Point& b, const Point& c);

// A[i][j] = integral of grad phi_i . grad phi_j; accumulated in triangle order.
[[nodiscard]] SparseSymMatrix assemble_stiffness(const Mesh& mesh);
// M[i][j] = integral of phi_i phi_j.
[[nodiscard]] SparseSymMatrix assemble_mass(const Mesh& mesh);

// b[i] ~ integral of f phi_i by the edge-midpoint rule (exact for quadratic
// integrands). Non-finite values of f raise EvaluationError at the point.
[[nodiscard]] Field assemble_load(const Mesh& mesh, const ScalarFunction& f);

// Nodal interpolant of f.
[[nodiscard]] Field interpolate(const Mesh& mesh, const ScalarFunction& f);

// Pointwise evaluation of the P1 function with the given nodal values.
[[nodiscard]] double evaluate_p1(const Mesh& mesh, const Field& u, double x, double y);
// Wraps a field as a ScalarFunction; mesh and field are copied into it.
[[nodiscard]] ScalarFunction p1_function(const Mesh& mesh, Field u);

// The two Gram matrices on one mesh, plus their interior restrictions.
struct GramPair {
    SparseSymMatrix stiffness;
    SparseSymMatrix mass;
};

class Discretization {
public:
    explicit Discretization(Mesh mesh);

    [[nodiscard]] const Mesh& mesh() const noexcept { return mesh_; }
    [[nodiscard]] const GramPair& gram() const noexcept { return gram_; }
    [[nodiscard]] const SparseSymMatrix& stiffness() const noexcept { return gram_.stiffness; }
    [[nodiscard]] const SparseSymMatrix& mass() const noexcept { return gram_.mass; }
    [[nodiscard]] const SparseSymMatrix& stiffness_interior() const noexcept { return stiffness_interior_; }
    [[nodiscard]] const SparseSymMatrix& mass_interior() const noexcept { return mass_interior_; }

private:
    Mesh mesh_;
    GramPair gram_;
    SparseSymMatrix stiffness_interior_;
    SparseSymMatrix mass_interior_;
};

// sqrt(u^T A u), sqrt(u^T M u), sqrt(u^T A u + u^T M u). A quadratic form
// below -1e-12 times its roundoff scale throws std::logic_error.
[[nodiscard]] double norm_grad(const SparseSymMatrix& stiffness, std::span<const double> u);
[[nodiscard]] double norm_l2(const SparseSymMatrix& mass, std::span<const double> u);
[[nodiscard]] double norm_w12(const SparseSymMatrix& stiffness, const SparseSymMatrix& mass,
                              std::span<const double> u);

[[nodiscard]] InteriorField restrict_interior(const Mesh& mesh, const Field& u);
[[nodiscard]] Field extend_by_zero(const Mesh& mesh, const InteriorField& v);

}  // namespace ritz
