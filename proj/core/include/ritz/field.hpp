#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ritz {

// Nodal coefficient vector tagged by the index space it lives on, so a
// full-mesh field cannot be passed where an interior one is expected.
template <typename Tag>
class NodalVector {
public:
    NodalVector() = default;
    explicit NodalVector(std::size_t n, double value = 0.0) : values_(n, value) {}
    explicit NodalVector(std::vector<double> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<double> values() noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return values_; }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    NodalVector& operator+=(const NodalVector& other) {
        check_size(other);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
        return *this;
    }
    NodalVector& operator-=(const NodalVector& other) {
        check_size(other);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
        return *this;
    }
    NodalVector& operator*=(double s) {
        for (double& v : values_) v *= s;
        return *this;
    }

    friend NodalVector operator+(NodalVector a, const NodalVector& b) { return a += b; }
    friend NodalVector operator-(NodalVector a, const NodalVector& b) { return a -= b; }
    friend NodalVector operator*(double s, NodalVector a) { return a *= s; }
    friend NodalVector operator-(NodalVector a) { return a *= -1.0; }

    friend bool operator==(const NodalVector&, const NodalVector&) = default;

private:
    void check_size(const NodalVector& other) const {
        if (other.size() != size()) throw std::invalid_argument("nodal vector dimension mismatch");
    }

    std::vector<double> values_;
};

struct AllNodesTag {};
struct InteriorNodesTag {};
struct BoundaryNodesTag {};

// P1 function sum_i values[i] * phi_i over every mesh node.
using Field = NodalVector<AllNodesTag>;
// P1 function vanishing on the border; indexed by interior position.
using InteriorField = NodalVector<InteriorNodesTag>;
// Nodal border data, indexed by boundary position (global-index order).
using BoundaryData = NodalVector<BoundaryNodesTag>;

[[nodiscard]] double dot(std::span<const double> a, std::span<const double> b);
[[nodiscard]] double norm2(std::span<const double> a);
[[nodiscard]] double norm_inf(std::span<const double> a);

}  // namespace ritz
