#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ritz {

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

// Symmetric sparse matrix storing only the upper triangle (row <= col) in
// compressed rows. Duplicate contributions are summed in the order they were
// supplied, so assembly order fixes the result bit for bit.
class SparseSymMatrix {
public:
    SparseSymMatrix() = default;

    // Entries may address either triangle; (i, j) and (j, i) are the same slot.
    static SparseSymMatrix from_entries(std::size_t dimension, std::span<const MatrixEntry> entries);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::size_t stored_entries() const noexcept { return cols_.size(); }

    [[nodiscard]] double at(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::vector<double> diagonal() const;

    // y = A x
    void apply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;

    // x^T A y; symmetric bilinear form.
    [[nodiscard]] double bilinear(std::span<const double> x, std::span<const double> y) const;

    // x^T A x together with sum |a_ij||x_i||x_j|, the roundoff scale of the form.
    struct QuadraticForm {
        double value = 0.0;
        double scale = 0.0;
    };
    [[nodiscard]] QuadraticForm quadratic(std::span<const double> x) const;

    // Principal submatrix on the given (ascending) index subset.
    [[nodiscard]] SparseSymMatrix principal_submatrix(std::span<const std::size_t> keep) const;

    // Compressed upper-triangle rows, for iteration in tests and tools.
    [[nodiscard]] std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
    [[nodiscard]] std::span<const std::size_t> columns() const noexcept { return cols_; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return vals_; }

    [[nodiscard]] std::vector<MatrixEntry> to_entries() const;

    friend bool operator==(const SparseSymMatrix&, const SparseSymMatrix&) = default;

private:
    void check_dimension(std::size_t n) const;

    std::size_t dimension_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> cols_;
    std::vector<double> vals_;
};

}  // namespace ritz
