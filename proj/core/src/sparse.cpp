#include "ritz/sparse.hpp"

#include "ritz/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ritz {

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double norm_inf(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

SparseSymMatrix SparseSymMatrix::from_entries(std::size_t dimension, std::span<const MatrixEntry> entries) {
    std::vector<MatrixEntry> upper;
    upper.reserve(entries.size());
    for (const MatrixEntry& e : entries) {
        if (e.row >= dimension || e.col >= dimension) {
            throw std::out_of_range("matrix entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                    ") outside dimension " + std::to_string(dimension));
        }
        upper.push_back({std::min(e.row, e.col), std::max(e.row, e.col), e.value});
    }
    std::stable_sort(upper.begin(), upper.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseSymMatrix m;
    m.dimension_ = dimension;
    m.offsets_.assign(dimension + 1, 0);
    const MatrixEntry* last = nullptr;
    for (const MatrixEntry& e : upper) {
        if (last != nullptr && last->row == e.row && last->col == e.col) {
            m.vals_.back() += e.value;
            continue;
        }
        m.cols_.push_back(e.col);
        m.vals_.push_back(e.value);
        ++m.offsets_[e.row + 1];
        last = &e;
    }
    std::partial_sum(m.offsets_.begin(), m.offsets_.end(), m.offsets_.begin());
    return m;
}

void SparseSymMatrix::check_dimension(std::size_t n) const {
    if (n != dimension_) {
        throw std::invalid_argument("dimension mismatch: matrix " + std::to_string(dimension_) + ", vector " +
                                    std::to_string(n));
    }
}

double SparseSymMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= dimension_ || j >= dimension_) throw std::out_of_range("matrix index out of range");
    const std::size_t r = std::min(i, j);
    const std::size_t c = std::max(i, j);
    const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[r]);
    const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[r + 1]);
    const auto it = std::lower_bound(first, last, c);
    if (it == last || *it != c) return 0.0;
    return vals_[static_cast<std::size_t>(it - cols_.begin())];
}

std::vector<double> SparseSymMatrix::diagonal() const {
    std::vector<double> d(dimension_, 0.0);
    for (std::size_t r = 0; r < dimension_; ++r) {
        if (offsets_[r] < offsets_[r + 1] && cols_[offsets_[r]] == r) d[r] = vals_[offsets_[r]];
    }
    return d;
}

void SparseSymMatrix::apply(std::span<const double> x, std::span<double> y) const {
    check_dimension(x.size());
    check_dimension(y.size());
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t r = 0; r < dimension_; ++r) {
        double acc = 0.0;
        for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
            const std::size_t c = cols_[k];
            acc += vals_[k] * x[c];
            if (c != r) y[c] += vals_[k] * x[r];
        }
        y[r] += acc;
    }
}

std::vector<double> SparseSymMatrix::apply(std::span<const double> x) const {
    std::vector<double> y(dimension_);
    apply(x, y);
    return y;
}

double SparseSymMatrix::bilinear(std::span<const double> x, std::span<const double> y) const {
    check_dimension(x.size());
    check_dimension(y.size());
    double s = 0.0;
    for (std::size_t r = 0; r < dimension_; ++r) {
        for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
            const std::size_t c = cols_[k];
            s += c == r ? vals_[k] * x[r] * y[r] : vals_[k] * (x[r] * y[c] + x[c] * y[r]);
        }
    }
    return s;
}

SparseSymMatrix::QuadraticForm SparseSymMatrix::quadratic(std::span<const double> x) const {
    check_dimension(x.size());
    QuadraticForm q;
    for (std::size_t r = 0; r < dimension_; ++r) {
        for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
            const std::size_t c = cols_[k];
            const double mult = c == r ? 1.0 : 2.0;
            q.value += mult * vals_[k] * x[r] * x[c];
            q.scale += mult * std::abs(vals_[k] * x[r] * x[c]);
        }
    }
    return q;
}

SparseSymMatrix SparseSymMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot(dimension_, none);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dimension_) throw std::out_of_range("principal_submatrix: index out of range");
        if (k > 0 && keep[k] <= keep[k - 1]) throw std::invalid_argument("principal_submatrix: indices must ascend");
        slot[keep[k]] = k;
    }

    SparseSymMatrix m;
    m.dimension_ = keep.size();
    m.offsets_.assign(keep.size() + 1, 0);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const std::size_t r = keep[k];
        for (std::size_t e = offsets_[r]; e < offsets_[r + 1]; ++e) {
            const std::size_t c = slot[cols_[e]];
            if (c == none) continue;
            m.cols_.push_back(c);
            m.vals_.push_back(vals_[e]);
        }
        m.offsets_[k + 1] = m.cols_.size();
    }
    return m;
}

std::vector<MatrixEntry> SparseSymMatrix::to_entries() const {
    std::vector<MatrixEntry> out;
    out.reserve(cols_.size());
    for (std::size_t r = 0; r < dimension_; ++r) {
        for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) out.push_back({r, cols_[k], vals_[k]});
    }
    return out;
}

}  // namespace ritz
