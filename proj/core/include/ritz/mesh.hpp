#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ritz {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;

    [[nodiscard]] double width() const noexcept { return x1 - x0; }
    [[nodiscard]] double height() const noexcept { return y1 - y0; }
    [[nodiscard]] double area() const noexcept { return width() * height(); }

    friend bool operator==(const Rect&, const Rect&) = default;
};

using Triangle = std::array<std::size_t, 3>;

// Structured triangulation of an axis-aligned rectangle. Nodes are numbered
// row-major from (x0, y0); every cell is split along its lower-left to
// upper-right diagonal into two counterclockwise triangles. Immutable after
// construction.
class Mesh {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Mesh(const Rect& domain, std::size_t nx, std::size_t ny);

    [[nodiscard]] const Rect& domain() const noexcept { return domain_; }
    [[nodiscard]] std::size_t nx() const noexcept { return nx_; }
    [[nodiscard]] std::size_t ny() const noexcept { return ny_; }

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::size_t triangle_count() const noexcept { return triangles_.size(); }
    [[nodiscard]] std::size_t interior_count() const noexcept { return interior_.size(); }
    [[nodiscard]] std::size_t boundary_count() const noexcept { return boundary_.size(); }

    [[nodiscard]] std::span<const Point> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const Triangle> triangles() const noexcept { return triangles_; }

    // Bounds-checked; throws std::out_of_range.
    [[nodiscard]] Point node(std::size_t i) const;

    [[nodiscard]] bool is_boundary(std::size_t i) const { return boundary_mask_.at(i); }
    [[nodiscard]] const std::vector<bool>& boundary_mask() const noexcept { return boundary_mask_; }

    // Interior position -> global node index, ascending.
    [[nodiscard]] std::span<const std::size_t> interior_nodes() const noexcept { return interior_; }
    // Boundary position -> global node index, ascending.
    [[nodiscard]] std::span<const std::size_t> boundary_nodes() const noexcept { return boundary_; }
    // Global node index -> interior position, or npos for boundary nodes.
    [[nodiscard]] std::size_t interior_slot(std::size_t i) const { return interior_slot_.at(i); }
    [[nodiscard]] std::size_t boundary_slot(std::size_t i) const { return boundary_slot_.at(i); }

    [[nodiscard]] std::size_t node_id(std::size_t i, std::size_t j) const noexcept {
        return j * (nx_ + 1) + i;
    }

    // Signed area of triangle t (positive for counterclockwise orientation).
    [[nodiscard]] double signed_area(std::size_t t) const;

private:
    Rect domain_;
    std::size_t nx_;
    std::size_t ny_;
    std::vector<Point> nodes_;
    std::vector<Triangle> triangles_;
    std::vector<bool> boundary_mask_;
    std::vector<std::size_t> interior_;
    std::vector<std::size_t> boundary_;
    std::vector<std::size_t> interior_slot_;
    std::vector<std::size_t> boundary_slot_;
};

// Throws std::invalid_argument for a degenerate rectangle or for grids with
// fewer than two cells per axis (no interior degrees of freedom).
[[nodiscard]] Mesh build_rect_mesh(double x0, double y0, double x1, double y1,
                                   std::size_t nx, std::size_t ny);

[[nodiscard]] Point node_coordinates(const Mesh& mesh, std::size_t i);

}  // namespace ritz
