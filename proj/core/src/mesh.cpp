#include "ritz/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ritz {

Mesh::Mesh(const Rect& domain, std::size_t nx, std::size_t ny)
    : domain_(domain), nx_(nx), ny_(ny) {
    if (!(std::isfinite(domain.x0) && std::isfinite(domain.x1) && std::isfinite(domain.y0) &&
          std::isfinite(domain.y1)) ||
        !(domain.x1 > domain.x0) || !(domain.y1 > domain.y0)) {
        throw std::invalid_argument("degenerate rectangle: require x1 > x0 and y1 > y0");
    }
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("no interior degrees of freedom: grid must be at least 2x2, got " +
                                    std::to_string(nx) + "x" + std::to_string(ny));
    }

    const double w = domain.width();
    const double h = domain.height();
    nodes_.reserve((nx + 1) * (ny + 1));
    for (std::size_t j = 0; j <= ny; ++j) {
        // Pin the far edge to the exact bound so border classification is exact.
        const double y = j == ny ? domain.y1 : domain.y0 + h * static_cast<double>(j) / static_cast<double>(ny);
        for (std::size_t i = 0; i <= nx; ++i) {
            const double x = i == nx ? domain.x1 : domain.x0 + w * static_cast<double>(i) / static_cast<double>(nx);
            nodes_.push_back({x, y});
        }
    }

    triangles_.reserve(2 * nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t n00 = node_id(i, j);
            const std::size_t n10 = node_id(i + 1, j);
            const std::size_t n11 = node_id(i + 1, j + 1);
            const std::size_t n01 = node_id(i, j + 1);
            triangles_.push_back({n00, n10, n11});
            triangles_.push_back({n00, n11, n01});
        }
    }

    const double tol_x = 1e-12 * w;
    const double tol_y = 1e-12 * h;
    boundary_mask_.resize(nodes_.size());
    interior_slot_.assign(nodes_.size(), npos);
    boundary_slot_.assign(nodes_.size(), npos);
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        const Point p = nodes_[n];
        const bool on_border = std::abs(p.x - domain.x0) <= tol_x || std::abs(p.x - domain.x1) <= tol_x ||
                               std::abs(p.y - domain.y0) <= tol_y || std::abs(p.y - domain.y1) <= tol_y;
        boundary_mask_[n] = on_border;
        if (on_border) {
            boundary_slot_[n] = boundary_.size();
            boundary_.push_back(n);
        } else {
            interior_slot_[n] = interior_.size();
            interior_.push_back(n);
        }
    }
}

Point Mesh::node(std::size_t i) const {
    if (i >= nodes_.size()) {
        throw std::out_of_range("node index " + std::to_string(i) + " out of range (node count " +
                                std::to_string(nodes_.size()) + ")");
    }
    return nodes_[i];
}

double Mesh::signed_area(std::size_t t) const {
    const Triangle& tri = triangles_.at(t);
    const Point a = nodes_[tri[0]];
    const Point b = nodes_[tri[1]];
    const Point c = nodes_[tri[2]];
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

Mesh build_rect_mesh(double x0, double y0, double x1, double y1, std::size_t nx, std::size_t ny) {
    return Mesh(Rect{x0, y0, x1, y1}, nx, ny);
}

Point node_coordinates(const Mesh& mesh, std::size_t i) { return mesh.node(i); }

}  // namespace ritz
