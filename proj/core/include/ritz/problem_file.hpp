#pragma once

#include "ritz/expr.hpp"
#include "ritz/linsolve.hpp"
#include "ritz/mesh.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace ritz {

enum class BoundaryMode {
    // g is interpolated on every node and used as the initial extension.
    extension,
    // g is sampled on boundary nodes only and extended by zero inside.
    border,
};

// Flat key = value problem description. Keys: domain, grid, f, g, mode, tol,
// max_iter, u_exact, seed. '#' starts a comment.
struct ProblemSpec {
    Rect domain{0.0, 0.0, 1.0, 1.0};
    std::size_t nx = 16;
    std::size_t ny = 16;
    std::string f = "0";
    std::string g = "0";
    BoundaryMode mode = BoundaryMode::extension;
    SolverSettings solver;
    std::optional<std::string> u_exact;
    std::uint64_t seed = 42;
};

// Throws ParseError (offset = byte offset of the offending line) for
// malformed lines, unknown or repeated keys, bad values, and unparsable
// expressions; std::invalid_argument for a grid without interior nodes.
[[nodiscard]] ProblemSpec parse_problem_spec(std::string_view text);
// Throws IoError if the file cannot be read.
[[nodiscard]] ProblemSpec load_problem_spec(const std::filesystem::path& path);

[[nodiscard]] std::string to_string(BoundaryMode mode);

}  // namespace ritz
