#pragma once

#include "ritz/field.hpp"
#include "ritz/mesh.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace ritz {

// Solution table: header "node_index,x,y,u,is_boundary", one row per node,
// reals at 17 significant digits so doubles round-trip exactly.
void write_solution_csv(std::ostream& out, const Mesh& mesh, const Field& u);
// Throws IoError if the file cannot be written.
void write_solution_csv(const std::filesystem::path& path, const Mesh& mesh, const Field& u);

struct SolutionRow {
    std::size_t node_index = 0;
    double x = 0.0;
    double y = 0.0;
    double u = 0.0;
    bool is_boundary = false;
};

// Throws ParseError on a malformed table.
[[nodiscard]] std::vector<SolutionRow> read_solution_csv(std::istream& in);
[[nodiscard]] std::vector<SolutionRow> read_solution_csv(const std::filesystem::path& path);

// 17 significant digits.
[[nodiscard]] std::string format_real(double v);

}  // namespace ritz
