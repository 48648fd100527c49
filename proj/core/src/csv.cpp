#include "ritz/csv.hpp"

#include "ritz/errors.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace ritz {

namespace {

constexpr std::string_view kHeader = "node_index,x,y,u,is_boundary";

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_solution_csv(std::ostream& out, const Mesh& mesh, const Field& u) {
    if (u.size() != mesh.node_count()) throw std::invalid_argument("write_solution_csv: field does not match mesh");
    out << kHeader << '\n';
    for (std::size_t i = 0; i < mesh.node_count(); ++i) {
        const Point p = mesh.node(i);
        out << i << ',' << format_real(p.x) << ',' << format_real(p.y) << ',' << format_real(u[i]) << ','
            << (mesh.is_boundary(i) ? 1 : 0) << '\n';
    }
}

void write_solution_csv(const std::filesystem::path& path, const Mesh& mesh, const Field& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_solution_csv(out, mesh, u);
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<SolutionRow> read_solution_csv(std::istream& in) {
    std::string line;
    std::size_t offset = 0;
    if (!std::getline(in, line) || line != kHeader) throw ParseError("solution csv: missing or wrong header", 0);
    offset += line.size() + 1;

    std::vector<SolutionRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            offset += 1;
            continue;
        }
        std::array<std::string_view, 5> cells;
        std::string_view rest = line;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (k + 1 == cells.size())) {
                throw ParseError("solution csv: expected 5 columns", offset);
            }
            cells[k] = rest.substr(0, comma);
            if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
        }
        auto parse = [&](std::string_view s, auto& value) {
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size()) {
                throw ParseError("solution csv: bad value '" + std::string(s) + "'", offset);
            }
        };
        SolutionRow row;
        int boundary = 0;
        parse(cells[0], row.node_index);
        parse(cells[1], row.x);
        parse(cells[2], row.y);
        parse(cells[3], row.u);
        parse(cells[4], boundary);
        if (boundary != 0 && boundary != 1) throw ParseError("solution csv: is_boundary must be 0 or 1", offset);
        row.is_boundary = boundary == 1;
        rows.push_back(row);
        offset += line.size() + 1;
    }
    return rows;
}

std::vector<SolutionRow> read_solution_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return read_solution_csv(in);
}

}  // namespace ritz
