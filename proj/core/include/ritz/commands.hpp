#pragma once

#include "ritz/assembly.hpp"
#include "ritz/dirichlet.hpp"
#include "ritz/expr.hpp"
#include "ritz/problem_file.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ritz {

// Exit statuses shared by every subcommand.
enum ExitStatus : int {
    exit_ok = 0,
    exit_parse_error = 1,
    exit_solver_failure = 2,
    exit_io_error = 3,
    exit_check_failed = 4,
};

// Mesh, Gram matrices and data functions built from a problem file.
struct ProblemSetup {
    Discretization disc;
    expr::Expr f_expr;
    expr::Expr g_expr;
    ScalarFunction f;
    // Initial extension: g interpolated (extension mode) or the zero-interior
    // extension of its boundary samples (border mode).
    Field g;
    BoundaryMode mode;

    [[nodiscard]] ProblemData data() const { return {f, g}; }
};

[[nodiscard]] ProblemSetup make_setup(const ProblemSpec& spec);
[[nodiscard]] ProblemSetup make_setup(const ProblemSpec& spec, std::size_t nx, std::size_t ny);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The full invariant suite on one problem plus seeded random perturbations.
[[nodiscard]] std::vector<CheckOutcome> run_invariant_checks(const ProblemSpec& spec, std::uint64_t seed);

// Subcommands. Each returns an ExitStatus and reports errors on err.
int cmd_solve(const std::filesystem::path& spec_path, const std::filesystem::path& out_path, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::filesystem::path& spec_path, std::optional<std::uint64_t> seed, std::ostream& out,
               std::ostream& err);
int cmd_poincare(const std::filesystem::path& spec_path, std::ostream& out, std::ostream& err);
int cmd_convergence(const std::filesystem::path& spec_path, std::size_t levels, std::ostream& out,
                    std::ostream& err);

// Path of the plain-text report written next to a solution CSV.
[[nodiscard]] std::filesystem::path report_path_for(const std::filesystem::path& csv_path);

}  // namespace ritz
