// ritz: Ritz-Galerkin solver and verifier for the Dirichlet problem on
// rectangles.
//
//   ritz solve --spec problem.txt --out solution.csv
//   ritz verify --spec problem.txt [--seed N]
//   ritz poincare --spec problem.txt
//   ritz convergence --spec problem.txt --levels 3

#include "ritz/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Ritz-Galerkin solver for Dirichlet's min-problem on rectangles"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path = "solution.csv";
    std::size_t levels = 3;
    std::optional<std::uint64_t> seed;

    auto* solve = app.add_subcommand("solve", "solve the problem and write CSV plus report");
    solve->add_option("--spec", spec_path, "problem file")->required();
    solve->add_option("--out", out_path, "solution CSV path (report goes to <stem>.report.txt)");

    auto* verify = app.add_subcommand("verify", "run the invariant suite with seeded perturbations");
    verify->add_option("--spec", spec_path, "problem file")->required();
    verify->add_option("--seed", seed, "random seed (overrides the problem file; default 42)");

    auto* poincare = app.add_subcommand("poincare", "estimate the discrete Poincare constant");
    poincare->add_option("--spec", spec_path, "problem file")->required();

    auto* convergence = app.add_subcommand("convergence", "error table against u_exact under refinement");
    convergence->add_option("--spec", spec_path, "problem file")->required();
    convergence->add_option("--levels", levels, "number of grid levels, doubling each time")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ritz::exit_parse_error;
    }

    if (*solve) return ritz::cmd_solve(spec_path, out_path, std::cout, std::cerr);
    if (*verify) return ritz::cmd_verify(spec_path, seed, std::cout, std::cerr);
    if (*poincare) return ritz::cmd_poincare(spec_path, std::cout, std::cerr);
    return ritz::cmd_convergence(spec_path, levels, std::cout, std::cerr);
}
