#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ritz {

// Raised by the expression parser and the problem-file reader.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(const std::string& name, std::size_t offset)
        : ParseError("unknown identifier '" + name + "' at offset " + std::to_string(offset), offset),
          name_(name) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A data function produced a non-finite value or hit a domain error.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double x, double y)
        : std::runtime_error(what + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
          x_(x), y_(y) {}

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }

private:
    double x_;
    double y_;
};

// Linear or eigenvalue iteration failed to converge, or broke down.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::size_t iterations, double residual)
        : std::runtime_error(what), iterations_(iterations), residual_(residual) {}

    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ritz
