#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace ritz::expr {

enum class Variable { x, y };
enum class Function { sin, cos, exp, sqrt, abs };
enum class BinaryOp { add, sub, mul, div, pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
    double value;
};
struct Var {
    Variable which;
};
struct Pi {};
struct Negate {
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Call {
    Function fn;
    NodePtr arg;
};

struct Node {
    std::variant<Number, Var, Pi, Negate, Binary, Call> value;
};

// Immutable parsed expression; cheap to copy and safe to share across threads.
class Expr {
public:
    explicit Expr(NodePtr root) : root_(std::move(root)) {}

    [[nodiscard]] const Node& root() const noexcept { return *root_; }

    // Throws EvaluationError carrying (x, y) on division by zero, domain
    // errors, or any non-finite intermediate.
    [[nodiscard]] double operator()(double x, double y) const;

    // Parenthesized text that parses back to an identical tree.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    NodePtr root_;
};

// Grammar, loosest to tightest: + -, then * /, then unary -, then ^ (right
// associative). Atoms: numbers, x, y, pi, sin/cos/exp/sqrt/abs(...), and
// parentheses. Throws ParseError with a byte offset, or
// UnknownIdentifierError naming the identifier.
[[nodiscard]] Expr parse(std::string_view src);

[[nodiscard]] inline double eval(const Expr& e, double x, double y) { return e(x, y); }

}  // namespace ritz::expr
