#include "ritz/expr.hpp"

#include "ritz/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>

namespace ritz::expr {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    [[nodiscard]] const Token& peek() const noexcept { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            current_ = {Tok::end, start, {}};
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number(start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            current_ = {Tok::ident, start, src_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Tok::plus, start, src_.substr(start, 1)}; return;
            case '-': current_ = {Tok::minus, start, src_.substr(start, 1)}; return;
            case '*': current_ = {Tok::star, start, src_.substr(start, 1)}; return;
            case '/': current_ = {Tok::slash, start, src_.substr(start, 1)}; return;
            case '^': current_ = {Tok::caret, start, src_.substr(start, 1)}; return;
            case '(': current_ = {Tok::lparen, start, src_.substr(start, 1)}; return;
            case ')': current_ = {Tok::rparen, start, src_.substr(start, 1)}; return;
            default:
                throw ParseError(std::string("syntax error: unexpected character '") + c + "' at offset " +
                                     std::to_string(start),
                                 start);
        }
    }

    void lex_number(std::size_t start) {
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
            return n;
        };
        std::size_t n = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            n += digits();
        }
        if (n == 0) throw ParseError("syntax error: malformed number at offset " + std::to_string(start), start);
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw ParseError("syntax error: malformed exponent at offset " + std::to_string(mark), mark);
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
            throw ParseError("syntax error: number out of range at offset " + std::to_string(start), start);
        }
        current_ = {Tok::number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_{Tok::end, 0, {}};
};

NodePtr make(auto node) { return std::make_shared<const Node>(Node{std::move(node)}); }

// Binding powers. Unary minus sits between * / and ^, so -x^2 is -(x^2).
constexpr int bp_additive = 10;
constexpr int bp_multiplicative = 20;
constexpr int bp_unary = 30;
constexpr int bp_power = 40;

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse_all() {
        NodePtr e = parse_expr(0);
        const Token& t = lex_.peek();
        if (t.kind != Tok::end) fail("unexpected '" + std::string(t.text) + "'", t.offset);
        return e;
    }

private:
    [[noreturn]] static void fail(const std::string& msg, std::size_t offset) {
        throw ParseError("syntax error: " + msg + " at offset " + std::to_string(offset), offset);
    }

    NodePtr parse_expr(int min_bp) {
        NodePtr lhs = parse_prefix();
        while (true) {
            const Token& t = lex_.peek();
            BinaryOp op{};
            int left_bp = 0;
            int right_bp = 0;
            switch (t.kind) {
                case Tok::plus: op = BinaryOp::add; left_bp = bp_additive; right_bp = bp_additive + 1; break;
                case Tok::minus: op = BinaryOp::sub; left_bp = bp_additive; right_bp = bp_additive + 1; break;
                case Tok::star: op = BinaryOp::mul; left_bp = bp_multiplicative; right_bp = bp_multiplicative + 1; break;
                case Tok::slash: op = BinaryOp::div; left_bp = bp_multiplicative; right_bp = bp_multiplicative + 1; break;
                // Right operand parsed at the same power: right associative.
                case Tok::caret: op = BinaryOp::pow; left_bp = bp_power; right_bp = bp_power; break;
                default: return lhs;
            }
            if (left_bp < min_bp) return lhs;
            lex_.next();
            NodePtr rhs = parse_expr(right_bp);
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)});
        }
    }

    NodePtr parse_prefix() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Tok::number: return make(Number{t.number});
            case Tok::minus: return make(Negate{parse_expr(bp_unary)});
            case Tok::lparen: {
                NodePtr inner = parse_expr(0);
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident: return parse_identifier(t);
            case Tok::end: fail("unexpected end of input", t.offset);
            default: fail("unexpected '" + std::string(t.text) + "'", t.offset);
        }
    }

    NodePtr parse_identifier(const Token& t) {
        if (t.text == "x") return make(Var{Variable::x});
        if (t.text == "y") return make(Var{Variable::y});
        if (t.text == "pi") return make(Pi{});
        Function fn{};
        if (t.text == "sin") fn = Function::sin;
        else if (t.text == "cos") fn = Function::cos;
        else if (t.text == "exp") fn = Function::exp;
        else if (t.text == "sqrt") fn = Function::sqrt;
        else if (t.text == "abs") fn = Function::abs;
        else throw UnknownIdentifierError(std::string(t.text), t.offset);
        expect(Tok::lparen, "'(' after function name");
        NodePtr arg = parse_expr(0);
        expect(Tok::rparen, "')'");
        return make(Call{fn, std::move(arg)});
    }

    void expect(Tok kind, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) {
            fail(std::string("expected ") + what + (t.kind == Tok::end ? ", found end of input" : ""), t.offset);
        }
        lex_.next();
    }

    Lexer lex_;
};

double finite_or_throw(double v, const char* what, double x, double y) {
    if (!std::isfinite(v)) throw EvaluationError(std::string("non-finite result in ") + what, x, y);
    return v;
}

double evaluate(const Node& n, double x, double y) {
    return std::visit(
        [&](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Number>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, Var>) {
                return node.which == Variable::x ? x : y;
            } else if constexpr (std::is_same_v<T, Pi>) {
                return std::numbers::pi;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -evaluate(*node.operand, x, y);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const double a = evaluate(*node.lhs, x, y);
                const double b = evaluate(*node.rhs, x, y);
                switch (node.op) {
                    case BinaryOp::add: return finite_or_throw(a + b, "addition", x, y);
                    case BinaryOp::sub: return finite_or_throw(a - b, "subtraction", x, y);
                    case BinaryOp::mul: return finite_or_throw(a * b, "multiplication", x, y);
                    case BinaryOp::div:
                        if (b == 0.0) throw EvaluationError("division by zero", x, y);
                        return finite_or_throw(a / b, "division", x, y);
                    case BinaryOp::pow: return finite_or_throw(std::pow(a, b), "power", x, y);
                }
                return 0.0;
            } else {
                const double a = evaluate(*node.arg, x, y);
                switch (node.fn) {
                    case Function::sin: return std::sin(a);
                    case Function::cos: return std::cos(a);
                    case Function::exp: return finite_or_throw(std::exp(a), "exp", x, y);
                    case Function::sqrt:
                        if (a < 0.0) throw EvaluationError("sqrt of negative value", x, y);
                        return std::sqrt(a);
                    case Function::abs: return std::abs(a);
                }
                return 0.0;
            }
        },
        n.value);
}

const char* function_name(Function fn) {
    switch (fn) {
        case Function::sin: return "sin";
        case Function::cos: return "cos";
        case Function::exp: return "exp";
        case Function::sqrt: return "sqrt";
        case Function::abs: return "abs";
    }
    return "?";
}

char op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return '+';
        case BinaryOp::sub: return '-';
        case BinaryOp::mul: return '*';
        case BinaryOp::div: return '/';
        case BinaryOp::pow: return '^';
    }
    return '?';
}

void serialize(const Node& n, std::string& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Number>) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", node.value);
                out += buf;
            } else if constexpr (std::is_same_v<T, Var>) {
                out += node.which == Variable::x ? 'x' : 'y';
            } else if constexpr (std::is_same_v<T, Pi>) {
                out += "pi";
            } else if constexpr (std::is_same_v<T, Negate>) {
                out += "(-";
                serialize(*node.operand, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Binary>) {
                out += '(';
                serialize(*node.lhs, out);
                out += ' ';
                out += op_symbol(node.op);
                out += ' ';
                serialize(*node.rhs, out);
                out += ')';
            } else {
                out += function_name(node.fn);
                out += '(';
                serialize(*node.arg, out);
                out += ')';
            }
        },
        n.value);
}

bool same_tree(const Node& a, const Node& b) {
    if (a.value.index() != b.value.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = std::get<T>(b.value);
            if constexpr (std::is_same_v<T, Number>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Var>) {
                return lhs.which == rhs.which;
            } else if constexpr (std::is_same_v<T, Pi>) {
                return true;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return same_tree(*lhs.operand, *rhs.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return lhs.op == rhs.op && same_tree(*lhs.lhs, *rhs.lhs) && same_tree(*lhs.rhs, *rhs.rhs);
            } else {
                return lhs.fn == rhs.fn && same_tree(*lhs.arg, *rhs.arg);
            }
        },
        a.value);
}

}  // namespace

double Expr::operator()(double x, double y) const { return evaluate(*root_, x, y); }

std::string Expr::to_string() const {
    std::string out;
    serialize(*root_, out);
    return out;
}

bool operator==(const Expr& a, const Expr& b) { return same_tree(*a.root_, *b.root_); }

Expr parse(std::string_view src) { return Expr(Parser(src).parse_all()); }

}  // namespace ritz::expr
