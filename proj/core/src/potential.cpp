#include "fracsl/potential.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace fracsl {

namespace detail {

enum class NodeKind {
    number,
    variable,  // t
    negate,
    sin,
    cos,
    tan,
    exp,
    ln,
    sqrt,
    abs,
    add,
    sub,
    mul,
    div,
    pow,
};

struct ExprNode {
    NodeKind kind;
    std::size_t offset;  // byte position in the source text
    double value = 0.0;  // number payload
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v, std::size_t off) {
    return std::make_shared<ExprNode>(ExprNode{NodeKind::number, off, v, nullptr, nullptr});
}

NodePtr make_node(NodeKind k, std::size_t off, NodePtr lhs, NodePtr rhs = nullptr) {
    return std::make_shared<ExprNode>(
        ExprNode{k, off, 0.0, std::move(lhs), std::move(rhs)});
}

bool is_unary_function(NodeKind k) {
    switch (k) {
        case NodeKind::negate:
        case NodeKind::sin:
        case NodeKind::cos:
        case NodeKind::tan:
        case NodeKind::exp:
        case NodeKind::ln:
        case NodeKind::sqrt:
        case NodeKind::abs:
            return true;
        default:
            return false;
    }
}

// ---------------------------------------------------------------- lexer

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::size_t offset;
    double value = 0.0;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Expected<Token, ParseError> next() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return Token{TokenKind::end, start};

        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return Token{TokenKind::plus, start};
            case '-': ++pos_; return Token{TokenKind::minus, start};
            case '*': ++pos_; return Token{TokenKind::star, start};
            case '/': ++pos_; return Token{TokenKind::slash, start};
            case '^': ++pos_; return Token{TokenKind::caret, start};
            case '(': ++pos_; return Token{TokenKind::lparen, start};
            case ')': ++pos_; return Token{TokenKind::rparen, start};
            default: break;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(),
                                             value, std::chars_format::general);
            if (ec == std::errc::result_out_of_range)
                return ParseError{start, "number out of range"};
            if (ec != std::errc{} || ptr == text_.data() + pos_)
                return ParseError{start, "invalid number"};
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            return Token{TokenKind::number, start, value};
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            Token tok{TokenKind::identifier, start, 0.0, text_.substr(pos_, end - pos_)};
            pos_ = end;
            return tok;
        }

        return ParseError{start, std::string("unexpected character '") + c + "'"};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// --------------------------------------------------------------- parser
//
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | power
// power  := atom ('^' factor)?
// atom   := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'

constexpr int kMaxDepth = 200;

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    Expected<NodePtr, ParseError> run() {
        if (auto err = advance()) return *err;
        auto expr = parse_expr(0);
        if (!expr) return expr.error();
        if (current_.kind != TokenKind::end)
            return ParseError{current_.offset, "expected operator or end of input"};
        return expr.value();
    }

private:
    // Returns the error if lexing fails, otherwise refreshes current_.
    std::optional<ParseError> advance() {
        auto tok = lexer_.next();
        if (!tok) return tok.error();
        current_ = tok.value();
        return std::nullopt;
    }

    Expected<NodePtr, ParseError> parse_expr(int depth) {
        if (depth > kMaxDepth) return ParseError{current_.offset, "expression too deeply nested"};
        auto lhs = parse_term(depth + 1);
        if (!lhs) return lhs;
        while (current_.kind == TokenKind::plus || current_.kind == TokenKind::minus) {
            const auto op = current_.kind == TokenKind::plus ? NodeKind::add : NodeKind::sub;
            const std::size_t off = current_.offset;
            if (auto err = advance()) return *err;
            auto rhs = parse_term(depth + 1);
            if (!rhs) return rhs;
            lhs = make_node(op, off, lhs.value(), rhs.value());
        }
        return lhs;
    }

    Expected<NodePtr, ParseError> parse_term(int depth) {
        if (depth > kMaxDepth) return ParseError{current_.offset, "expression too deeply nested"};
        auto lhs = parse_factor(depth + 1);
        if (!lhs) return lhs;
        while (current_.kind == TokenKind::star || current_.kind == TokenKind::slash) {
            const auto op = current_.kind == TokenKind::star ? NodeKind::mul : NodeKind::div;
            const std::size_t off = current_.offset;
            if (auto err = advance()) return *err;
            auto rhs = parse_factor(depth + 1);
            if (!rhs) return rhs;
            lhs = make_node(op, off, lhs.value(), rhs.value());
        }
        return lhs;
    }

    Expected<NodePtr, ParseError> parse_factor(int depth) {
        if (depth > kMaxDepth) return ParseError{current_.offset, "expression too deeply nested"};
        if (current_.kind == TokenKind::minus) {
            const std::size_t off = current_.offset;
            if (auto err = advance()) return *err;
            auto operand = parse_factor(depth + 1);
            if (!operand) return operand;
            return make_node(NodeKind::negate, off, operand.value());
        }
        return parse_power(depth + 1);
    }

    Expected<NodePtr, ParseError> parse_power(int depth) {
        if (depth > kMaxDepth) return ParseError{current_.offset, "expression too deeply nested"};
        auto base = parse_atom(depth + 1);
        if (!base) return base;
        if (current_.kind == TokenKind::caret) {
            const std::size_t off = current_.offset;
            if (auto err = advance()) return *err;
            auto exponent = parse_factor(depth + 1);  // right-associative
            if (!exponent) return exponent;
            return make_node(NodeKind::pow, off, base.value(), exponent.value());
        }
        return base;
    }

    Expected<NodePtr, ParseError> parse_atom(int depth) {
        if (depth > kMaxDepth) return ParseError{current_.offset, "expression too deeply nested"};
        switch (current_.kind) {
            case TokenKind::number: {
                auto node = make_number(current_.value, current_.offset);
                if (auto err = advance()) return *err;
                return node;
            }
            case TokenKind::lparen: {
                if (auto err = advance()) return *err;
                auto inner = parse_expr(depth + 1);
                if (!inner) return inner;
                if (current_.kind != TokenKind::rparen)
                    return ParseError{current_.offset, "expected ')'"};
                if (auto err = advance()) return *err;
                return inner;
            }
            case TokenKind::identifier:
                return parse_identifier(depth);
            default:
                return ParseError{current_.offset, "expected number, 't', constant, function or '('"};
        }
    }

    Expected<NodePtr, ParseError> parse_identifier(int depth) {
        const std::size_t off = current_.offset;
        const std::string_view name = current_.text;

        if (name == "t") {
            if (auto err = advance()) return *err;
            return make_node(NodeKind::variable, off, nullptr);
        }
        if (name == "pi") {
            if (auto err = advance()) return *err;
            return make_number(std::numbers::pi, off);
        }
        if (name == "e") {
            if (auto err = advance()) return *err;
            return make_number(std::numbers::e, off);
        }

        static constexpr std::array<std::pair<std::string_view, NodeKind>, 7> funcs{{
            {"sin", NodeKind::sin},
            {"cos", NodeKind::cos},
            {"tan", NodeKind::tan},
            {"exp", NodeKind::exp},
            {"ln", NodeKind::ln},
            {"sqrt", NodeKind::sqrt},
            {"abs", NodeKind::abs},
        }};
        for (const auto& [fname, kind] : funcs) {
            if (name != fname) continue;
            if (auto err = advance()) return *err;
            if (current_.kind != TokenKind::lparen)
                return ParseError{current_.offset,
                                  "expected '(' after function '" + std::string(fname) + "'"};
            if (auto err = advance()) return *err;
            auto arg = parse_expr(depth + 1);
            if (!arg) return arg;
            if (current_.kind != TokenKind::rparen)
                return ParseError{current_.offset, "expected ')'"};
            if (auto err = advance()) return *err;
            return make_node(kind, off, arg.value());
        }

        return ParseError{off, "unknown identifier '" + std::string(name) + "'"};
    }

    Lexer lexer_;
    Token current_{TokenKind::end, 0};
};

// ----------------------------------------------------------- evaluation

Expected<double, EvalError> eval_node(const ExprNode& node, double t) {
    switch (node.kind) {
        case NodeKind::number:
            return node.value;
        case NodeKind::variable:
            return t;
        default:
            break;
    }

    auto lhs = eval_node(*node.lhs, t);
    if (!lhs) return lhs;
    const double a = lhs.value();

    if (is_unary_function(node.kind)) {
        double r = 0.0;
        switch (node.kind) {
            case NodeKind::negate: r = -a; break;
            case NodeKind::sin: r = std::sin(a); break;
            case NodeKind::cos: r = std::cos(a); break;
            case NodeKind::tan: r = std::tan(a); break;
            case NodeKind::exp: r = std::exp(a); break;
            case NodeKind::ln:
                if (a <= 0.0) return EvalError{EvalErrorKind::log_domain, t, node.offset};
                r = std::log(a);
                break;
            case NodeKind::sqrt:
                if (a < 0.0) return EvalError{EvalErrorKind::sqrt_domain, t, node.offset};
                r = std::sqrt(a);
                break;
            case NodeKind::abs: r = std::abs(a); break;
            default: break;
        }
        if (!std::isfinite(r)) return EvalError{EvalErrorKind::non_finite, t, node.offset};
        return r;
    }

    auto rhs = eval_node(*node.rhs, t);
    if (!rhs) return rhs;
    const double b = rhs.value();

    double r = 0.0;
    switch (node.kind) {
        case NodeKind::add: r = a + b; break;
        case NodeKind::sub: r = a - b; break;
        case NodeKind::mul: r = a * b; break;
        case NodeKind::div:
            if (b == 0.0) return EvalError{EvalErrorKind::divide_by_zero, t, node.offset};
            r = a / b;
            break;
        case NodeKind::pow:
            r = std::pow(a, b);
            if (!std::isfinite(r)) {
                if ((a == 0.0 && b < 0.0) || (a < 0.0 && b != std::trunc(b)))
                    return EvalError{EvalErrorKind::pow_domain, t, node.offset};
                return EvalError{EvalErrorKind::non_finite, t, node.offset};
            }
            break;
        default:
            break;
    }
    if (!std::isfinite(r)) return EvalError{EvalErrorKind::non_finite, t, node.offset};
    return r;
}

// ------------------------------------------------------------- printing

void print_node(const ExprNode& node, std::string& out) {
    switch (node.kind) {
        case NodeKind::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", node.value);
            out += buf;
            return;
        }
        case NodeKind::variable: out += 't'; return;
        case NodeKind::negate:
            out += "(-";
            print_node(*node.lhs, out);
            out += ')';
            return;
        case NodeKind::sin:
        case NodeKind::cos:
        case NodeKind::tan:
        case NodeKind::exp:
        case NodeKind::ln:
        case NodeKind::sqrt:
        case NodeKind::abs: {
            static constexpr std::array<std::string_view, 7> names{
                "sin", "cos", "tan", "exp", "ln", "sqrt", "abs"};
            out += names[static_cast<std::size_t>(node.kind) -
                         static_cast<std::size_t>(NodeKind::sin)];
            out += '(';
            print_node(*node.lhs, out);
            out += ')';
            return;
        }
        default: {
            char op = '?';
            switch (node.kind) {
                case NodeKind::add: op = '+'; break;
                case NodeKind::sub: op = '-'; break;
                case NodeKind::mul: op = '*'; break;
                case NodeKind::div: op = '/'; break;
                case NodeKind::pow: op = '^'; break;
                default: break;
            }
            out += '(';
            print_node(*node.lhs, out);
            out += ' ';
            out += op;
            out += ' ';
            print_node(*node.rhs, out);
            out += ')';
            return;
        }
    }
}

bool equal_node(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == NodeKind::number) {
        // bit comparison: canonical printing preserves the exact value
        return a.value == b.value || (std::isnan(a.value) && std::isnan(b.value));
    }
    if (a.lhs && b.lhs) {
        if (!equal_node(*a.lhs, *b.lhs)) return false;
    } else if (a.lhs || b.lhs) {
        return false;
    }
    if (a.rhs && b.rhs) return equal_node(*a.rhs, *b.rhs);
    return !a.rhs && !b.rhs;
}

}  // namespace
}  // namespace detail

const char* to_string(EvalErrorKind kind) {
    switch (kind) {
        case EvalErrorKind::divide_by_zero: return "division by zero";
        case EvalErrorKind::log_domain: return "ln of a non-positive argument";
        case EvalErrorKind::sqrt_domain: return "sqrt of a negative argument";
        case EvalErrorKind::pow_domain: return "power outside the real domain";
        case EvalErrorKind::non_finite: return "non-finite result";
    }
    return "unknown evaluation error";
}

PotentialExpr PotentialExpr::constant(double value) {
    return PotentialExpr(detail::make_number(value, 0));
}

Expected<PotentialExpr, ParseError> parse_potential(std::string_view text) {
    detail::Parser parser(text);
    auto root = parser.run();
    if (!root) return root.error();
    return PotentialExpr(root.value());
}

Expected<double, EvalError> eval_potential(const PotentialExpr& expr, double t) {
    return detail::eval_node(*expr.root_, t);
}

std::string to_string(const PotentialExpr& expr) {
    std::string out;
    detail::print_node(*expr.root_, out);
    return out;
}

bool structurally_equal(const PotentialExpr& a, const PotentialExpr& b) {
    return detail::equal_node(*a.root_, *b.root_);
}

}  // namespace fracsl
