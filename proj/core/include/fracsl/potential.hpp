#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "fracsl/expected.hpp"

namespace fracsl {

namespace detail {
struct ExprNode;
}

enum class EvalErrorKind {
    divide_by_zero,
    log_domain,    // ln of a non-positive argument
    sqrt_domain,   // sqrt of a negative argument
    pow_domain,    // negative base with fractional exponent, or 0^negative
    non_finite,    // overflow to ±inf or NaN anywhere in the tree
};

const char* to_string(EvalErrorKind kind);

/// Evaluation failure: which kind, at which abscissa, and the byte offset
/// of the offending node in the original source text.
struct EvalError {
    EvalErrorKind kind;
    double t;
    std::size_t offset;
};

/// Parse failure with the byte offset it was detected at.
struct ParseError {
    std::size_t offset;
    std::string message;
};

/// Immutable expression tree for a potential q(t).
///
/// Grammar (no implicit multiplication, radians, `^` right-associative):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///   func   := sin | cos | tan | exp | ln | sqrt | abs
class PotentialExpr {
public:
    /// The constant expression with the given value (default 0).
    static PotentialExpr constant(double value = 0.0);

    PotentialExpr() : PotentialExpr(constant(0.0)) {}

private:
    explicit PotentialExpr(std::shared_ptr<const detail::ExprNode> root)
        : root_(std::move(root)) {}

    std::shared_ptr<const detail::ExprNode> root_;

    friend Expected<PotentialExpr, ParseError> parse_potential(std::string_view);
    friend Expected<double, EvalError> eval_potential(const PotentialExpr&, double);
    friend std::string to_string(const PotentialExpr&);
    friend bool structurally_equal(const PotentialExpr&, const PotentialExpr&);
};

Expected<PotentialExpr, ParseError> parse_potential(std::string_view text);

/// Evaluate at finite t. Domain faults and non-finite intermediates are
/// reported as EvalError values, never as silent NaN/inf.
Expected<double, EvalError> eval_potential(const PotentialExpr& expr, double t);

/// Canonical fully parenthesized form; parsing it back yields a tree
/// structurally equal to the original.
std::string to_string(const PotentialExpr& expr);

bool structurally_equal(const PotentialExpr& a, const PotentialExpr& b);

}  // namespace fracsl
