#pragma once

#include "quadevo/rng.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quadevo::sexpr {

// Formula language, prefix notation with whitespace-separated tokens:
//
//   expr  := identifier | constant | "(" binop expr expr ")" | "(" unop expr ")"
//   binop := + | - | * | /          (typographic −, ×, ÷ also accepted)
//   unop  := & (square root) | ^ (squaring)
//
// An identifier is a single letter; a constant is a finite floating-point
// number. The serializer emits the ASCII spellings.

enum class BinaryOp { Add, Sub, Mul, Div };
enum class UnaryOp { Sqrt, Square };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Identifier, Constant, Binary, Unary };

    Kind kind = Kind::Constant;
    char name = 0;                    ///< Identifier letter
    double value = 0.0;               ///< Constant value
    BinaryOp bin_op = BinaryOp::Add;
    UnaryOp un_op = UnaryOp::Sqrt;
    ExprPtr left;                     ///< binary: left operand; unary: the child
    ExprPtr right;                    ///< binary only

    /// Factories validate the node invariants (single-letter identifiers,
    /// finite constants, non-null children) and throw std::invalid_argument.
    static ExprPtr identifier(char letter);
    static ExprPtr constant(double v);
    static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr unary(UnaryOp op, ExprPtr child);

    ExprPtr clone() const;
};

/// Identifier environment for evaluation; letters are case-sensitive.
class Bindings {
public:
    /// Throws std::invalid_argument when letter is not a letter.
    void set(char letter, double v);

    /// Value bound to letter, or nullptr.
    const double* find(char letter) const;

private:
    static int slot(char letter);

    std::array<double, 52> values_{};
    std::array<bool, 52> bound_{};
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);

    /// Byte offset into the input at which the error was detected.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class EvalErrorKind { DivisionByZero, NegativeSqrt, UnboundIdentifier, NonFinite };

const char* to_string(EvalErrorKind kind);

/// Path of child indices from the root ("/" is the root, "/1/0" the left
/// child of the right child, ...).
std::string path_to_string(const std::vector<int>& path);

class EvalError : public std::runtime_error {
public:
    EvalError(EvalErrorKind kind, std::vector<int> path);

    EvalErrorKind kind() const { return kind_; }
    const std::vector<int>& path() const { return path_; }

private:
    EvalErrorKind kind_;
    std::vector<int> path_;
};

/// Evaluation-order record: one event per node, emitted when the node's value
/// becomes available (after its children). Test instrumentation for the
/// depth-first contract.
struct EvalTrace {
    struct Event {
        std::vector<int> path;
        double value;
    };
    std::vector<Event> events;
};

/// Parses one expression; rejects trailing tokens. Throws ParseError with the
/// offending byte position.
ExprPtr parse(std::string_view text);

/// Post-order (children first) evaluation. / by zero, sqrt of a negative,
/// unbound identifiers and non-finite intermediate results raise EvalError.
double evaluate(const Expr& tree, const Bindings& env, EvalTrace* trace = nullptr);

/// Canonical ASCII rendering; parse(serialize(t)) reproduces t.
std::string serialize(const Expr& tree);

/// Grammar-valid random tree of depth <= max_depth (a lone leaf has depth 1).
/// Interior positions pick uniformly among {leaf, binary, unary}; leaves
/// uniformly between an identifier from `identifiers` and a constant uniform
/// in constant_range. Throws std::invalid_argument when max_depth < 1 or
/// identifiers is empty.
ExprPtr random_tree(int max_depth, std::string_view identifiers, Interval constant_range,
                    Rng& rng);

enum class RootSign { Plus, Minus };

/// The hand-built tree (/ (± (- 0 B) (& (- (^ B) (* 4 (* A C))))) (* 2 A)):
/// the standard closed-form root of Ax² + Bx + C. Negation is spelled as
/// subtraction from zero; the grammar has no unary minus.
ExprPtr quadratic_formula_tree(RootSign sign);

/// Nodes in preorder (root first, then left subtree, then right).
std::size_t node_count(const Expr& tree);

/// Node at preorder `index`; throws std::out_of_range.
const Expr& node_at(const Expr& tree, std::size_t index);

/// Owning slot of the node at preorder `index` within `root` (the root slot
/// itself for index 0); throws std::out_of_range.
ExprPtr* subtree_slot(ExprPtr& root, std::size_t index);

/// Depth of the tree; a lone leaf has depth 1.
int tree_depth(const Expr& tree);

/// Replaces every interior node sitting at max_depth with a random leaf so
/// the result respects the depth bound. Leaves are drawn like random_tree's.
void clamp_depth(ExprPtr& tree, int max_depth, std::string_view identifiers,
                 Interval constant_range, Rng& rng);

} // namespace quadevo::sexpr
