#include "quadevo/sexpr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <variant>

namespace quadevo::sexpr {

ExprPtr Expr::identifier(char letter) {
    if (!std::isalpha(static_cast<unsigned char>(letter))) {
        throw std::invalid_argument("Expr: identifier must be a single letter");
    }
    auto node = std::make_unique<Expr>();
    node->kind = Kind::Identifier;
    node->name = letter;
    return node;
}

ExprPtr Expr::constant(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("Expr: constants must be finite");
    }
    auto node = std::make_unique<Expr>();
    node->kind = Kind::Constant;
    node->value = v;
    return node;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    if (!lhs || !rhs) {
        throw std::invalid_argument("Expr: binary node needs two children");
    }
    auto node = std::make_unique<Expr>();
    node->kind = Kind::Binary;
    node->bin_op = op;
    node->left = std::move(lhs);
    node->right = std::move(rhs);
    return node;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr child) {
    if (!child) {
        throw std::invalid_argument("Expr: unary node needs a child");
    }
    auto node = std::make_unique<Expr>();
    node->kind = Kind::Unary;
    node->un_op = op;
    node->left = std::move(child);
    return node;
}

ExprPtr Expr::clone() const {
    auto node = std::make_unique<Expr>();
    node->kind = kind;
    node->name = name;
    node->value = value;
    node->bin_op = bin_op;
    node->un_op = un_op;
    if (left) {
        node->left = left->clone();
    }
    if (right) {
        node->right = right->clone();
    }
    return node;
}

int Bindings::slot(char letter) {
    if (letter >= 'A' && letter <= 'Z') {
        return letter - 'A';
    }
    if (letter >= 'a' && letter <= 'z') {
        return 26 + (letter - 'a');
    }
    return -1;
}

void Bindings::set(char letter, double v) {
    const int s = slot(letter);
    if (s < 0) {
        throw std::invalid_argument("Bindings: identifiers are single letters");
    }
    values_[s] = v;
    bound_[s] = true;
}

const double* Bindings::find(char letter) const {
    const int s = slot(letter);
    if (s < 0 || !bound_[s]) {
        return nullptr;
    }
    return &values_[s];
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (byte " + std::to_string(position) + ")"),
      position_(position) {}

const char* to_string(EvalErrorKind kind) {
    switch (kind) {
    case EvalErrorKind::DivisionByZero: return "DivisionByZero";
    case EvalErrorKind::NegativeSqrt: return "NegativeSqrt";
    case EvalErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case EvalErrorKind::NonFinite: return "NonFinite";
    }
    return "?";
}

std::string path_to_string(const std::vector<int>& path) {
    if (path.empty()) {
        return "/";
    }
    std::string out;
    for (int step : path) {
        out += '/';
        out += std::to_string(step);
    }
    return out;
}

EvalError::EvalError(EvalErrorKind kind, std::vector<int> path)
    : std::runtime_error(std::string(to_string(kind)) + " at " + path_to_string(path)),
      kind_(kind),
      path_(std::move(path)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum class Type { LParen, RParen, Atom, End };
    Type type = Type::End;
    std::string_view text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    const Token& peek() {
        if (!lookahead_) {
            lookahead_ = scan();
        }
        return *lookahead_;
    }

    Token next() {
        Token token = peek();
        lookahead_.reset();
        return token;
    }

private:
    Token scan() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ >= text_.size()) {
            return {Token::Type::End, {}, pos_};
        }
        const std::size_t start = pos_;
        if (text_[pos_] == '(') {
            ++pos_;
            return {Token::Type::LParen, text_.substr(start, 1), start};
        }
        if (text_[pos_] == ')') {
            ++pos_;
            return {Token::Type::RParen, text_.substr(start, 1), start};
        }
        while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return {Token::Type::Atom, text_.substr(start, pos_ - start), start};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<Token> lookahead_;
};

using Operator = std::variant<BinaryOp, UnaryOp>;

// ASCII and typographic spellings both accepted.
std::optional<Operator> classify_operator(std::string_view atom) {
    if (atom == "+") return Operator{BinaryOp::Add};
    if (atom == "-" || atom == "−") return Operator{BinaryOp::Sub};
    if (atom == "*" || atom == "×") return Operator{BinaryOp::Mul};
    if (atom == "/" || atom == "÷") return Operator{BinaryOp::Div};
    if (atom == "&") return Operator{UnaryOp::Sqrt};
    if (atom == "^") return Operator{UnaryOp::Square};
    return std::nullopt;
}

std::optional<double> parse_number(std::string_view atom) {
    double value = 0.0;
    const char* begin = atom.data();
    const char* end = atom.data() + atom.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

bool all_letters(std::string_view atom) {
    for (char ch : atom) {
        if (!std::isalpha(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return !atom.empty();
}

ExprPtr parse_expr(Lexer& lexer) {
    const Token token = lexer.next();
    switch (token.type) {
    case Token::Type::End:
        throw ParseError("unexpected end of input, expected an expression", token.pos);
    case Token::Type::RParen:
        throw ParseError("expected an expression, found ')'", token.pos);
    case Token::Type::Atom: {
        if (auto number = parse_number(token.text)) {
            if (!std::isfinite(*number)) {
                throw ParseError("constants must be finite", token.pos);
            }
            return Expr::constant(*number);
        }
        if (classify_operator(token.text)) {
            throw ParseError("operator '" + std::string(token.text) +
                                 "' is only valid after '('",
                             token.pos);
        }
        if (all_letters(token.text)) {
            if (token.text.size() > 1) {
                throw ParseError("identifiers are single letters, got '" +
                                     std::string(token.text) + "'",
                                 token.pos);
            }
            return Expr::identifier(token.text.front());
        }
        throw ParseError("unrecognized token '" + std::string(token.text) + "'", token.pos);
    }
    case Token::Type::LParen:
        break;
    }

    const Token op_token = lexer.next();
    if (op_token.type != Token::Type::Atom) {
        throw ParseError("expected an operator after '('", op_token.pos);
    }
    const auto op = classify_operator(op_token.text);
    if (!op) {
        throw ParseError("unknown operator '" + std::string(op_token.text) + "'", op_token.pos);
    }

    const int arity = std::holds_alternative<BinaryOp>(*op) ? 2 : 1;
    ExprPtr operands[2];
    for (int k = 0; k < arity; ++k) {
        if (lexer.peek().type == Token::Type::RParen) {
            throw ParseError("operator '" + std::string(op_token.text) + "' expects " +
                                 std::to_string(arity) + " operand(s), got " + std::to_string(k),
                             lexer.peek().pos);
        }
        operands[k] = parse_expr(lexer);
    }
    const Token close = lexer.next();
    if (close.type != Token::Type::RParen) {
        if (close.type == Token::Type::End) {
            throw ParseError("unbalanced parentheses, expected ')'", close.pos);
        }
        throw ParseError("operator '" + std::string(op_token.text) + "' expects exactly " +
                             std::to_string(arity) + " operand(s)",
                         close.pos);
    }

    if (arity == 2) {
        return Expr::binary(std::get<BinaryOp>(*op), std::move(operands[0]),
                            std::move(operands[1]));
    }
    return Expr::unary(std::get<UnaryOp>(*op), std::move(operands[0]));
}

} // namespace

ExprPtr parse(std::string_view text) {
    Lexer lexer(text);
    ExprPtr tree = parse_expr(lexer);
    const Token& trailing = lexer.peek();
    if (trailing.type != Token::Type::End) {
        throw ParseError("trailing tokens after the expression", trailing.pos);
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

double evaluate_node(const Expr& node, const Bindings& env, std::vector<int>& path,
                     EvalTrace* trace) {
    double result = 0.0;
    switch (node.kind) {
    case Expr::Kind::Identifier: {
        const double* bound = env.find(node.name);
        if (!bound) {
            throw EvalError(EvalErrorKind::UnboundIdentifier, path);
        }
        result = *bound;
        break;
    }
    case Expr::Kind::Constant:
        result = node.value;
        break;
    case Expr::Kind::Binary: {
        path.push_back(0);
        const double lhs = evaluate_node(*node.left, env, path, trace);
        path.back() = 1;
        const double rhs = evaluate_node(*node.right, env, path, trace);
        path.pop_back();
        switch (node.bin_op) {
        case BinaryOp::Add: result = lhs + rhs; break;
        case BinaryOp::Sub: result = lhs - rhs; break;
        case BinaryOp::Mul: result = lhs * rhs; break;
        case BinaryOp::Div:
            if (rhs == 0.0) {
                throw EvalError(EvalErrorKind::DivisionByZero, path);
            }
            result = lhs / rhs;
            break;
        }
        break;
    }
    case Expr::Kind::Unary: {
        path.push_back(0);
        const double child = evaluate_node(*node.left, env, path, trace);
        path.pop_back();
        switch (node.un_op) {
        case UnaryOp::Sqrt:
            if (child < 0.0) {
                throw EvalError(EvalErrorKind::NegativeSqrt, path);
            }
            result = std::sqrt(child);
            break;
        case UnaryOp::Square:
            result = child * child;
            break;
        }
        break;
    }
    }
    if (!std::isfinite(result)) {
        throw EvalError(EvalErrorKind::NonFinite, path);
    }
    if (trace) {
        trace->events.push_back({path, result});
    }
    return result;
}

} // namespace

double evaluate(const Expr& tree, const Bindings& env, EvalTrace* trace) {
    std::vector<int> path;
    return evaluate_node(tree, env, path, trace);
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

const char* spelling(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    }
    return "?";
}

const char* spelling(UnaryOp op) {
    return op == UnaryOp::Sqrt ? "&" : "^";
}

void serialize_node(const Expr& node, std::string& out) {
    switch (node.kind) {
    case Expr::Kind::Identifier:
        out += node.name;
        break;
    case Expr::Kind::Constant: {
        char buffer[32];
        auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, node.value);
        out.append(buffer, ptr);
        break;
    }
    case Expr::Kind::Binary:
        out += '(';
        out += spelling(node.bin_op);
        out += ' ';
        serialize_node(*node.left, out);
        out += ' ';
        serialize_node(*node.right, out);
        out += ')';
        break;
    case Expr::Kind::Unary:
        out += '(';
        out += spelling(node.un_op);
        out += ' ';
        serialize_node(*node.left, out);
        out += ')';
        break;
    }
}

} // namespace

std::string serialize(const Expr& tree) {
    std::string out;
    serialize_node(tree, out);
    return out;
}

// ---------------------------------------------------------------------------
// Random trees and the formula oracle

namespace {

ExprPtr random_leaf(std::string_view identifiers, Interval constant_range, Rng& rng) {
    if (rng.index(2) == 0) {
        return Expr::identifier(identifiers[rng.index(identifiers.size())]);
    }
    return Expr::constant(rng.uniform(constant_range));
}

} // namespace

ExprPtr random_tree(int max_depth, std::string_view identifiers, Interval constant_range,
                    Rng& rng) {
    if (max_depth < 1) {
        throw std::invalid_argument("random_tree: max_depth must be at least 1");
    }
    if (identifiers.empty()) {
        throw std::invalid_argument("random_tree: identifiers must be non-empty");
    }
    if (max_depth == 1) {
        return random_leaf(identifiers, constant_range, rng);
    }
    switch (rng.index(3)) {
    case 0:
        return random_leaf(identifiers, constant_range, rng);
    case 1: {
        const auto op = static_cast<BinaryOp>(rng.index(4));
        auto lhs = random_tree(max_depth - 1, identifiers, constant_range, rng);
        auto rhs = random_tree(max_depth - 1, identifiers, constant_range, rng);
        return Expr::binary(op, std::move(lhs), std::move(rhs));
    }
    default: {
        const auto op = static_cast<UnaryOp>(rng.index(2));
        return Expr::unary(op, random_tree(max_depth - 1, identifiers, constant_range, rng));
    }
    }
}

ExprPtr quadratic_formula_tree(RootSign sign) {
    auto discriminant_root = Expr::unary(
        UnaryOp::Sqrt,
        Expr::binary(BinaryOp::Sub, Expr::unary(UnaryOp::Square, Expr::identifier('B')),
                     Expr::binary(BinaryOp::Mul, Expr::constant(4.0),
                                  Expr::binary(BinaryOp::Mul, Expr::identifier('A'),
                                               Expr::identifier('C')))));
    auto negated_b = Expr::binary(BinaryOp::Sub, Expr::constant(0.0), Expr::identifier('B'));
    auto numerator =
        Expr::binary(sign == RootSign::Plus ? BinaryOp::Add : BinaryOp::Sub,
                     std::move(negated_b), std::move(discriminant_root));
    auto denominator = Expr::binary(BinaryOp::Mul, Expr::constant(2.0), Expr::identifier('A'));
    return Expr::binary(BinaryOp::Div, std::move(numerator), std::move(denominator));
}

// ---------------------------------------------------------------------------
// Node addressing (preorder)

std::size_t node_count(const Expr& tree) {
    std::size_t count = 1;
    if (tree.left) {
        count += node_count(*tree.left);
    }
    if (tree.right) {
        count += node_count(*tree.right);
    }
    return count;
}

namespace {

const Expr* node_at_impl(const Expr& node, std::size_t& index) {
    if (index == 0) {
        return &node;
    }
    --index;
    if (node.left) {
        if (const Expr* found = node_at_impl(*node.left, index)) {
            return found;
        }
    }
    if (node.right) {
        if (const Expr* found = node_at_impl(*node.right, index)) {
            return found;
        }
    }
    return nullptr;
}

ExprPtr* slot_at_impl(ExprPtr& slot, std::size_t& index) {
    if (index == 0) {
        return &slot;
    }
    --index;
    if (slot->left) {
        if (ExprPtr* found = slot_at_impl(slot->left, index)) {
            return found;
        }
    }
    if (slot->right) {
        if (ExprPtr* found = slot_at_impl(slot->right, index)) {
            return found;
        }
    }
    return nullptr;
}

} // namespace

const Expr& node_at(const Expr& tree, std::size_t index) {
    std::size_t cursor = index;
    if (const Expr* found = node_at_impl(tree, cursor)) {
        return *found;
    }
    throw std::out_of_range("node_at: index past the last node");
}

ExprPtr* subtree_slot(ExprPtr& root, std::size_t index) {
    if (!root) {
        throw std::out_of_range("subtree_slot: empty tree");
    }
    std::size_t cursor = index;
    if (ExprPtr* found = slot_at_impl(root, cursor)) {
        return found;
    }
    throw std::out_of_range("subtree_slot: index past the last node");
}

int tree_depth(const Expr& tree) {
    int depth = 0;
    if (tree.left) {
        depth = tree_depth(*tree.left);
    }
    if (tree.right) {
        depth = std::max(depth, tree_depth(*tree.right));
    }
    return depth + 1;
}

namespace {

void clamp_node(ExprPtr& slot, int remaining, std::string_view identifiers,
                Interval constant_range, Rng& rng) {
    const bool interior = slot->kind == Expr::Kind::Binary || slot->kind == Expr::Kind::Unary;
    if (!interior) {
        return;
    }
    if (remaining <= 1) {
        slot = random_leaf(identifiers, constant_range, rng);
        return;
    }
    clamp_node(slot->left, remaining - 1, identifiers, constant_range, rng);
    if (slot->right) {
        clamp_node(slot->right, remaining - 1, identifiers, constant_range, rng);
    }
}

} // namespace

void clamp_depth(ExprPtr& tree, int max_depth, std::string_view identifiers,
                 Interval constant_range, Rng& rng) {
    if (max_depth < 1) {
        throw std::invalid_argument("clamp_depth: max_depth must be at least 1");
    }
    if (identifiers.empty()) {
        throw std::invalid_argument("clamp_depth: identifiers must be non-empty");
    }
    clamp_node(tree, max_depth, identifiers, constant_range, rng);
}

} // namespace quadevo::sexpr
