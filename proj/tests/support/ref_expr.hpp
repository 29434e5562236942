#pragma once

// Integer arithmetic trees over + - * with a conventional precedence
// parser and evaluator, used as the oracle for rendered parentheses.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gool/ir.hpp"

namespace refx {

struct Tree {
    char op = 0;         // '+', '-', '*' for a node, 0 for a leaf
    std::string name;    // variable leaf when nonempty
    std::int64_t value = 0;
    std::shared_ptr<Tree> lhs, rhs;
    char unary = 0;      // '-' for a parsed prefix negation
};
using TreePtr = std::shared_ptr<Tree>;

TreePtr leaf(std::int64_t v);
TreePtr var_leaf(std::string name);
TreePtr node(char op, TreePtr l, TreePtr r);

bool same(const TreePtr& a, const TreePtr& b);
std::int64_t evaluate(const TreePtr& t);

/// Every tree with exactly `ops` binary operators, leaves v0, v1, ... left to
/// right.
std::vector<TreePtr> all_trees(int ops);
TreePtr random_tree(std::mt19937& rng, int max_depth);

/// The IR expression for a tree (variables are int-typed).
gool::Expr to_ir(const TreePtr& t);

/// Parses `* binds tighter than + -, all left-associative, prefix -`.
/// A negated literal folds into the literal. Returns nullopt on a syntax
/// error.
std::optional<TreePtr> parse(const std::string& text);

/// Offsets of each matched "(" in `text` with the offset of its ")".
std::vector<std::pair<std::size_t, std::size_t>> paren_pairs(const std::string& text);

} // namespace refx
