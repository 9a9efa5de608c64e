#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monli/category.hpp"

namespace monli {

enum class Rule { fa, ba, fc, bc, unary, lex_raise };

const char* rule_name(Rule r);

/// Lexical entry at the bottom of a derivation. pos is one of n v a r x,
/// sense (when present) is a taxonomy identifier like "kid.n.01".
struct Leaf {
  std::string token;
  std::string lemma;
  char pos = 'x';
  std::string semtag;
  std::optional<std::string> sense;
  CategoryPtr cat;
};

class DerivationNode;
using NodePtr = std::shared_ptr<const DerivationNode>;

/// Immutable binary-branching derivation tree. Internal nodes carry the
/// combinatory rule that licensed them plus the resulting category.
class DerivationNode {
 public:
  static NodePtr make_leaf(Leaf leaf);
  static NodePtr make_internal(Rule rule, CategoryPtr cat, std::vector<NodePtr> children);

  bool is_leaf() const { return leaf_.has_value(); }
  const Leaf& leaf() const { return *leaf_; }

  Rule rule() const { return rule_; }
  const CategoryPtr& category() const { return cat_; }
  const std::vector<NodePtr>& children() const { return children_; }

 private:
  DerivationNode() = default;

  std::optional<Leaf> leaf_;
  Rule rule_ = Rule::unary;
  CategoryPtr cat_;
  std::vector<NodePtr> children_;
};

enum class Tier { gold, silver };

struct Sentence {
  std::string id;
  Tier tier = Tier::gold;
  NodePtr root;
};

/// Leaf tokens joined left to right by single spaces.
std::string surface(const DerivationNode& node);
inline std::string surface(const Sentence& s) { return surface(*s.root); }

std::vector<const DerivationNode*> leaves_of(const DerivationNode& node);

/// Checks the rule table over the whole tree:
///   fa: X/Y Y -> X      ba: Y X\Y -> X
///   fc: X/Y Y/Z -> X/Z  bc: Y\Z X\Y -> X\Z
///   unary/lex_raise: one child, any category.
/// Throws Error naming the offending node.
void validate(const DerivationNode& root);

/// Child that acts as the functor at a binary node (fa/fc: left, ba/bc: right).
/// Returns -1 for leaves and unary nodes.
int functor_child(const DerivationNode& node);

}  // namespace monli
