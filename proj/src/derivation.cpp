#include "monli/derivation.hpp"

#include "monli/error.hpp"

namespace monli {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::fa: return "fa";
    case Rule::ba: return "ba";
    case Rule::fc: return "fc";
    case Rule::bc: return "bc";
    case Rule::unary: return "unary";
    case Rule::lex_raise: return "lex-raise";
  }
  return "?";
}

NodePtr DerivationNode::make_leaf(Leaf leaf) {
  auto node = std::shared_ptr<DerivationNode>(new DerivationNode());
  node->cat_ = leaf.cat;
  node->leaf_ = std::move(leaf);
  return node;
}

NodePtr DerivationNode::make_internal(Rule rule, CategoryPtr cat, std::vector<NodePtr> children) {
  auto node = std::shared_ptr<DerivationNode>(new DerivationNode());
  node->rule_ = rule;
  node->cat_ = std::move(cat);
  node->children_ = std::move(children);
  return node;
}

std::string surface(const DerivationNode& node) {
  std::string out;
  for (const DerivationNode* leaf : leaves_of(node)) {
    if (!out.empty()) out += ' ';
    out += leaf->leaf().token;
  }
  return out;
}

namespace {

void collect_leaves(const DerivationNode& node, std::vector<const DerivationNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children()) collect_leaves(*child, out);
}

[[noreturn]] void bad_node(const DerivationNode& node, const std::string& why) {
  throw Error("invalid derivation: " + why + " at " + rule_name(node.rule()) + " node \"" +
              surface(node) + "\"");
}

void validate_node(const DerivationNode& node) {
  if (node.is_leaf()) {
    const Leaf& leaf = node.leaf();
    if (leaf.token.empty() || leaf.lemma.empty())
      throw Error("invalid derivation: empty token or lemma at leaf \"" + leaf.token + "\"");
    return;
  }
  const auto& kids = node.children();
  switch (node.rule()) {
    case Rule::unary:
    case Rule::lex_raise:
      if (kids.size() != 1) bad_node(node, "unary node needs exactly one child");
      break;
    case Rule::fa: {
      if (kids.size() != 2) bad_node(node, "fa needs two children");
      const Category& f = *kids[0]->category();
      if (!f.is_functional() || f.slash() != Slash::forward)
        bad_node(node, "fa functor is not X/Y");
      if (!f.argument()->equals(*kids[1]->category()))
        bad_node(node, "fa argument mismatch");
      if (!f.result()->equals(*node.category())) bad_node(node, "fa result mismatch");
      break;
    }
    case Rule::ba: {
      if (kids.size() != 2) bad_node(node, "ba needs two children");
      const Category& f = *kids[1]->category();
      if (!f.is_functional() || f.slash() != Slash::backward)
        bad_node(node, "ba functor is not X\\Y");
      if (!f.argument()->equals(*kids[0]->category()))
        bad_node(node, "ba argument mismatch");
      if (!f.result()->equals(*node.category())) bad_node(node, "ba result mismatch");
      break;
    }
    case Rule::fc: {
      if (kids.size() != 2) bad_node(node, "fc needs two children");
      const Category& f = *kids[0]->category();
      const Category& g = *kids[1]->category();
      if (!f.is_functional() || f.slash() != Slash::forward ||
          !g.is_functional() || g.slash() != Slash::forward)
        bad_node(node, "fc needs X/Y and Y/Z");
      if (!f.argument()->equals(*g.result())) bad_node(node, "fc inner category mismatch");
      CategoryPtr expect = Category::functional(f.result(), Slash::forward, g.argument());
      if (!expect->equals(*node.category())) bad_node(node, "fc result mismatch");
      break;
    }
    case Rule::bc: {
      if (kids.size() != 2) bad_node(node, "bc needs two children");
      const Category& g = *kids[0]->category();
      const Category& f = *kids[1]->category();
      if (!g.is_functional() || g.slash() != Slash::backward ||
          !f.is_functional() || f.slash() != Slash::backward)
        bad_node(node, "bc needs Y\\Z and X\\Y");
      if (!f.argument()->equals(*g.result())) bad_node(node, "bc inner category mismatch");
      CategoryPtr expect = Category::functional(f.result(), Slash::backward, g.argument());
      if (!expect->equals(*node.category())) bad_node(node, "bc result mismatch");
      break;
    }
  }
  for (const auto& child : kids) validate_node(*child);
}

}  // namespace

std::vector<const DerivationNode*> leaves_of(const DerivationNode& node) {
  std::vector<const DerivationNode*> out;
  collect_leaves(node, out);
  return out;
}

void validate(const DerivationNode& root) { validate_node(root); }

int functor_child(const DerivationNode& node) {
  if (node.is_leaf() || node.children().size() != 2) return -1;
  switch (node.rule()) {
    case Rule::fa:
    case Rule::fc: return 0;
    case Rule::ba:
    case Rule::bc: return 1;
    default: return -1;
  }
}

}  // namespace monli
