#include "monli/genpairs.hpp"

#include <cctype>
#include <cstring>

#include "monli/corpus.hpp"
#include "monli/error.hpp"

namespace monli {

const char* direction_name(Direction d) {
  return d == Direction::broaden ? "broaden" : "narrow";
}
const char* label_name(Label l) { return l == Label::entailment ? "entailment" : "neutral"; }
const char* section_name(Section s) {
  switch (s) {
    case Section::up: return "up";
    case Section::down: return "down";
    case Section::non: return "non";
    case Section::conj: return "conj";
    case Section::disj: return "disj";
  }
  return "?";
}
const char* orientation_name(Orientation o) {
  return o == Orientation::forward ? "forward" : "swapped";
}

Direction invert(Direction d) {
  return d == Direction::broaden ? Direction::narrow : Direction::broaden;
}

Label assign_label(Polarity site_polarity, Direction direction) {
  bool entailed = (site_polarity == Polarity::up && direction == Direction::broaden) ||
                  (site_polarity == Polarity::down && direction == Direction::narrow);
  return entailed ? Label::entailment : Label::neutral;
}

Section classify_section(const ReplacementSite& site) {
  if (site.kind == SiteKind::conjunct) return Section::conj;
  if (site.kind == SiteKind::disjunct) return Section::disj;
  if (site.polarity == Polarity::flat) return Section::non;
  return site.downward_scope ? Section::down : Section::up;
}

namespace {

const std::set<std::string>& operator_semtags() {
  static const std::set<std::string> tags = {"AND", "DIS", "NEG", "DEF", "QUV", "IMP"};
  return tags;
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

std::string render_lemma(const std::string& lemma, const std::string& original_token) {
  std::string core = lemma;
  for (char& c : core)
    if (c == '_') c = ' ';
  // keep capitalization in step with the token being replaced
  if (!original_token.empty() && !core.empty() && is_upper(original_token[0]) &&
      !is_upper(core[0]))
    core[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(core[0])));
  // trailing punctuation travels with the slot, not the word
  std::string tail;
  std::size_t end = original_token.size();
  while (end > 0 && std::strchr(",.;:!?", original_token[end - 1]) != nullptr) --end;
  tail = original_token.substr(end);
  return core + tail;
}

NodePtr replace_node(const NodePtr& node, const DerivationNode* target, const NodePtr& with) {
  if (node.get() == target) return with;
  if (node->is_leaf()) return node;
  std::vector<NodePtr> children;
  bool changed = false;
  for (const NodePtr& c : node->children()) {
    NodePtr nc = replace_node(c, target, with);
    changed = changed || nc != c;
    children.push_back(std::move(nc));
  }
  if (!changed) return node;
  return DerivationNode::make_internal(node->rule(), node->category(), std::move(children));
}

const DerivationNode* parent_of(const DerivationNode& root, const DerivationNode* target) {
  if (root.is_leaf()) return nullptr;
  for (const NodePtr& c : root.children()) {
    if (c.get() == target) return &root;
    if (const DerivationNode* p = parent_of(*c, target)) return p;
  }
  return nullptr;
}

NodePtr with_sense(const NodePtr& node, const DerivationNode* target, const std::string& sense) {
  Leaf leaf = target->leaf();
  leaf.sense = sense;
  return replace_node(node, target, DerivationNode::make_leaf(std::move(leaf)));
}

NodePtr with_first_token_upper(const NodePtr& root) {
  auto leaves = leaves_of(*root);
  if (leaves.empty()) return root;
  const Leaf& first = leaves.front()->leaf();
  if (first.token.empty() || is_upper(first.token[0])) return root;
  Leaf updated = first;
  updated.token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(updated.token[0])));
  return replace_node(root, leaves.front(), DerivationNode::make_leaf(std::move(updated)));
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : data) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace

Sentence apply_replacement(const Sentence& sentence, const Replacement& r) {
  const DerivationNode* target = r.site.node;
  Sentence out = sentence;

  if (r.site.kind == SiteKind::lexical_head) {
    if (!target->is_leaf()) throw Error("lexical replacement target must be a leaf");
    Leaf leaf = target->leaf();
    leaf.token = render_lemma(r.target_lemma, leaf.token);
    leaf.lemma = r.target_lemma;
    leaf.sense = r.target_sense;
    out.root = replace_node(sentence.root, target, DerivationNode::make_leaf(std::move(leaf)));
  } else {
    const DerivationNode* parent = parent_of(*sentence.root, target);
    if (!parent || parent->children().size() != 2)
      throw Error("cannot eliminate \"" + surface(*target) + "\": no binary parent");
    int fi = functor_child(*parent);
    const NodePtr& sibling = parent->children()[target == parent->children()[0].get() ? 1 : 0];
    bool target_is_argument = parent->children()[1 - fi].get() == target;
    if (target_is_argument && sibling->is_leaf() &&
        operator_semtags().count(sibling->leaf().semtag))
      throw Error("degenerate elimination: removing \"" + surface(*target) +
                  "\" leaves operator \"" + sibling->leaf().token + "\" with zero arguments");
    out.root = replace_node(sentence.root, parent, sibling);
  }

  validate(*out.root);
  return out;
}

GenOutput generate(const Sentence& sentence, const OperatorLexicon& lexicon,
                   const Taxonomy& taxonomy, const std::set<std::string>& stop_tokens,
                   const GenConfig& config) {
  GenOutput out;
  PolarizedDerivation pd = mark(sentence, lexicon);
  std::vector<ReplacementSite> sites = find_sites(pd, lexicon);

  std::string original = surface(sentence);
  std::vector<std::string> context;
  for (const DerivationNode* leaf : leaves_of(*sentence.root))
    context.push_back(leaf->leaf().token);

  std::set<std::pair<std::string, std::string>> seen;
  bool capped = false;

  auto emit = [&](const Sentence& premise_deriv, const Sentence& hyp_deriv, int site_index,
                  const ReplacementSite& site, Direction dir, Orientation orient,
                  const std::string& payload) {
    if (config.max_pairs_per_sentence > 0 &&
        static_cast<int>(out.pairs.size()) >= config.max_pairs_per_sentence) {
      capped = true;
      ++out.skipped["pair_cap"];
      return;
    }
    InferencePair p;
    p.premise = surface(premise_deriv);
    p.hypothesis = surface(hyp_deriv);
    if (p.premise == p.hypothesis) {
      ++out.skipped["equal_surface"];
      return;
    }
    if (!seen.insert({p.premise, p.hypothesis}).second) {
      ++out.skipped["duplicate"];
      return;
    }
    p.label = assign_label(site.polarity, dir);
    p.section = classify_section(site);
    p.lexical = site.kind == SiteKind::lexical_head;
    p.direction = dir;
    p.site_polarity = site.polarity;
    p.source_id = sentence.id;
    p.orientation = orient;
    p.pair_id = fnv1a_hex(sentence.id + "\x1f" + std::to_string(site_index) + "\x1f" + payload +
                          "\x1f" + direction_name(dir) + "\x1f" + orientation_name(orient));
    out.pairs.push_back({std::move(p), premise_deriv, hyp_deriv});
  };

  for (std::size_t i = 0; i < sites.size() && !capped; ++i) {
    const ReplacementSite& site = sites[i];

    if (site.kind == SiteKind::lexical_head) {
      if (!config.lexical) continue;
      const Leaf& leaf = site.node->leaf();

      Sentence premise = sentence;
      std::string sense;
      if (leaf.sense) {
        sense = *leaf.sense;
      } else {
        auto filled = lesk(leaf.lemma, leaf.pos, context, taxonomy, stop_tokens);
        if (!filled) {
          ++out.skipped["sense_unavailable"];
          continue;
        }
        sense = *filled;
        premise.root = with_sense(sentence.root, site.node, sense);
      }
      if (!taxonomy.contains(sense)) {
        ++out.skipped["sense_unavailable"];
        continue;
      }

      // the filled tree reuses every untouched node, so the site pointer
      // stays valid only on the original; re-locate it on the premise copy
      const DerivationNode* premise_site = site.node;
      if (premise.root != sentence.root) {
        auto orig_leaves = leaves_of(*sentence.root);
        auto prem_leaves = leaves_of(*premise.root);
        for (std::size_t k = 0; k < orig_leaves.size(); ++k)
          if (orig_leaves[k] == site.node) premise_site = prem_leaves[k];
      }

      for (Direction dir : {Direction::broaden, Direction::narrow}) {
        auto targets = taxonomy.replacements_for(sense, dir == Direction::broaden,
                                                 config.max_depth);
        if (targets.empty()) {
          ++out.skipped["no_candidates"];
          continue;
        }
        for (const RankedSense& target : targets) {
          Replacement r;
          r.site = site;
          r.site.node = premise_site;
          r.direction = dir;
          r.target_sense = target.sense;
          r.target_lemma = taxonomy.entry(target.sense).lemma;
          Sentence hyp = apply_replacement(premise, r);
          hyp.root = with_first_token_upper(hyp.root);
          emit(premise, hyp, static_cast<int>(i), site, dir, Orientation::forward, target.sense);
          if (config.swapped)
            emit(hyp, premise, static_cast<int>(i), site, invert(dir), Orientation::swapped,
                 target.sense);
        }
      }
    } else {
      if (!config.elimination) continue;
      Direction dir = site.kind == SiteKind::disjunct ? Direction::narrow : Direction::broaden;
      Replacement r;
      r.site = site;
      r.direction = dir;
      Sentence hyp;
      try {
        hyp = apply_replacement(sentence, r);
      } catch (const Error&) {
        ++out.skipped["degenerate_elimination"];
        continue;
      }
      hyp.root = with_first_token_upper(hyp.root);
      std::string payload = "drop:" + surface(*site.node);
      emit(sentence, hyp, static_cast<int>(i), site, dir, Orientation::forward, payload);
      if (config.swapped)
        emit(hyp, sentence, static_cast<int>(i), site, invert(dir), Orientation::swapped, payload);
    }
  }

  return out;
}

}  // namespace monli
