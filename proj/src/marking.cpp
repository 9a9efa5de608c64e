#include "monli/marking.hpp"

#include <algorithm>

#include "monli/corpus.hpp"
#include "monli/error.hpp"

namespace monli {

const Marks& PolarizedDerivation::marks(const DerivationNode* node) const {
  auto it = marks_.find(node);
  if (it == marks_.end()) throw Error("node is not part of this marked derivation");
  return it->second;
}

namespace {

/// Operator phrase state: the profile of the lexicon operator heading the
/// phrase and how many of its arguments the derivation has consumed so far.
struct Pending {
  const MonotonicityProfile* profile = nullptr;
  int consumed = 0;

  bool active() const { return profile && consumed < profile->arity(); }
};

struct Walker {
  const OperatorLexicon& lexicon;
  std::unordered_map<const DerivationNode*, Pending> pending;
  std::unordered_map<const DerivationNode*, Marks> marks;

  Pending pending_of(const DerivationNode* node) {
    auto it = pending.find(node);
    return it == pending.end() ? Pending{} : it->second;
  }

  // Bottom-up: which operator phrase each node continues, if any.
  Pending gather(const DerivationNode& node) {
    if (node.is_leaf()) {
      const Leaf& l = node.leaf();
      if (const MonotonicityProfile* p = lexicon.find(l.lemma, l.semtag)) {
        if (p->arity() >= 2 && l.cat->is_atomic())
          throw Error("operator \"" + l.token + "\" has an atomic category but profile arity " +
                      std::to_string(p->arity()));
        Pending st{p, 0};
        pending[&node] = st;
        return st;
      }
      return {};
    }
    if (node.children().size() == 1) {
      Pending st = gather(*node.children()[0]);
      if (st.profile) pending[&node] = st;
      return st;
    }
    int fi = functor_child(node);
    Pending f = gather(*node.children()[fi]);
    Pending a = gather(*node.children()[1 - fi]);
    Pending st;
    if (f.active()) {
      st = Pending{f.profile, f.consumed + 1};
    } else if (a.active()) {
      st = Pending{a.profile, a.consumed + 1};
    }
    if (st.profile) pending[&node] = st;
    return st;
  }

  void assign(const DerivationNode& node, Marks m) {
    marks[&node] = m;
    if (node.is_leaf()) return;
    if (node.children().size() == 1) {
      assign(*node.children()[0], m);
      return;
    }
    int fi = functor_child(node);
    const DerivationNode& functor = *node.children()[fi];
    const DerivationNode& argument = *node.children()[1 - fi];
    Pending f = pending_of(&functor);
    Pending a = pending_of(&argument);
    if (f.active()) {
      // ordinary application: the operator spine keeps the context
      Polarity arg_pol = f.profile->args[f.consumed];
      assign(functor, m);
      assign(argument, arg_marks(m, arg_pol));
    } else if (a.active()) {
      // inversion: the phrase in argument position scopes over its functor
      Polarity arg_pol = a.profile->args[a.consumed];
      assign(argument, m);
      assign(functor, arg_marks(m, arg_pol));
    } else {
      assign(functor, m);
      assign(argument, m);  // compose(m.polarity, up) == m.polarity
    }
  }

  static Marks arg_marks(const Marks& m, Polarity arg_pol) {
    Marks out;
    out.polarity = compose(m.polarity, arg_pol);
    out.in_op_arg = true;
    out.downward_scope = m.downward_scope || arg_pol == Polarity::down;
    return out;
  }
};

bool contains_operator_leaf(const DerivationNode& node, const OperatorLexicon& lexicon) {
  if (node.is_leaf()) {
    const Leaf& l = node.leaf();
    return lexicon.find(l.lemma, l.semtag) != nullptr || is_coordinator(l);
  }
  for (const auto& c : node.children())
    if (contains_operator_leaf(*c, lexicon)) return true;
  return false;
}

/// Leaf reached by following functor spines; the lexical head of a phrase.
const Leaf& head_leaf(const DerivationNode& node) {
  if (node.is_leaf()) return node.leaf();
  if (node.children().size() == 1) return head_leaf(*node.children()[0]);
  return head_leaf(*node.children()[functor_child(node)]);
}

struct SiteScan {
  const PolarizedDerivation& pd;
  const OperatorLexicon& lexicon;
  std::vector<ReplacementSite> sites;
  int next_leaf = 0;

  // Returns the leaf span of the node while collecting its sites.
  std::pair<int, int> scan(const DerivationNode& node) {
    if (node.is_leaf()) {
      int at = next_leaf++;
      maybe_lexical(node, at);
      return {at, at + 1};
    }
    if (node.children().size() == 1) {
      auto span = scan(*node.children()[0]);
      return span;
    }
    int fi = functor_child(node);
    const DerivationNode& left = *node.children()[0];
    const DerivationNode& right = *node.children()[1];
    const DerivationNode& functor = *node.children()[fi];

    int start = next_leaf;
    maybe_removable(functor, node, start);
    auto left_span = scan(left);
    auto right_span = scan(right);
    return {left_span.first, right_span.second};
  }

  void maybe_lexical(const DerivationNode& leaf_node, int at) {
    const Leaf& l = leaf_node.leaf();
    const Marks& m = pd.marks(&leaf_node);
    if (!m.in_op_arg) return;
    if (l.pos != 'n' && l.pos != 'v' && l.pos != 'a') return;
    bool needs_sense = pd.sentence().tier == Tier::gold;
    if (needs_sense && !l.sense) return;
    sites.push_back({&leaf_node, SiteKind::lexical_head, m.polarity, m.downward_scope, at, at + 1});
  }

  // functor is about to be scanned at leaf offset `start` if it is the left
  // child; otherwise it begins after the left sibling. Compute its span when
  // we record it, which is why this runs before scan() advances next_leaf:
  // we recompute the offset from the sibling's width instead.
  void maybe_removable(const DerivationNode& functor, const DerivationNode& parent, int start) {
    if (!functor.category()->is_modifier_shape()) return;
    int fi = functor_child(parent);
    int width_left = fi == 0 ? 0 : count_leaves(*parent.children()[0]);
    int fstart = start + width_left;
    int fend = fstart + count_leaves(functor);
    const Marks& m = pd.marks(&functor);

    const Leaf& head = head_leaf(functor);
    if (is_coordinator(head)) {
      SiteKind kind = head.semtag == "AND" ? SiteKind::conjunct : SiteKind::disjunct;
      sites.push_back({&functor, kind, m.polarity, m.downward_scope, fstart, fend});
      return;
    }
    if (!m.in_op_arg) return;
    if (contains_operator_leaf(functor, lexicon)) return;
    bool adjunct_head = head.pos == 'a' || head.pos == 'r' || head.semtag == "REL";
    if (!adjunct_head) return;
    sites.push_back({&functor, SiteKind::modifier, m.polarity, m.downward_scope, fstart, fend});
  }

  static int count_leaves(const DerivationNode& node) {
    if (node.is_leaf()) return 1;
    int n = 0;
    for (const auto& c : node.children()) n += count_leaves(*c);
    return n;
  }
};

}  // namespace

PolarizedDerivation mark(const Sentence& sentence, const OperatorLexicon& lexicon) {
  Walker w{lexicon, {}, {}};
  w.gather(*sentence.root);
  w.assign(*sentence.root, Marks{Polarity::up, false, false});
  return PolarizedDerivation(sentence, std::move(w.marks));
}

const char* site_kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::lexical_head: return "lexical_head";
    case SiteKind::modifier: return "modifier";
    case SiteKind::conjunct: return "conjunct";
    case SiteKind::disjunct: return "disjunct";
  }
  return "?";
}

std::vector<ReplacementSite> find_sites(const PolarizedDerivation& pd,
                                        const OperatorLexicon& lexicon) {
  SiteScan scan{pd, lexicon, {}, 0};
  scan.scan(*pd.sentence().root);
  std::vector<ReplacementSite> sites = std::move(scan.sites);
  std::stable_sort(sites.begin(), sites.end(),
                   [](const ReplacementSite& a, const ReplacementSite& b) {
                     if (a.start != b.start) return a.start < b.start;
                     if (a.end != b.end) return a.end > b.end;
                     return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                   });
  return sites;
}

}  // namespace monli
