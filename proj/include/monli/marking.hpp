#pragma once

#include <unordered_map>

#include "monli/derivation.hpp"
#include "monli/polarity.hpp"

namespace monli {

/// Marks attached to one derivation node.
///   polarity       composed monotonicity context at the node
///   in_op_arg      node lies inside some operator's argument subtree
///   downward_scope some operator on the path contributed a down argument
struct Marks {
  Polarity polarity = Polarity::up;
  bool in_op_arg = false;
  bool downward_scope = false;
};

/// A derivation with per-node marks. Node identity is by pointer into the
/// sentence's immutable tree.
class PolarizedDerivation {
 public:
  PolarizedDerivation(Sentence sentence, std::unordered_map<const DerivationNode*, Marks> marks)
      : sentence_(std::move(sentence)), marks_(std::move(marks)) {}

  const Sentence& sentence() const { return sentence_; }
  const Marks& marks(const DerivationNode* node) const;
  Polarity polarity(const DerivationNode* node) const { return marks(node).polarity; }

 private:
  Sentence sentence_;
  std::unordered_map<const DerivationNode*, Marks> marks_;
};

/// Assigns a polarity to every node. The root starts up; functor spines
/// inherit their parent's polarity; each argument of a lexicon operator
/// composes the parent polarity with the operator's per-argument profile;
/// arguments of plain functors compose with up. A quantified phrase that has
/// consumed its first argument takes its later arguments by inversion: when
/// it appears in argument position, the syntactic functor receives the
/// pending argument polarity (the way a determiner scopes over its verb
/// phrase). Throws Error for an operator whose category contradicts its
/// profile arity.
PolarizedDerivation mark(const Sentence& sentence, const OperatorLexicon& lexicon);

enum class SiteKind { lexical_head, modifier, conjunct, disjunct };

const char* site_kind_name(SiteKind k);

/// A substitutable or removable constituent.
///   lexical_head     content leaf (pos n/v/a) inside an operator argument
///   modifier         adjunct-shaped functor (X/X or X\X) inside an operator
///                    argument whose removal keeps the derivation valid
///   conjunct/disjunct coordination subtree headed by and/or
struct ReplacementSite {
  const DerivationNode* node = nullptr;
  SiteKind kind = SiteKind::lexical_head;
  Polarity polarity = Polarity::up;
  bool downward_scope = false;
  int start = 0;  // first leaf index covered by the site
  int end = 0;    // one past the last leaf index
};

/// Enumerates sites in surface order (leftmost first, wider subtree before
/// its contents at the same start).
std::vector<ReplacementSite> find_sites(const PolarizedDerivation& pd,
                                        const OperatorLexicon& lexicon);

}  // namespace monli
