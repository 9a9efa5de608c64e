#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "monli/marking.hpp"
#include "monli/taxonomy.hpp"

namespace monli {

/// How the hypothesis relates to the premise along the taxonomy: broaden
/// substitutes something more general, narrow something more specific.
/// Eliminations broaden (dropping a restriction) except disjunct drops,
/// which narrow.
enum class Direction { broaden, narrow };
enum class Label { entailment, neutral };
enum class Section { up, down, non, conj, disj };
enum class Orientation { forward, swapped };

const char* direction_name(Direction d);
const char* label_name(Label l);
const char* section_name(Section s);
const char* orientation_name(Orientation o);
Direction invert(Direction d);

/// Monotonicity calculus for labels: up contexts license broadening, down
/// contexts license narrowing, flat licenses nothing.
Label assign_label(Polarity site_polarity, Direction direction);

/// conj/disj by elimination kind, non for flat sites, down when any
/// operator on the path contributed a down argument, up otherwise.
Section classify_section(const ReplacementSite& site);

/// A concrete edit at a site. Lexical replacements carry the target sense
/// and its surface lemma; eliminations carry neither.
struct Replacement {
  ReplacementSite site;
  Direction direction = Direction::broaden;
  std::string target_sense;
  std::string target_lemma;
};

/// Applies the edit, returning a new validated sentence. Lexical payloads
/// substitute the target lemma (underscores become spaces, capitalization
/// is copied, trailing punctuation is kept). Eliminations splice the site's
/// sibling into its place. Removing the sole argument of an operator leaf
/// raises a degenerate-elimination Error.
Sentence apply_replacement(const Sentence& sentence, const Replacement& r);

struct InferencePair {
  std::string pair_id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::neutral;
  Section section = Section::up;
  bool lexical = true;  // replacement kind: lexical vs elimination
  Direction direction = Direction::broaden;
  Polarity site_polarity = Polarity::up;
  std::string source_id;
  Orientation orientation = Orientation::forward;
};

/// Pair plus the derivations behind both sides, kept for verification.
struct GeneratedPair {
  InferencePair pair;
  Sentence premise_deriv;
  Sentence hypothesis_deriv;
};

struct GenConfig {
  int max_depth = 1;
  bool lexical = true;
  bool elimination = true;
  bool swapped = true;
  int max_pairs_per_sentence = 0;  // 0 = unlimited
};

struct GenOutput {
  std::vector<GeneratedPair> pairs;
  std::map<std::string, int> skipped;  // reason -> count
};

/// All pairs derivable from one sentence, in deterministic order: sites
/// left to right; per lexical site broaden targets then narrow targets in
/// taxonomy rank order; forward before swapped. Missing senses on silver
/// leaves are filled by lesk first; sites that cannot be resolved are
/// counted in skipped. Identical (premise, hypothesis) strings are emitted
/// once.
GenOutput generate(const Sentence& sentence, const OperatorLexicon& lexicon,
                   const Taxonomy& taxonomy, const std::set<std::string>& stop_tokens,
                   const GenConfig& config);

}  // namespace monli
