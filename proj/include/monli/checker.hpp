#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monli/genpairs.hpp"
#include "monli/logic.hpp"
#include "monli/taxonomy.hpp"

namespace monli {

struct CheckOptions {
  int max_domain_size = 3;
  bool parallel = true;  // OpenMP enumeration; false runs the serial reference
};

/// Entailed means no admissible finite model up to max_domain_size makes
/// the premise true and the hypothesis false. Otherwise the minimal
/// countermodel (smallest domain, then smallest assignment index) is
/// returned; serial and parallel searches find the same one.
struct CheckResult {
  bool entailed = false;
  std::optional<Model> countermodel;
};

/// Admissible models respect the taxonomy — whenever one sense is narrower
/// than another, its extension is a subset — and every other predicate
/// (proper names included) ranges over every subset of the domain. Raises
/// Error when the assignment space exceeds the enumeration budget
/// (assignment bits > 24).
CheckResult check_entailment(const LogicalForm& premise, const LogicalForm& hypothesis,
                             const Taxonomy& taxonomy, const CheckOptions& options);

struct Disagreement {
  std::string pair_id;
  std::string source_id;
  std::string premise;
  std::string hypothesis;
  Label stored = Label::neutral;
  Label oracle = Label::neutral;
  std::optional<Model> countermodel;  // present when the oracle found one
};

struct SectionTally {
  int checked = 0;
  int agreed = 0;
};

struct VerifyReport {
  int total = 0;       // pairs examined
  int matched = 0;     // pairs whose (premise, hypothesis) was regenerated
  int verifiable = 0;  // both sides translated into the quantifier fragment
  int agreed = 0;
  std::vector<Disagreement> disagreements;
  std::map<std::string, int> unverifiable;  // reason -> count
  std::map<std::string, SectionTally> by_section;
  std::vector<std::string> unmatched_ids;
};

/// Model-checks generated pairs against their stored labels. With
/// options.parallel the pairs are distributed over threads (each check
/// runs serially); the report is identical either way.
VerifyReport verify_pairs(const std::vector<GeneratedPair>& pairs,
                          const OperatorLexicon& lexicon, const Taxonomy& taxonomy,
                          const CheckOptions& options);

/// Verifies dataset rows that carry no derivations: pairs are regenerated
/// from their source sentences (one generation per sentence) and matched
/// by exact premise and hypothesis strings. Rows that match no generated
/// pair are reported in unmatched_ids; matched rows are checked against
/// the label stored in the row.
VerifyReport verify_dataset(const std::vector<InferencePair>& rows,
                            const std::vector<Sentence>& corpus,
                            const OperatorLexicon& lexicon, const Taxonomy& taxonomy,
                            const std::set<std::string>& stop_tokens,
                            const GenConfig& gen_config, const CheckOptions& options);

}  // namespace monli
