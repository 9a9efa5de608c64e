#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "monli/checker.hpp"
#include "monli/corpus.hpp"
#include "monli/genpairs.hpp"
#include "monli/taxonomy.hpp"

namespace monli {

struct RunConfig {
  GenConfig gen;
  bool tier_gold = true;
  bool tier_silver = true;
  bool parallel = true;  // one sentence per thread; output order is fixed
};

struct RunOutput {
  std::vector<GeneratedPair> pairs;    // corpus order, per-sentence order preserved
  std::map<std::string, int> skipped;  // merged skip reasons
  int sentences_considered = 0;        // after the tier filter
  int sentences_selected = 0;          // after operator/length selection
};

/// Selection, generation and merging for a whole corpus. Parallel and
/// serial runs produce identical output.
RunOutput generate_dataset(const std::vector<Sentence>& corpus, const OperatorLexicon& lexicon,
                           const Taxonomy& taxonomy, const std::set<std::string>& stop_tokens,
                           const RunConfig& config);

/// One JSON object per line, fields in a fixed order: pair_id, premise,
/// hypothesis, label, section, replacement_kind, direction, site_polarity,
/// source_id, orientation.
void write_jsonl(std::ostream& out, const std::vector<InferencePair>& pairs);
std::vector<InferencePair> read_jsonl(std::istream& in, const std::string& name = "dataset");

/// Tab-separated with a header; same fields except site_polarity.
void write_tsv(std::ostream& out, const std::vector<InferencePair>& pairs);
std::vector<InferencePair> read_tsv(std::istream& in, const std::string& name = "dataset");

struct DatasetStats {
  int pairs = 0;
  int sources = 0;     // distinct source ids
  int vocabulary = 0;  // distinct whitespace tokens over premises and hypotheses
  std::map<std::string, int> by_label;
  std::map<std::string, int> by_section;
  std::map<std::string, int> by_kind;
  std::map<std::string, int> by_orientation;
};

DatasetStats dataset_stats(const std::vector<InferencePair>& pairs);

/// Deterministic JSON run report (no timing): generation counters, dataset
/// statistics and, when given, the verification report with countermodels
/// spelled out as explicit extensions.
std::string report_json(const RunOutput& run, const DatasetStats& stats,
                        const VerifyReport* verification);

}  // namespace monli
