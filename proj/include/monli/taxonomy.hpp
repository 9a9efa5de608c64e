#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace monli {

/// One word sense. The identifier is "lemma.p.NN"; the lemma field is the
/// surface form substituted into sentences (multiword lemmas use
/// underscores, rendered as spaces).
struct SenseEntry {
  std::string sense;
  std::string lemma;
  char pos = 'n';
  std::vector<std::string> gloss;
  std::vector<std::string> hypernyms;
};

enum class Relation { equal, broader, narrower, incomparable };

const char* relation_name(Relation r);

struct RankedSense {
  std::string sense;
  int depth = 0;
};

/// Closed-world ISA ontology over senses. Hypernym edges form a DAG;
/// comparisons are transitive reachability.
class Taxonomy {
 public:
  /// Loads JSONL entries {"sense","lemma","pos","gloss","hypernyms"},
  /// rejecting duplicate ids, dangling hypernym references and cycles.
  static Taxonomy load(std::istream& in, const std::string& name = "taxonomy");

  bool contains(const std::string& sense) const { return by_id_.count(sense) != 0; }
  const SenseEntry& entry(const std::string& sense) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<SenseEntry>& entries() const { return entries_; }

  /// How a relates to b: equal, broader (b is-a a), narrower (a is-a b),
  /// or incomparable. Unknown senses raise Error.
  Relation compare(const std::string& a, const std::string& b) const;

  /// Hypernyms (broaden) or hyponyms (narrow) of the sense within
  /// max_depth steps, sorted by (depth, sense id). A diamond keeps its
  /// smallest depth.
  std::vector<RankedSense> replacements_for(const std::string& sense, bool broaden,
                                            int max_depth) const;

  /// Senses registered for a lowercased (lemma, pos) pair. Both the lemma
  /// field and the identifier's lemma segment are indexed.
  std::vector<std::string> senses_for(const std::string& lemma, char pos) const;

 private:
  std::vector<SenseEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> hyponyms_;
};

/// Simplified gloss-overlap disambiguation. Scores each candidate sense of
/// (lemma, pos) by the number of distinct context tokens shared with its
/// gloss, after lowercasing and dropping stop tokens; ties go to the lowest
/// sense number. Returns nullopt when no sense is registered.
std::optional<std::string> lesk(const std::string& lemma, char pos,
                                const std::vector<std::string>& context,
                                const Taxonomy& taxonomy,
                                const std::set<std::string>& stop_tokens);

/// One stop token per line; blank lines ignored.
std::set<std::string> load_stop_tokens(std::istream& in);

}  // namespace monli
