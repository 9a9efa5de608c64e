#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace monli {

/// Monotonicity marking of a constituent. Flat means neither direction of
/// substitution is licensed (non-monotone argument positions).
enum class Polarity { up, down, flat };

const char* polarity_name(Polarity p);

/// Composition of an outer context with an inner argument polarity:
/// up is the identity, two downs cancel, flat absorbs on either side.
Polarity compose(Polarity outer, Polarity inner);

enum class OperatorKind { determiner, vp_negator, conditional };

/// Per-argument monotonicity of a scope-taking operator. Determiners and
/// conditionals take two arguments, negators one.
struct MonotonicityProfile {
  std::string lemma;
  std::string semtag;
  OperatorKind kind = OperatorKind::determiner;
  std::vector<Polarity> args;

  int arity() const { return static_cast<int>(args.size()); }
};

/// Keyed by lowercased (lemma, semtag). Loaded from a JSON array of
/// {"lemma", "semtag", "arity", "args"} entries.
class OperatorLexicon {
 public:
  static OperatorLexicon load(std::istream& in, const std::string& name = "operator lexicon");

  void add(MonotonicityProfile profile);

  const MonotonicityProfile* find(const std::string& lemma, const std::string& semtag) const;

  std::size_t size() const { return profiles_.size(); }
  const std::vector<MonotonicityProfile>& profiles() const { return profiles_; }

 private:
  std::vector<MonotonicityProfile> profiles_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::string lower_ascii(std::string s);

}  // namespace monli
