#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monli/derivation.hpp"
#include "monli/polarity.hpp"

namespace monli {

/// Predicate expression over a finite domain: a named predicate, the whole
/// domain (top), an intersection (modification, conjunction), a union
/// (disjunction), or a complement (verb-phrase negation).
struct PredExpr {
  enum class Kind { top, pred, intersect, unite, complement };

  Kind kind = Kind::top;
  std::string pred;              // kind == pred
  std::vector<PredExpr> parts;   // intersect/unite: n-ary, complement: one

  static PredExpr top();
  static PredExpr atom(std::string name);
  static PredExpr intersect(std::vector<PredExpr> parts);
  static PredExpr unite(std::vector<PredExpr> parts);
  static PredExpr complement(PredExpr inner);

  std::string to_string() const;
};

enum class Quant { all, some, no, both, at_most };

const char* quant_name(Quant q);

/// Monadic generalized-quantifier fragment:
///   all: R subset of B   some: R meets B   no: R misses B
///   both: |R| = 2 and R subset of B        at_most(n): |R and B| <= n
/// plus material conditionals and sentence negation. Over a domain of
/// size d, at_most(n) caps n at d - 1: an uncapped bound of d or more is
/// vacuous on every model that small, which would erase the distinction
/// the quantifier is there to make. The cap keeps entailments valid
/// (both sides always share one bound) while small domains can still
/// exhibit countermodels.
struct LogicalForm {
  enum class Kind { quantified, conditional, negation };

  Kind kind = Kind::quantified;
  Quant quant = Quant::all;
  int at_most_n = 0;
  PredExpr restrictor;
  PredExpr body;
  std::vector<LogicalForm> children;  // conditional: [antecedent, consequent]; negation: [inner]

  static LogicalForm quantified(Quant q, PredExpr restrictor, PredExpr body, int at_most_n = 0);
  static LogicalForm conditional(LogicalForm antecedent, LogicalForm consequent);
  static LogicalForm negation(LogicalForm inner);

  std::string to_string() const;
};

/// Finite model: individuals 0..domain_size-1, each predicate's extension
/// a bitmask over them.
struct Model {
  int domain_size = 0;
  std::map<std::string, std::uint32_t> extensions;
};

/// Truth of the form in the model. A predicate missing from the model
/// raises Error.
bool eval(const LogicalForm& lf, const Model& model);
std::uint32_t eval(const PredExpr& e, const Model& model);

/// Result of translating a sentence into the quantifier fragment. Sentences
/// using operators outside the crisp set (or shapes the fragment cannot
/// express) are unverifiable, with the reason recorded.
struct Translation {
  std::optional<LogicalForm> form;
  std::string reason;  // set when form is empty

  explicit operator bool() const { return form.has_value(); }
};

/// Deterministic compositional reading of a derivation. Content leaves
/// (pos n/v/a/r) become predicates named by their sense when present, else
/// their lowercased lemma; modifiers and conjunction intersect, disjunction
/// unites, "not" complements the verb phrase; a quantified subject or
/// object contributes the quantifier; definite and proper-name subjects
/// read universally over their head predicate; existential "there" takes
/// top as body. At most one quantified phrase per clause is expressible.
Translation to_logical_form(const Sentence& sentence, const OperatorLexicon& lexicon);

/// Lemmas the finite-model oracle can interpret.
bool crisp_operator_lemma(const std::string& lemma);

}  // namespace monli
