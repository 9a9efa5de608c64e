#include "monli/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "monli/corpus.hpp"
#include "monli/error.hpp"

namespace monli {

PredExpr PredExpr::top() { return PredExpr{}; }

PredExpr PredExpr::atom(std::string name) {
  PredExpr e;
  e.kind = Kind::pred;
  e.pred = std::move(name);
  return e;
}

PredExpr PredExpr::intersect(std::vector<PredExpr> parts) {
  if (parts.size() == 1) return parts[0];
  PredExpr e;
  e.kind = Kind::intersect;
  e.parts = std::move(parts);
  return e;
}

PredExpr PredExpr::unite(std::vector<PredExpr> parts) {
  if (parts.size() == 1) return parts[0];
  PredExpr e;
  e.kind = Kind::unite;
  e.parts = std::move(parts);
  return e;
}

PredExpr PredExpr::complement(PredExpr inner) {
  PredExpr e;
  e.kind = Kind::complement;
  e.parts.push_back(std::move(inner));
  return e;
}

std::string PredExpr::to_string() const {
  switch (kind) {
    case Kind::top: return "T";
    case Kind::pred: return pred;
    case Kind::complement: return "-" + parts[0].to_string();
    case Kind::intersect:
    case Kind::unite: {
      std::string sep = kind == Kind::intersect ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

const char* quant_name(Quant q) {
  switch (q) {
    case Quant::all: return "all";
    case Quant::some: return "some";
    case Quant::no: return "no";
    case Quant::both: return "both";
    case Quant::at_most: return "at_most";
  }
  return "?";
}

LogicalForm LogicalForm::quantified(Quant q, PredExpr restrictor, PredExpr body, int at_most_n) {
  LogicalForm lf;
  lf.kind = Kind::quantified;
  lf.quant = q;
  lf.at_most_n = at_most_n;
  lf.restrictor = std::move(restrictor);
  lf.body = std::move(body);
  return lf;
}

LogicalForm LogicalForm::conditional(LogicalForm antecedent, LogicalForm consequent) {
  LogicalForm lf;
  lf.kind = Kind::conditional;
  lf.children.push_back(std::move(antecedent));
  lf.children.push_back(std::move(consequent));
  return lf;
}

LogicalForm LogicalForm::negation(LogicalForm inner) {
  LogicalForm lf;
  lf.kind = Kind::negation;
  lf.children.push_back(std::move(inner));
  return lf;
}

std::string LogicalForm::to_string() const {
  switch (kind) {
    case Kind::quantified: {
      std::string q = quant_name(quant);
      if (quant == Quant::at_most) q += "(" + std::to_string(at_most_n) + ")";
      return q + "(" + restrictor.to_string() + ", " + body.to_string() + ")";
    }
    case Kind::conditional:
      return "if(" + children[0].to_string() + ", " + children[1].to_string() + ")";
    case Kind::negation:
      return "not(" + children[0].to_string() + ")";
  }
  return "?";
}

std::uint32_t eval(const PredExpr& e, const Model& model) {
  std::uint32_t full = model.domain_size >= 32 ? ~0u : ((1u << model.domain_size) - 1u);
  switch (e.kind) {
    case PredExpr::Kind::top:
      return full;
    case PredExpr::Kind::pred: {
      auto it = model.extensions.find(e.pred);
      if (it == model.extensions.end())
        throw Error("model has no extension for predicate \"" + e.pred + "\"");
      return it->second & full;
    }
    case PredExpr::Kind::intersect: {
      std::uint32_t m = full;
      for (const PredExpr& p : e.parts) m &= eval(p, model);
      return m;
    }
    case PredExpr::Kind::unite: {
      std::uint32_t m = 0;
      for (const PredExpr& p : e.parts) m |= eval(p, model);
      return m;
    }
    case PredExpr::Kind::complement:
      return full & ~eval(e.parts[0], model);
  }
  return 0;
}

bool eval(const LogicalForm& lf, const Model& model) {
  switch (lf.kind) {
    case LogicalForm::Kind::quantified: {
      std::uint32_t r = eval(lf.restrictor, model);
      std::uint32_t b = eval(lf.body, model);
      switch (lf.quant) {
        case Quant::all: return (r & ~b) == 0;
        case Quant::some: return (r & b) != 0;
        case Quant::no: return (r & b) == 0;
        case Quant::both: return std::popcount(r) == 2 && (r & ~b) == 0;
        case Quant::at_most: {
          int cap = lf.at_most_n < model.domain_size ? lf.at_most_n : model.domain_size - 1;
          return std::popcount(static_cast<std::uint32_t>(r & b)) <= cap;
        }
      }
      return false;
    }
    case LogicalForm::Kind::conditional:
      return !eval(lf.children[0], model) || eval(lf.children[1], model);
    case LogicalForm::Kind::negation:
      return !eval(lf.children[0], model);
  }
  return false;
}

namespace {

std::string pred_symbol(const Leaf& l) {
  if (l.sense) return *l.sense;
  std::string s = lower_ascii(l.lemma);
  for (char& c : s)
    if (c == ' ') c = '_';
  return s;
}

int parse_count_word(const std::string& word) {
  static const std::map<std::string, int> words = {
      {"one", 1}, {"two", 2},   {"three", 3}, {"four", 4},   {"five", 5},  {"six", 6},
      {"seven", 7}, {"eight", 8}, {"nine", 9},  {"ten", 10},  {"eleven", 11}, {"twelve", 12}};
  auto it = words.find(word);
  if (it != words.end()) return it->second;
  int n = 0;
  for (char c : word) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    n = n * 10 + (c - '0');
  }
  return word.empty() ? -1 : n;
}

struct Translator {
  const OperatorLexicon& lexicon;
  std::string reason;

  const DerivationNode* strip_unary(const DerivationNode* node) const {
    while (!node->is_leaf() && node->children().size() == 1)
      node = node->children()[0].get();
    return node;
  }

  bool fail(const std::string& why) {
    if (reason.empty()) reason = why;
    return false;
  }

  const MonotonicityProfile* operator_at(const DerivationNode* node) const {
    if (!node->is_leaf()) return nullptr;
    const Leaf& l = node->leaf();
    return lexicon.find(l.lemma, l.semtag);
  }

  // quantifier expressed by a crisp determiner lemma, if any
  std::optional<std::pair<Quant, int>> quant_of(const std::string& lemma) const {
    std::string l = lower_ascii(lemma);
    if (l == "all" || l == "every" || l == "each") return {{Quant::all, 0}};
    if (l == "some" || l == "a" || l == "an") return {{Quant::some, 0}};
    if (l == "no") return {{Quant::no, 0}};
    if (l == "both") return {{Quant::both, 0}};
    if (l.rfind("at most ", 0) == 0) {
      int n = parse_count_word(l.substr(8));
      if (n >= 0) return {{Quant::at_most, n}};
    }
    return std::nullopt;
  }

  // fa(determiner, N) after stripping unary wrappers
  struct QuantNP {
    Quant quant;
    int n;
    const DerivationNode* restrictor;
    const DerivationNode* whole;
  };

  std::optional<QuantNP> quantified_np(const DerivationNode* node) const {
    const DerivationNode* stripped = strip_unary(node);
    if (stripped->is_leaf() || stripped->children().size() != 2) return std::nullopt;
    if (stripped->rule() != Rule::fa) return std::nullopt;
    const DerivationNode* det = stripped->children()[0].get();
    const MonotonicityProfile* prof = operator_at(det);
    if (!prof || prof->kind != OperatorKind::determiner) return std::nullopt;
    auto q = quant_of(det->leaf().lemma);
    if (!q) return std::nullopt;
    return QuantNP{q->first, q->second, stripped->children()[1].get(), node};
  }

  void collect_quantified(const DerivationNode* node, const DerivationNode* skip,
                          std::vector<QuantNP>& out) const {
    if (node == skip) return;
    if (auto q = quantified_np(node)) {
      out.push_back(*q);
      return;  // do not descend into the phrase itself
    }
    if (node->is_leaf()) return;
    for (const NodePtr& c : node->children()) collect_quantified(c.get(), skip, out);
  }

  // Intersection of the content predicates below node, honoring negation
  // and coordination; nullopt when nothing contributes.
  std::optional<PredExpr> expr_of(const DerivationNode* node, const DerivationNode* exclude) {
    if (node == exclude) return std::nullopt;
    if (node->is_leaf()) {
      const Leaf& l = node->leaf();
      if (l.pos != 'n' && l.pos != 'v' && l.pos != 'a' && l.pos != 'r') return std::nullopt;
      return PredExpr::atom(pred_symbol(l));
    }
    if (node->children().size() == 1) return expr_of(node->children()[0].get(), exclude);

    int fi = functor_child(*node);
    const DerivationNode* functor = node->children()[fi].get();
    const DerivationNode* argument = node->children()[1 - fi].get();

    // verb-phrase negation: complement everything under the negator
    if (const MonotonicityProfile* p = operator_at(functor);
        p && p->kind == OperatorKind::vp_negator) {
      auto inner = expr_of(argument, exclude);
      if (!inner) return std::nullopt;
      return PredExpr::complement(std::move(*inner));
    }

    // coordination: ba(X, fa(and/or, Y))
    if (!functor->is_leaf() && functor->children().size() == 2) {
      const DerivationNode* coord = functor->children()[0].get();
      if (coord->is_leaf() && is_coordinator(coord->leaf())) {
        auto left = expr_of(argument, exclude);
        auto right = expr_of(functor->children()[1].get(), exclude);
        if (left && right) {
          std::vector<PredExpr> parts{std::move(*left), std::move(*right)};
          return coord->leaf().semtag == "AND" ? PredExpr::intersect(std::move(parts))
                                               : PredExpr::unite(std::move(parts));
        }
        return left ? left : right;
      }
    }

    std::vector<PredExpr> parts;
    for (const NodePtr& c : node->children())
      if (auto e = expr_of(c.get(), exclude)) parts.push_back(std::move(*e));
    if (parts.empty()) return std::nullopt;
    return PredExpr::intersect(std::move(parts));
  }

  bool is_expletive_there(const DerivationNode* node) const {
    const DerivationNode* stripped = strip_unary(node);
    if (!stripped->is_leaf()) return false;
    std::string lemma = lower_ascii(stripped->leaf().lemma);
    return lemma == "there" || lemma == "there's";
  }

  std::optional<LogicalForm> clause(const DerivationNode* node) {
    node = strip_unary(node);
    if (node->is_leaf() || node->children().size() != 2) {
      fail("clause shape not recognized");
      return std::nullopt;
    }

    const DerivationNode* left = node->children()[0].get();
    const DerivationNode* right = node->children()[1].get();

    // existential: there / there's anywhere in subject position
    bool existential = (node->rule() == Rule::ba && is_expletive_there(left)) ||
                       (node->rule() == Rule::fa && is_expletive_there(left));
    if (existential) {
      std::vector<QuantNP> qs;
      collect_quantified(right, nullptr, qs);
      if (qs.size() != 1) {
        fail("existential clause without a single quantified phrase");
        return std::nullopt;
      }
      auto restr = expr_of(qs[0].restrictor, nullptr);
      if (!restr) {
        fail("empty restrictor");
        return std::nullopt;
      }
      return LogicalForm::quantified(qs[0].quant, std::move(*restr), PredExpr::top(), qs[0].n);
    }

    if (node->rule() != Rule::ba) {
      fail("clause shape not recognized");
      return std::nullopt;
    }

    auto subj_q = quantified_np(left);
    std::vector<QuantNP> obj_qs;
    collect_quantified(right, nullptr, obj_qs);

    if (subj_q && !obj_qs.empty()) {
      fail("more than one quantified phrase in a clause");
      return std::nullopt;
    }
    if (obj_qs.size() > 1) {
      fail("more than one quantified phrase in a clause");
      return std::nullopt;
    }

    if (subj_q) {
      auto restr = expr_of(subj_q->restrictor, nullptr);
      auto body = expr_of(right, nullptr);
      if (!restr || !body) {
        fail("empty restrictor or body");
        return std::nullopt;
      }
      return LogicalForm::quantified(subj_q->quant, std::move(*restr), std::move(*body),
                                     subj_q->n);
    }

    if (obj_qs.size() == 1) {
      auto restr = expr_of(obj_qs[0].restrictor, nullptr);
      auto frame = expr_of(right, obj_qs[0].whole);
      auto subj = expr_of(left, nullptr);
      if (!restr) {
        fail("empty restrictor");
        return std::nullopt;
      }
      std::vector<PredExpr> body;
      if (subj) body.push_back(std::move(*subj));
      if (frame) body.push_back(std::move(*frame));
      if (body.empty()) {
        fail("empty body");
        return std::nullopt;
      }
      return LogicalForm::quantified(obj_qs[0].quant, std::move(*restr),
                                     PredExpr::intersect(std::move(body)), obj_qs[0].n);
    }

    // plain subject: definite or proper name, read universally
    auto restr = expr_of(left, nullptr);
    auto body = expr_of(right, nullptr);
    if (!restr || !body) {
      fail("empty restrictor or body");
      return std::nullopt;
    }
    return LogicalForm::quantified(Quant::all, std::move(*restr), std::move(*body));
  }

  std::optional<LogicalForm> sentence_form(const DerivationNode* root) {
    const DerivationNode* node = strip_unary(root);
    // conditional: fa(fa(if, antecedent), consequent)
    if (!node->is_leaf() && node->children().size() == 2 && node->rule() == Rule::fa) {
      const DerivationNode* left = strip_unary(node->children()[0].get());
      if (!left->is_leaf() && left->children().size() == 2 && left->rule() == Rule::fa) {
        const DerivationNode* opleaf = left->children()[0].get();
        if (const MonotonicityProfile* p = operator_at(opleaf);
            p && p->kind == OperatorKind::conditional) {
          if (lower_ascii(opleaf->leaf().lemma) != "if") {
            fail("operator \"" + opleaf->leaf().lemma + "\" outside the crisp fragment");
            return std::nullopt;
          }
          auto antecedent = clause(left->children()[1].get());
          if (!antecedent) return std::nullopt;
          auto consequent = clause(node->children()[1].get());
          if (!consequent) return std::nullopt;
          return LogicalForm::conditional(std::move(*antecedent), std::move(*consequent));
        }
      }
    }
    return clause(node);
  }
};

}  // namespace

bool crisp_operator_lemma(const std::string& lemma) {
  std::string l = lower_ascii(lemma);
  if (l == "all" || l == "every" || l == "each" || l == "some" || l == "a" || l == "an" ||
      l == "no" || l == "both" || l == "not" || l == "if")
    return true;
  if (l.rfind("at most ", 0) == 0) return parse_count_word(l.substr(8)) >= 0;
  return false;
}

Translation to_logical_form(const Sentence& sentence, const OperatorLexicon& lexicon) {
  Translation out;
  for (const DerivationNode* leaf : leaves_of(*sentence.root)) {
    const Leaf& l = leaf->leaf();
    if (lexicon.find(l.lemma, l.semtag) && !crisp_operator_lemma(l.lemma)) {
      out.reason = "operator \"" + l.lemma + "\" outside the crisp fragment";
      return out;
    }
  }
  Translator tr{lexicon, {}};
  auto lf = tr.sentence_form(sentence.root.get());
  if (!lf) {
    out.reason = tr.reason.empty() ? "clause shape not recognized" : tr.reason;
    return out;
  }
  out.form = std::move(*lf);
  return out;
}

}  // namespace monli
