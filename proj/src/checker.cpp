#include "monli/checker.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>

#include "monli/error.hpp"

namespace monli {

namespace {

constexpr int max_enumeration_bits = 24;
constexpr int max_predicates = 32;

// Forms recompiled against a fixed predicate numbering so the inner loop
// runs on flat arrays instead of string-keyed maps.
struct CompiledExpr {
  PredExpr::Kind kind = PredExpr::Kind::top;
  int pred = -1;
  std::vector<CompiledExpr> parts;
};

struct CompiledForm {
  LogicalForm::Kind kind = LogicalForm::Kind::quantified;
  Quant quant = Quant::all;
  int at_most_n = 0;
  CompiledExpr restrictor;
  CompiledExpr body;
  std::vector<CompiledForm> children;
};

void collect_preds(const PredExpr& e, std::vector<std::string>& out) {
  if (e.kind == PredExpr::Kind::pred) out.push_back(e.pred);
  for (const PredExpr& p : e.parts) collect_preds(p, out);
}

void collect_preds(const LogicalForm& lf, std::vector<std::string>& out) {
  if (lf.kind == LogicalForm::Kind::quantified) {
    collect_preds(lf.restrictor, out);
    collect_preds(lf.body, out);
  }
  for (const LogicalForm& c : lf.children) collect_preds(c, out);
}

CompiledExpr compile(const PredExpr& e, const std::map<std::string, int>& index) {
  CompiledExpr out;
  out.kind = e.kind;
  if (e.kind == PredExpr::Kind::pred) out.pred = index.at(e.pred);
  for (const PredExpr& p : e.parts) out.parts.push_back(compile(p, index));
  return out;
}

CompiledForm compile(const LogicalForm& lf, const std::map<std::string, int>& index) {
  CompiledForm out;
  out.kind = lf.kind;
  out.quant = lf.quant;
  out.at_most_n = lf.at_most_n;
  if (lf.kind == LogicalForm::Kind::quantified) {
    out.restrictor = compile(lf.restrictor, index);
    out.body = compile(lf.body, index);
  }
  for (const LogicalForm& c : lf.children) out.children.push_back(compile(c, index));
  return out;
}

std::uint32_t ceval(const CompiledExpr& e, const std::uint32_t* ext, std::uint32_t full) {
  switch (e.kind) {
    case PredExpr::Kind::top:
      return full;
    case PredExpr::Kind::pred:
      return ext[e.pred];
    case PredExpr::Kind::intersect: {
      std::uint32_t m = full;
      for (const CompiledExpr& p : e.parts) m &= ceval(p, ext, full);
      return m;
    }
    case PredExpr::Kind::unite: {
      std::uint32_t m = 0;
      for (const CompiledExpr& p : e.parts) m |= ceval(p, ext, full);
      return m;
    }
    case PredExpr::Kind::complement:
      return full & ~ceval(e.parts[0], ext, full);
  }
  return 0;
}

bool ceval(const CompiledForm& f, const std::uint32_t* ext, std::uint32_t full, int d) {
  switch (f.kind) {
    case LogicalForm::Kind::quantified: {
      std::uint32_t r = ceval(f.restrictor, ext, full);
      std::uint32_t b = ceval(f.body, ext, full);
      switch (f.quant) {
        case Quant::all: return (r & ~b) == 0;
        case Quant::some: return (r & b) != 0;
        case Quant::no: return (r & b) == 0;
        case Quant::both: return std::popcount(r) == 2 && (r & ~b) == 0;
        case Quant::at_most: {
          int cap = f.at_most_n < d ? f.at_most_n : d - 1;
          return std::popcount(r & b) <= cap;
        }
      }
      return false;
    }
    case LogicalForm::Kind::conditional:
      return !ceval(f.children[0], ext, full, d) || ceval(f.children[1], ext, full, d);
    case LogicalForm::Kind::negation:
      return !ceval(f.children[0], ext, full, d);
  }
  return false;
}

struct Search {
  std::vector<std::string> preds;            // every predicate, indexed
  std::vector<std::pair<int, int>> subsets;  // (narrower, broader)
  CompiledForm premise;
  CompiledForm hypothesis;

  bool counter_at(std::uint64_t index, int d, std::uint32_t* ext) const {
    std::uint32_t full = (1u << d) - 1u;
    for (std::size_t j = 0; j < preds.size(); ++j)
      ext[j] = static_cast<std::uint32_t>(index >> (j * d)) & full;
    for (const auto& [narrow, broad] : subsets)
      if (ext[narrow] & ~ext[broad]) return false;
    return ceval(premise, ext, full, d) && !ceval(hypothesis, ext, full, d);
  }

  Model model_at(std::uint64_t index, int d) const {
    std::uint32_t ext[max_predicates];
    std::uint32_t full = (1u << d) - 1u;
    for (std::size_t j = 0; j < preds.size(); ++j)
      ext[j] = static_cast<std::uint32_t>(index >> (j * d)) & full;
    Model m;
    m.domain_size = d;
    for (std::size_t i = 0; i < preds.size(); ++i) m.extensions[preds[i]] = ext[i];
    return m;
  }
};

Search build_search(const LogicalForm& premise, const LogicalForm& hypothesis,
                    const Taxonomy& taxonomy) {
  Search s;
  collect_preds(premise, s.preds);
  collect_preds(hypothesis, s.preds);
  std::sort(s.preds.begin(), s.preds.end());
  s.preds.erase(std::unique(s.preds.begin(), s.preds.end()), s.preds.end());
  if (s.preds.size() > max_predicates)
    throw Error("entailment check over " + std::to_string(s.preds.size()) +
                " predicates exceeds the limit of " + std::to_string(max_predicates));

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < s.preds.size(); ++i) index[s.preds[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < s.preds.size(); ++i) {
    if (!taxonomy.contains(s.preds[i])) continue;
    for (std::size_t j = i + 1; j < s.preds.size(); ++j) {
      if (!taxonomy.contains(s.preds[j])) continue;
      Relation rel = taxonomy.compare(s.preds[i], s.preds[j]);
      if (rel == Relation::narrower)
        s.subsets.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else if (rel == Relation::broader)
        s.subsets.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
  }

  s.premise = compile(premise, index);
  s.hypothesis = compile(hypothesis, index);
  return s;
}

}  // namespace

CheckResult check_entailment(const LogicalForm& premise, const LogicalForm& hypothesis,
                             const Taxonomy& taxonomy, const CheckOptions& options) {
  if (options.max_domain_size < 1 || options.max_domain_size > 8)
    throw Error("domain size must be between 1 and 8");
  Search s = build_search(premise, hypothesis, taxonomy);

  for (int d = 1; d <= options.max_domain_size; ++d) {
    int bits = static_cast<int>(s.preds.size()) * d;
    if (bits > max_enumeration_bits)
      throw Error("entailment check needs " + std::to_string(bits) +
                  " assignment bits at domain size " + std::to_string(d) +
                  "; the enumeration budget is " + std::to_string(max_enumeration_bits));
    const std::uint64_t total = 1ull << bits;

    if (!options.parallel) {
      std::uint32_t ext[max_predicates];
      for (std::uint64_t idx = 0; idx < total; ++idx)
        if (s.counter_at(idx, d, ext)) return {false, s.model_at(idx, d)};
      continue;
    }

    unsigned long long best = ULLONG_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
      std::uint32_t ext[max_predicates];
      if (s.counter_at(static_cast<std::uint64_t>(idx), d, ext) &&
          static_cast<unsigned long long>(idx) < best)
        best = static_cast<unsigned long long>(idx);
    }
    if (best != ULLONG_MAX) return {false, s.model_at(best, d)};
  }
  return {true, std::nullopt};
}

namespace {

struct Verdict {
  enum class Status { agreed, disagreed, unverifiable };
  Status status = Status::unverifiable;
  Label oracle = Label::neutral;
  std::optional<Model> countermodel;
  std::string reason;
};

Verdict verify_one(const GeneratedPair& gp, const OperatorLexicon& lexicon,
                   const Taxonomy& taxonomy, const CheckOptions& options) {
  Verdict v;
  Translation premise = to_logical_form(gp.premise_deriv, lexicon);
  if (!premise) {
    v.reason = premise.reason;
    return v;
  }
  Translation hypothesis = to_logical_form(gp.hypothesis_deriv, lexicon);
  if (!hypothesis) {
    v.reason = hypothesis.reason;
    return v;
  }
  CheckResult res;
  try {
    res = check_entailment(*premise.form, *hypothesis.form, taxonomy, options);
  } catch (const Error& e) {
    v.reason = e.what();
    return v;
  }
  v.oracle = res.entailed ? Label::entailment : Label::neutral;
  v.countermodel = std::move(res.countermodel);
  v.status = v.oracle == gp.pair.label ? Verdict::Status::agreed : Verdict::Status::disagreed;
  return v;
}

void fold(VerifyReport& report, const GeneratedPair& gp, Verdict&& v) {
  if (v.status == Verdict::Status::unverifiable) {
    ++report.unverifiable[v.reason];
    return;
  }
  ++report.verifiable;
  SectionTally& tally = report.by_section[section_name(gp.pair.section)];
  ++tally.checked;
  if (v.status == Verdict::Status::agreed) {
    ++report.agreed;
    ++tally.agreed;
    return;
  }
  Disagreement d;
  d.pair_id = gp.pair.pair_id;
  d.source_id = gp.pair.source_id;
  d.premise = gp.pair.premise;
  d.hypothesis = gp.pair.hypothesis;
  d.stored = gp.pair.label;
  d.oracle = v.oracle;
  d.countermodel = std::move(v.countermodel);
  report.disagreements.push_back(std::move(d));
}

}  // namespace

VerifyReport verify_pairs(const std::vector<GeneratedPair>& pairs,
                          const OperatorLexicon& lexicon, const Taxonomy& taxonomy,
                          const CheckOptions& options) {
  VerifyReport report;
  report.total = static_cast<int>(pairs.size());
  report.matched = report.total;

  std::vector<Verdict> verdicts(pairs.size());
  CheckOptions inner = options;
  inner.parallel = false;  // one pair per thread; nested parallelism off

  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(pairs.size()); ++i)
      verdicts[i] = verify_one(pairs[i], lexicon, taxonomy, inner);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      verdicts[i] = verify_one(pairs[i], lexicon, taxonomy, inner);
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) fold(report, pairs[i], std::move(verdicts[i]));
  return report;
}

VerifyReport verify_dataset(const std::vector<InferencePair>& rows,
                            const std::vector<Sentence>& corpus,
                            const OperatorLexicon& lexicon, const Taxonomy& taxonomy,
                            const std::set<std::string>& stop_tokens,
                            const GenConfig& gen_config, const CheckOptions& options) {
  std::map<std::string, const Sentence*> by_id;
  for (const Sentence& s : corpus) by_id[s.id] = &s;

  std::map<std::string, GenOutput> cache;
  std::vector<GeneratedPair> matched;
  std::vector<std::string> unmatched;

  for (const InferencePair& row : rows) {
    auto sit = by_id.find(row.source_id);
    if (sit == by_id.end()) {
      unmatched.push_back(row.pair_id);
      continue;
    }
    auto cit = cache.find(row.source_id);
    if (cit == cache.end())
      cit = cache.emplace(row.source_id,
                          generate(*sit->second, lexicon, taxonomy, stop_tokens, gen_config))
                .first;
    const GeneratedPair* found = nullptr;
    for (const GeneratedPair& gp : cit->second.pairs) {
      if (gp.pair.premise == row.premise && gp.pair.hypothesis == row.hypothesis) {
        found = &gp;
        break;
      }
    }
    if (!found) {
      unmatched.push_back(row.pair_id);
      continue;
    }
    GeneratedPair checked = *found;
    checked.pair = row;  // the row's label is what gets verified
    matched.push_back(std::move(checked));
  }

  VerifyReport report = verify_pairs(matched, lexicon, taxonomy, options);
  report.total = static_cast<int>(rows.size());
  report.matched = static_cast<int>(matched.size());
  report.unmatched_ids = std::move(unmatched);
  return report;
}

}  // namespace monli
