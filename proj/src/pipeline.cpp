#include "monli/pipeline.hpp"

#include <json.hpp>
#include <sstream>

#include "monli/error.hpp"

namespace monli {

namespace {

using ordered_json = nlohmann::ordered_json;

Label parse_label(const std::string& s, const std::string& where) {
  if (s == "entailment") return Label::entailment;
  if (s == "neutral") return Label::neutral;
  throw Error(where + ": unknown label \"" + s + "\"");
}

Section parse_section(const std::string& s, const std::string& where) {
  if (s == "up") return Section::up;
  if (s == "down") return Section::down;
  if (s == "non") return Section::non;
  if (s == "conj") return Section::conj;
  if (s == "disj") return Section::disj;
  throw Error(where + ": unknown section \"" + s + "\"");
}

Direction parse_direction(const std::string& s, const std::string& where) {
  if (s == "broaden") return Direction::broaden;
  if (s == "narrow") return Direction::narrow;
  throw Error(where + ": unknown direction \"" + s + "\"");
}

Orientation parse_orientation(const std::string& s, const std::string& where) {
  if (s == "forward") return Orientation::forward;
  if (s == "swapped") return Orientation::swapped;
  throw Error(where + ": unknown orientation \"" + s + "\"");
}

bool parse_kind(const std::string& s, const std::string& where) {
  if (s == "lexical") return true;
  if (s == "elimination") return false;
  throw Error(where + ": unknown replacement kind \"" + s + "\"");
}

Polarity parse_polarity(const std::string& s, const std::string& where) {
  if (s == "up") return Polarity::up;
  if (s == "down") return Polarity::down;
  if (s == "flat") return Polarity::flat;
  throw Error(where + ": unknown polarity \"" + s + "\"");
}

const char* kind_name(bool lexical) { return lexical ? "lexical" : "elimination"; }

std::string require_string(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error(where + ": missing string field \"" + std::string(key) + "\"");
  return j[key].get<std::string>();
}

constexpr const char* tsv_header =
    "pair_id\tpremise\thypothesis\tlabel\tsection\treplacement_kind\tdirection\torientation"
    "\tsource_id";

}  // namespace

RunOutput generate_dataset(const std::vector<Sentence>& corpus, const OperatorLexicon& lexicon,
                           const Taxonomy& taxonomy, const std::set<std::string>& stop_tokens,
                           const RunConfig& config) {
  std::vector<const Sentence*> considered;
  for (const Sentence& s : corpus) {
    if (s.tier == Tier::gold && !config.tier_gold) continue;
    if (s.tier == Tier::silver && !config.tier_silver) continue;
    considered.push_back(&s);
  }

  std::vector<Sentence> pool;
  pool.reserve(considered.size());
  for (const Sentence* s : considered) pool.push_back(*s);
  std::vector<Sentence> selected = select_sentences(pool, lexicon);

  std::vector<GenOutput> outputs(selected.size());
  std::vector<std::string> errors(selected.size());

  if (config.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(selected.size()); ++i) {
      try {
        outputs[i] = generate(selected[i], lexicon, taxonomy, stop_tokens, config.gen);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      try {
        outputs[i] = generate(selected[i], lexicon, taxonomy, stop_tokens, config.gen);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  }

  for (std::size_t i = 0; i < selected.size(); ++i)
    if (!errors[i].empty())
      throw Error("sentence \"" + selected[i].id + "\": " + errors[i]);

  RunOutput out;
  out.sentences_considered = static_cast<int>(considered.size());
  out.sentences_selected = static_cast<int>(selected.size());
  for (GenOutput& g : outputs) {
    for (GeneratedPair& gp : g.pairs) out.pairs.push_back(std::move(gp));
    for (const auto& [reason, count] : g.skipped) out.skipped[reason] += count;
  }
  return out;
}

void write_jsonl(std::ostream& out, const std::vector<InferencePair>& pairs) {
  for (const InferencePair& p : pairs) {
    ordered_json j;
    j["pair_id"] = p.pair_id;
    j["premise"] = p.premise;
    j["hypothesis"] = p.hypothesis;
    j["label"] = label_name(p.label);
    j["section"] = section_name(p.section);
    j["replacement_kind"] = kind_name(p.lexical);
    j["direction"] = direction_name(p.direction);
    j["site_polarity"] = polarity_name(p.site_polarity);
    j["source_id"] = p.source_id;
    j["orientation"] = orientation_name(p.orientation);
    out << j.dump() << '\n';
  }
}

std::vector<InferencePair> read_jsonl(std::istream& in, const std::string& name) {
  std::vector<InferencePair> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = name + ":" + std::to_string(lineno);
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(where + ": " + e.what());
    }
    InferencePair p;
    p.pair_id = require_string(j, "pair_id", where);
    p.premise = require_string(j, "premise", where);
    p.hypothesis = require_string(j, "hypothesis", where);
    p.label = parse_label(require_string(j, "label", where), where);
    p.section = parse_section(require_string(j, "section", where), where);
    p.lexical = parse_kind(require_string(j, "replacement_kind", where), where);
    p.direction = parse_direction(require_string(j, "direction", where), where);
    p.site_polarity = parse_polarity(require_string(j, "site_polarity", where), where);
    p.source_id = require_string(j, "source_id", where);
    p.orientation = parse_orientation(require_string(j, "orientation", where), where);
    rows.push_back(std::move(p));
  }
  return rows;
}

void write_tsv(std::ostream& out, const std::vector<InferencePair>& pairs) {
  out << tsv_header << '\n';
  for (const InferencePair& p : pairs) {
    for (const std::string* field : {&p.pair_id, &p.premise, &p.hypothesis, &p.source_id})
      if (field->find_first_of("\t\n") != std::string::npos)
        throw Error("pair " + p.pair_id + ": field contains a tab or newline");
    out << p.pair_id << '\t' << p.premise << '\t' << p.hypothesis << '\t'
        << label_name(p.label) << '\t' << section_name(p.section) << '\t'
        << kind_name(p.lexical) << '\t' << direction_name(p.direction) << '\t'
        << orientation_name(p.orientation) << '\t' << p.source_id << '\n';
  }
}

std::vector<InferencePair> read_tsv(std::istream& in, const std::string& name) {
  std::vector<InferencePair> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = name + ":" + std::to_string(lineno);
    if (lineno == 1) {
      if (line != tsv_header) throw Error(where + ": unexpected header");
      continue;
    }
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 9)
      throw Error(where + ": expected 9 columns, found " + std::to_string(cols.size()));
    InferencePair p;
    p.pair_id = cols[0];
    p.premise = cols[1];
    p.hypothesis = cols[2];
    p.label = parse_label(cols[3], where);
    p.section = parse_section(cols[4], where);
    p.lexical = parse_kind(cols[5], where);
    p.direction = parse_direction(cols[6], where);
    p.orientation = parse_orientation(cols[7], where);
    p.source_id = cols[8];
    rows.push_back(std::move(p));
  }
  return rows;
}

DatasetStats dataset_stats(const std::vector<InferencePair>& pairs) {
  DatasetStats stats;
  stats.pairs = static_cast<int>(pairs.size());
  std::set<std::string> sources;
  std::set<std::string> vocab;
  for (const InferencePair& p : pairs) {
    sources.insert(p.source_id);
    ++stats.by_label[label_name(p.label)];
    ++stats.by_section[section_name(p.section)];
    ++stats.by_kind[kind_name(p.lexical)];
    ++stats.by_orientation[orientation_name(p.orientation)];
    for (const std::string* text : {&p.premise, &p.hypothesis}) {
      std::istringstream ss(*text);
      std::string token;
      while (ss >> token) vocab.insert(token);
    }
  }
  stats.sources = static_cast<int>(sources.size());
  stats.vocabulary = static_cast<int>(vocab.size());
  return stats;
}

namespace {

ordered_json model_json(const Model& m) {
  ordered_json j;
  j["domain_size"] = m.domain_size;
  ordered_json ext = ordered_json::object();
  for (const auto& [pred, mask] : m.extensions) {
    ordered_json members = ordered_json::array();
    for (int i = 0; i < m.domain_size; ++i)
      if (mask & (1u << i)) members.push_back(i);
    ext[pred] = std::move(members);
  }
  j["extensions"] = std::move(ext);
  return j;
}

ordered_json verification_json(const VerifyReport& report) {
  ordered_json v;
  v["total"] = report.total;
  v["matched"] = report.matched;
  v["verifiable"] = report.verifiable;
  v["agreed"] = report.agreed;
  ordered_json ds = ordered_json::array();
  for (const Disagreement& d : report.disagreements) {
    ordered_json dj;
    dj["pair_id"] = d.pair_id;
    dj["source_id"] = d.source_id;
    dj["premise"] = d.premise;
    dj["hypothesis"] = d.hypothesis;
    dj["stored"] = label_name(d.stored);
    dj["oracle"] = label_name(d.oracle);
    dj["countermodel"] = d.countermodel ? model_json(*d.countermodel) : ordered_json(nullptr);
    ds.push_back(std::move(dj));
  }
  v["disagreements"] = std::move(ds);
  v["unverifiable"] = report.unverifiable;
  ordered_json sec = ordered_json::object();
  for (const auto& [name, tally] : report.by_section)
    sec[name] = ordered_json{{"checked", tally.checked}, {"agreed", tally.agreed}};
  v["by_section"] = std::move(sec);
  v["unmatched"] = report.unmatched_ids;
  return v;
}

}  // namespace

std::string report_json(const RunOutput& run, const DatasetStats& stats,
                        const VerifyReport* verification) {
  ordered_json j;
  j["sentences"] = ordered_json{{"considered", run.sentences_considered},
                                {"selected", run.sentences_selected}};
  j["pairs"] = stats.pairs;
  j["labels"] = stats.by_label;
  j["sections"] = stats.by_section;
  j["kinds"] = stats.by_kind;
  j["orientations"] = stats.by_orientation;
  j["sources"] = stats.sources;
  j["vocabulary"] = stats.vocabulary;
  j["skipped"] = run.skipped;
  if (verification) j["verification"] = verification_json(*verification);
  return j.dump(2) + "\n";
}

}  // namespace monli
