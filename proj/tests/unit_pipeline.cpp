#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "monli/error.hpp"
#include "monli/pipeline.hpp"

using namespace monli;
using namespace helpers;

namespace {

const std::set<std::string>& stops() {
  static const std::set<std::string> s{"a", "an", "the", "was", "were", "by"};
  return s;
}

std::vector<Sentence> small_corpus() {
  std::vector<Sentence> corpus;
  corpus.push_back(p_boys_some());
  corpus.push_back(p_boys_no());
  corpus.push_back(g_dance_floor());
  corpus.push_back(p_party());
  corpus.push_back(s_bank());
  // too short to select
  corpus.push_back(sent("chaff-short", ba(det("All", "AND", noun("kids", "kid.n.01")),
                                          iv("danced"))));
  // long enough but free of operators and coordinators
  corpus.push_back(sent("chaff-plain",
                        ba(the(noun("dog")), ba(fa(aux("was", "PST"), iv("sleeping")),
                                                pp_vp("on", the(noun("floor")))))));
  return corpus;
}

RunOutput run_corpus(const RunConfig& config = {}) {
  return generate_dataset(small_corpus(), test_lexicon(), test_taxonomy(), stops(), config);
}

std::vector<InferencePair> rows_of(const RunOutput& out) {
  std::vector<InferencePair> rows;
  for (const GeneratedPair& gp : out.pairs) rows.push_back(gp.pair);
  return rows;
}

const char* valid_row =
    R"({"pair_id":"abc","premise":"P","hypothesis":"H","label":"entailment","section":"up",)"
    R"("replacement_kind":"lexical","direction":"broaden","site_polarity":"up",)"
    R"("source_id":"s","orientation":"forward"})";

std::string read_jsonl_error(const std::string& text) {
  return error_of([&] {
    std::istringstream in(text);
    read_jsonl(in);
  });
}

}  // namespace

TEST_CASE("generate_dataset selects and merges in corpus order") {
  RunOutput out = run_corpus();
  CHECK(out.sentences_considered == 7);
  CHECK(out.sentences_selected == 5);
  CHECK(out.pairs.size() == 44);  // 12 + 12 + 10 + 6 + 4
  CHECK(out.skipped ==
        std::map<std::string, int>{{"no_candidates", 8}, {"sense_unavailable", 2}});

  CHECK(out.pairs.front().pair.source_id == "p-boys-some");
  CHECK(out.pairs.back().pair.source_id == "s-bank");

  // per-sentence blocks stay contiguous and ordered
  std::vector<std::string> block_order;
  for (const GeneratedPair& gp : out.pairs)
    if (block_order.empty() || block_order.back() != gp.pair.source_id)
      block_order.push_back(gp.pair.source_id);
  CHECK(block_order == std::vector<std::string>{"p-boys-some", "p-boys-no", "g-dance-floor",
                                                "p-party", "s-bank"});
}

TEST_CASE("parallel and serial dataset runs are identical") {
  RunConfig serial;
  serial.parallel = false;
  RunOutput a = run_corpus();
  RunOutput b = run_corpus(serial);
  CHECK(a.sentences_considered == b.sentences_considered);
  CHECK(a.sentences_selected == b.sentences_selected);
  CHECK(a.skipped == b.skipped);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(a.pairs[i].pair.pair_id == b.pairs[i].pair.pair_id);
    CHECK(a.pairs[i].pair.premise == b.pairs[i].pair.premise);
    CHECK(a.pairs[i].pair.hypothesis == b.pairs[i].pair.hypothesis);
  }
}

TEST_CASE("tier filters narrow the considered corpus") {
  RunConfig gold_only;
  gold_only.tier_silver = false;
  RunOutput g = run_corpus(gold_only);
  CHECK(g.sentences_considered == 6);
  CHECK(g.sentences_selected == 4);
  CHECK(g.pairs.size() == 40);

  RunConfig silver_only;
  silver_only.tier_gold = false;
  RunOutput s = run_corpus(silver_only);
  CHECK(s.sentences_considered == 1);
  CHECK(s.sentences_selected == 1);
  CHECK(s.pairs.size() == 4);
  for (const GeneratedPair& gp : s.pairs) CHECK(gp.pair.source_id == "s-bank");
}

TEST_CASE("jsonl round-trips every field in a fixed key order") {
  GenOutput gen = generate(p_boys_some(), test_lexicon(), test_taxonomy(), stops(), {});
  std::vector<InferencePair> rows;
  for (const GeneratedPair& gp : gen.pairs) rows.push_back(gp.pair);

  std::ostringstream out;
  write_jsonl(out, rows);
  std::string text = out.str();

  // one object per line, keys in writing order
  std::istringstream lines(text);
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("{\"pair_id\":", 0) == 0);
  std::size_t at = 0;
  for (const char* key : {"pair_id", "premise", "hypothesis", "label", "section",
                          "replacement_kind", "direction", "site_polarity", "source_id",
                          "orientation"}) {
    std::size_t pos = first.find("\"" + std::string(key) + "\":");
    CAPTURE(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= at);
    at = pos;
  }

  std::istringstream in(text);
  std::vector<InferencePair> back = read_jsonl(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(back[i].pair_id == rows[i].pair_id);
    CHECK(back[i].premise == rows[i].premise);
    CHECK(back[i].hypothesis == rows[i].hypothesis);
    CHECK(back[i].label == rows[i].label);
    CHECK(back[i].section == rows[i].section);
    CHECK(back[i].lexical == rows[i].lexical);
    CHECK(back[i].direction == rows[i].direction);
    CHECK(back[i].site_polarity == rows[i].site_polarity);
    CHECK(back[i].source_id == rows[i].source_id);
    CHECK(back[i].orientation == rows[i].orientation);
  }

  SUBCASE("blank lines are skipped") {
    std::istringstream gaps("\n" + first + "\n\n");
    CHECK(read_jsonl(gaps).size() == 1);
  }
}

TEST_CASE("tsv round-trips everything except site polarity") {
  GenOutput gen = generate(p_boys_no(), test_lexicon(), test_taxonomy(), stops(), {});
  std::vector<InferencePair> rows;
  for (const GeneratedPair& gp : gen.pairs) rows.push_back(gp.pair);
  REQUIRE(rows[0].site_polarity == Polarity::down);

  std::ostringstream out;
  write_tsv(out, rows);
  std::string text = out.str();
  CHECK(text.rfind("pair_id\tpremise\thypothesis\tlabel\tsection\treplacement_kind\t"
                   "direction\torientation\tsource_id\n",
                   0) == 0);

  std::istringstream in(text);
  std::vector<InferencePair> back = read_tsv(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].pair_id == rows[i].pair_id);
    CHECK(back[i].premise == rows[i].premise);
    CHECK(back[i].label == rows[i].label);
    CHECK(back[i].section == rows[i].section);
    CHECK(back[i].orientation == rows[i].orientation);
    CHECK(back[i].site_polarity == Polarity::up);  // not carried by tsv
  }

  SUBCASE("fields holding tabs cannot be written") {
    rows[0].premise = "No\tboys";
    std::ostringstream bad;
    CHECK(error_of([&] { write_tsv(bad, rows); }).find("contains a tab or newline") !=
          std::string::npos);
  }
}

TEST_CASE("dataset readers report precise errors") {
  CHECK(read_jsonl_error("{\"pair_id\":\"x\"}") ==
        "dataset:1: missing string field \"premise\"");
  CHECK(read_jsonl_error("not json").rfind("dataset:1: ", 0) == 0);

  std::string row = valid_row;
  auto swap_in = [&](const std::string& from, const std::string& to) {
    std::string s = row;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK(read_jsonl_error(swap_in("\"entailment\"", "\"maybe\"")) ==
        "dataset:1: unknown label \"maybe\"");
  CHECK(read_jsonl_error(swap_in("\"section\":\"up\"", "\"section\":\"sideways\"")) ==
        "dataset:1: unknown section \"sideways\"");
  CHECK(read_jsonl_error(swap_in("\"lexical\"", "\"swap\"")) ==
        "dataset:1: unknown replacement kind \"swap\"");
  CHECK(read_jsonl_error(swap_in("\"broaden\"", "\"sideways\"")) ==
        "dataset:1: unknown direction \"sideways\"");
  CHECK(read_jsonl_error(swap_in("\"site_polarity\":\"up\"", "\"site_polarity\":\"diagonal\"")) ==
        "dataset:1: unknown polarity \"diagonal\"");
  CHECK(read_jsonl_error(swap_in("\"forward\"", "\"backward\"")) ==
        "dataset:1: unknown orientation \"backward\"");

  std::istringstream bad_header("pair_id\tpremise\n");
  CHECK(error_of([&] { read_tsv(bad_header); }) == "dataset:1: unexpected header");

  std::istringstream short_row(
      "pair_id\tpremise\thypothesis\tlabel\tsection\treplacement_kind\tdirection\t"
      "orientation\tsource_id\na\tb\tc\n");
  CHECK(error_of([&] { read_tsv(short_row); }) == "dataset:2: expected 9 columns, found 3");
}

TEST_CASE("dataset statistics count distinct values") {
  GenOutput gen = generate(p_boys_some(), test_lexicon(), test_taxonomy(), stops(), {});
  std::vector<InferencePair> rows;
  for (const GeneratedPair& gp : gen.pairs) rows.push_back(gp.pair);

  DatasetStats stats = dataset_stats(rows);
  CHECK(stats.pairs == 12);
  CHECK(stats.sources == 1);
  CHECK(stats.by_label == std::map<std::string, int>{{"entailment", 6}, {"neutral", 6}});
  CHECK(stats.by_section == std::map<std::string, int>{{"up", 12}});
  CHECK(stats.by_kind == std::map<std::string, int>{{"lexical", 8}, {"elimination", 4}});
  CHECK(stats.by_orientation ==
        std::map<std::string, int>{{"forward", 6}, {"swapped", 6}});
  // Some boys are happily dancing in the garden / people schoolboys moving area
  CHECK(stats.vocabulary == 12);
}

TEST_CASE("the run report is deterministic parseable json") {
  std::vector<Sentence> corpus;
  corpus.push_back(p_boys_some());
  RunOutput run = generate_dataset(corpus, test_lexicon(), test_taxonomy(), stops(), {});
  DatasetStats stats = dataset_stats(rows_of(run));

  std::vector<GeneratedPair> flipped = run.pairs;
  REQUIRE(flipped[1].pair.label == Label::neutral);
  flipped[1].pair.label = Label::entailment;  // force one disagreement
  VerifyReport report = verify_pairs(flipped, test_lexicon(), test_taxonomy(), {});

  std::string text = report_json(run, stats, &report);
  CHECK(text == report_json(run, stats, &report));
  CHECK(text.back() == '\n');

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["sentences"]["considered"] == 1);
  CHECK(j["sentences"]["selected"] == 1);
  CHECK(j["pairs"] == 12);
  CHECK(j["labels"]["entailment"] == 6);
  CHECK(j["kinds"]["elimination"] == 4);
  CHECK(j["skipped"]["no_candidates"] == 2);
  CHECK(j["vocabulary"] == 12);

  const nlohmann::json& v = j["verification"];
  CHECK(v["total"] == 12);
  CHECK(v["matched"] == 12);
  CHECK(v["verifiable"] == 12);
  CHECK(v["agreed"] == 11);
  CHECK(v["by_section"]["up"]["checked"] == 12);
  CHECK(v["by_section"]["up"]["agreed"] == 11);
  CHECK(v["unmatched"].empty());
  REQUIRE(v["disagreements"].size() == 1);
  const nlohmann::json& d = v["disagreements"][0];
  CHECK(d["stored"] == "entailment");
  CHECK(d["oracle"] == "neutral");
  REQUIRE(d["countermodel"].is_object());
  CHECK(d["countermodel"]["domain_size"].get<int>() >= 1);
  CHECK(d["countermodel"]["extensions"].is_object());
  CHECK(!d["countermodel"]["extensions"].empty());

  SUBCASE("the verification block is optional") {
    nlohmann::json bare = nlohmann::json::parse(report_json(run, stats, nullptr));
    CHECK(!bare.contains("verification"));
  }
}

TEST_CASE("generation errors name the offending sentence") {
  // an arity-2 operator sitting on an atomic category breaks marking
  std::vector<Sentence> corpus;
  corpus.push_back(sent("bad-op", ba(lf("all", "all", 'x', "AND", "NP"),
                                     ba(fa(aux("were", "PST"), iv("dancing")),
                                        pp_vp("on", the(noun("floor")))))));
  std::string what = error_of([&] {
    generate_dataset(corpus, test_lexicon(), test_taxonomy(), stops(), {});
  });
  CHECK(what.rfind("sentence \"bad-op\":", 0) == 0);
  CHECK(what.find("atomic category") != std::string::npos);
}
