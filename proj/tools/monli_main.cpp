// Command-line front end: read a derivation corpus, generate labeled
// premise-hypothesis pairs, optionally verify them against the finite-model
// oracle. Exit 0 on success, 1 on input errors, 2 when verification found
// disagreements or unmatched rows.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monli/checker.hpp"
#include "monli/error.hpp"
#include "monli/pipeline.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw monli::Error("cannot open " + path);
  return in;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw monli::Error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and verify monotonicity inference pairs from CCG derivations"};

  std::string corpus_path, lexicon_path, taxonomy_path, stopwords_path;
  std::string out_path = "-";
  std::string format = "jsonl";
  std::string tier = "both";
  std::string stats_path, check_path;
  bool verify = false, serial = false;
  bool no_lexical = false, no_elimination = false, no_swap = false;
  int domain_size = 3, max_depth = 1, max_pairs = 0;

  app.add_option("--corpus", corpus_path, "Derivation corpus (JSONL)")->required();
  app.add_option("--lexicon", lexicon_path, "Monotonicity operator lexicon (JSON)")->required();
  app.add_option("--taxonomy", taxonomy_path, "Sense taxonomy (JSONL)")->required();
  app.add_option("--stopwords", stopwords_path, "Stop tokens, one per line");
  app.add_option("--out", out_path, "Dataset output path, - for stdout");
  app.add_option("--format", format, "Dataset format: jsonl or tsv")
      ->check(CLI::IsMember({"jsonl", "tsv"}));
  app.add_option("--tier", tier, "Annotation tiers to use")
      ->check(CLI::IsMember({"gold", "silver", "both"}));
  app.add_flag("--verify", verify, "Model-check generated labels");
  app.add_option("--check", check_path, "Verify an existing dataset file instead of writing one");
  app.add_option("--domain-size", domain_size, "Largest model domain searched")
      ->check(CLI::Range(1, 8));
  app.add_flag("--no-lexical", no_lexical, "Skip lexical replacements");
  app.add_flag("--no-elimination", no_elimination, "Skip syntactic eliminations");
  app.add_flag("--no-swap", no_swap, "Skip swapped pairs");
  app.add_option("--max-depth", max_depth, "Taxonomy steps per replacement")
      ->check(CLI::Range(1, 8));
  app.add_option("--max-pairs", max_pairs, "Pair cap per sentence, 0 for unlimited")
      ->check(CLI::Range(0, 1000000));
  app.add_flag("--serial", serial, "Run the serial reference implementation");
  app.add_option("--stats", stats_path, "Write the JSON run report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto corpus_in = open_input(corpus_path);
    std::vector<monli::Sentence> corpus = monli::read_corpus(corpus_in, corpus_path);
    auto lexicon_in = open_input(lexicon_path);
    monli::OperatorLexicon lexicon = monli::OperatorLexicon::load(lexicon_in);
    auto taxonomy_in = open_input(taxonomy_path);
    monli::Taxonomy taxonomy = monli::Taxonomy::load(taxonomy_in, taxonomy_path);
    std::set<std::string> stop_tokens;
    if (!stopwords_path.empty()) {
      auto stops_in = open_input(stopwords_path);
      stop_tokens = monli::load_stop_tokens(stops_in);
    }

    monli::RunConfig config;
    config.gen.lexical = !no_lexical;
    config.gen.elimination = !no_elimination;
    config.gen.swapped = !no_swap;
    config.gen.max_depth = max_depth;
    config.gen.max_pairs_per_sentence = max_pairs;
    config.tier_gold = tier != "silver";
    config.tier_silver = tier != "gold";
    config.parallel = !serial;

    monli::CheckOptions check_options;
    check_options.max_domain_size = domain_size;
    check_options.parallel = !serial;

    if (!check_path.empty()) {
      auto rows_in = open_input(check_path);
      std::vector<monli::InferencePair> rows =
          format == "tsv" ? monli::read_tsv(rows_in, check_path)
                          : monli::read_jsonl(rows_in, check_path);
      monli::VerifyReport report = monli::verify_dataset(
          rows, corpus, lexicon, taxonomy, stop_tokens, config.gen, check_options);
      if (!stats_path.empty()) {
        monli::RunOutput empty_run;
        write_text(stats_path,
                   monli::report_json(empty_run, monli::dataset_stats(rows), &report));
      }
      std::cerr << check_path << ": " << report.total << " rows, " << report.matched
                << " matched, " << report.verifiable << " verifiable, " << report.agreed
                << " agreed, " << report.disagreements.size() << " disagreements\n";
      return report.disagreements.empty() && report.unmatched_ids.empty() ? 0 : 2;
    }

    monli::RunOutput run = monli::generate_dataset(corpus, lexicon, taxonomy, stop_tokens, config);
    std::vector<monli::InferencePair> rows;
    rows.reserve(run.pairs.size());
    for (const monli::GeneratedPair& gp : run.pairs) rows.push_back(gp.pair);

    std::ostringstream dataset;
    if (format == "tsv")
      monli::write_tsv(dataset, rows);
    else
      monli::write_jsonl(dataset, rows);
    write_text(out_path, dataset.str());

    monli::VerifyReport report;
    if (verify) report = monli::verify_pairs(run.pairs, lexicon, taxonomy, check_options);

    if (!stats_path.empty())
      write_text(stats_path, monli::report_json(run, monli::dataset_stats(rows),
                                                verify ? &report : nullptr));

    std::cerr << run.sentences_selected << "/" << run.sentences_considered
              << " sentences selected, " << rows.size() << " pairs";
    if (verify)
      std::cerr << "; verified " << report.agreed << "/" << report.verifiable << " ("
                << report.disagreements.size() << " disagreements)";
    std::cerr << "\n";
    if (verify && !report.disagreements.empty()) return 2;
    return 0;
  } catch (const monli::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
