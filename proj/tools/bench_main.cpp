// Benchmark: OpenMP kernels against their serial reference. Times pair
// generation over the corpus and full dataset verification, checks both
// implementations produce identical results, and prints one line per task.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "monli/checker.hpp"
#include "monli/error.hpp"
#include "monli/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw monli::Error("cannot open " + path);
  return in;
}

template <typename F>
double best_of(int repeats, F&& task) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    task();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void print_row(const std::string& task, double serial_ms, double parallel_ms) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", task.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare serial and OpenMP implementations"};
  std::string corpus_path, lexicon_path, taxonomy_path, stopwords_path;
  int repeats = 5;
  int domain_size = 3;
  app.add_option("--corpus", corpus_path)->required();
  app.add_option("--lexicon", lexicon_path)->required();
  app.add_option("--taxonomy", taxonomy_path)->required();
  app.add_option("--stopwords", stopwords_path);
  app.add_option("--repeats", repeats)->check(CLI::Range(1, 100));
  app.add_option("--domain-size", domain_size)->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

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

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif

    monli::RunConfig serial_config;
    serial_config.parallel = false;
    monli::RunConfig parallel_config;
    parallel_config.parallel = true;

    monli::RunOutput serial_run =
        monli::generate_dataset(corpus, lexicon, taxonomy, stop_tokens, serial_config);
    monli::RunOutput parallel_run =
        monli::generate_dataset(corpus, lexicon, taxonomy, stop_tokens, parallel_config);
    if (serial_run.pairs.size() != parallel_run.pairs.size())
      throw monli::Error("serial and parallel generation disagree");
    for (std::size_t i = 0; i < serial_run.pairs.size(); ++i)
      if (serial_run.pairs[i].pair.pair_id != parallel_run.pairs[i].pair.pair_id)
        throw monli::Error("serial and parallel generation disagree at pair " +
                           std::to_string(i));

    double gen_serial = best_of(repeats, [&] {
      monli::generate_dataset(corpus, lexicon, taxonomy, stop_tokens, serial_config);
    });
    double gen_parallel = best_of(repeats, [&] {
      monli::generate_dataset(corpus, lexicon, taxonomy, stop_tokens, parallel_config);
    });
    print_row("generate", gen_serial, gen_parallel);

    monli::CheckOptions serial_check{domain_size, false};
    monli::CheckOptions parallel_check{domain_size, true};
    monli::VerifyReport serial_report =
        monli::verify_pairs(serial_run.pairs, lexicon, taxonomy, serial_check);
    monli::VerifyReport parallel_report =
        monli::verify_pairs(serial_run.pairs, lexicon, taxonomy, parallel_check);
    if (serial_report.agreed != parallel_report.agreed ||
        serial_report.verifiable != parallel_report.verifiable ||
        serial_report.disagreements.size() != parallel_report.disagreements.size())
      throw monli::Error("serial and parallel verification disagree");

    double verify_serial = best_of(repeats, [&] {
      monli::verify_pairs(serial_run.pairs, lexicon, taxonomy, serial_check);
    });
    double verify_parallel = best_of(repeats, [&] {
      monli::verify_pairs(serial_run.pairs, lexicon, taxonomy, parallel_check);
    });
    print_row("verify", verify_serial, verify_parallel);

    std::printf("pairs %zu, verifiable %d, agreed %d\n", serial_run.pairs.size(),
                serial_report.verifiable, serial_report.agreed);
    return 0;
  } catch (const monli::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
