// Compares the serial reference and OpenMP batch kernels on a
// replicated corpus: batch_gloss, validate, stats.

#include <chrono>
#include <iostream>
#include <string>

#include "toto/corpus.hpp"
#include "toto/gloss.hpp"
#include "toto/lexicon.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace toto;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return ms_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "data";
  size_t factor = 400;  // ~20k entries from the 49-entry golden corpus
  if (argc > 1) data_dir = argv[1];
  if (argc > 2) factor = std::stoul(argv[2]);

  Lexicon lex = Lexicon::load_file(data_dir + "/lexicon.totolex");
  Corpus golden =
      read_corpus_file(data_dir + "/golden_corpus.json", CorpusFormat::Structured);

  Corpus big;
  big.name = "bench";
  for (size_t r = 0; r < factor; ++r)
    for (const auto& e : golden.entries) {
      CorpusEntry copy = e;
      copy.id = e.id + "#" + std::to_string(r);
      big.entries.push_back(std::move(copy));
    }
  std::cout << "entries: " << big.entries.size() << "\n";
#if defined(_OPENMP)
  std::cout << "omp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "omp threads: (no OpenMP; parallel falls back to serial)\n";
#endif

  BatchGlossOptions serial_opts, parallel_opts;
  serial_opts.policy = ExecutionPolicy::Serial;
  parallel_opts.policy = ExecutionPolicy::Parallel;

  const double gloss_serial =
      timed([&] { batch_gloss(lex, big, serial_opts); });
  const double gloss_parallel =
      timed([&] { batch_gloss(lex, big, parallel_opts); });
  const double val_serial =
      timed([&] { validate(big, {}, ExecutionPolicy::Serial); });
  const double val_parallel =
      timed([&] { validate(big, {}, ExecutionPolicy::Parallel); });
  const double stats_serial =
      timed([&] { stats(big, lex, ExecutionPolicy::Serial); });
  const double stats_parallel =
      timed([&] { stats(big, lex, ExecutionPolicy::Parallel); });

  auto row = [](const char* name, double s, double p) {
    std::cout << name << "\tserial " << s << " ms\tparallel " << p
              << " ms\tspeedup " << (p > 0 ? s / p : 0) << "x\n";
  };
  row("batch_gloss", gloss_serial, gloss_parallel);
  row("validate", val_serial, val_parallel);
  row("stats", stats_serial, stats_parallel);
  return 0;
}
