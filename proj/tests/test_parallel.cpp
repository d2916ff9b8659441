// The OpenMP batch kernels must agree with the serial reference
// implementations entry for entry.

#include "doctest.h"
#include "toto/corpus.hpp"
#include "toto/gloss.hpp"

using namespace toto;

namespace {

const Lexicon& golden_lex() {
  static Lexicon lex = Lexicon::load_file(std::string(TOTO_DATA_DIR) +
                                          "/lexicon.totolex");
  return lex;
}

Corpus replicated_corpus(size_t factor) {
  Corpus golden = read_corpus_file(
      std::string(TOTO_DATA_DIR) + "/golden_corpus.json",
      CorpusFormat::Structured);
  Corpus big;
  for (size_t r = 0; r < factor; ++r)
    for (const auto& e : golden.entries) {
      CorpusEntry copy = e;
      copy.id = e.id + "#" + std::to_string(r);
      if (r == factor - 1) copy.toto += " blorg";  // a few unresolved tokens
      big.entries.push_back(std::move(copy));
    }
  return big;
}

}  // namespace

TEST_CASE("batch_gloss: parallel equals serial") {
  Corpus c = replicated_corpus(8);
  BatchGlossOptions serial, parallel;
  serial.policy = ExecutionPolicy::Serial;
  parallel.policy = ExecutionPolicy::Parallel;
  serial.tense_overrides["ex66#0"] = MorphCategory::Pst;
  parallel.tense_overrides["ex66#0"] = MorphCategory::Pst;

  auto rs = batch_gloss(golden_lex(), c, serial);
  auto rp = batch_gloss(golden_lex(), c, parallel);

  REQUIRE(rs.igts.size() == rp.igts.size());
  for (size_t i = 0; i < rs.igts.size(); ++i) {
    CHECK(rs.igts[i].surface_line() == rp.igts[i].surface_line());
    CHECK(rs.igts[i].gloss_line() == rp.igts[i].gloss_line());
    CHECK(rs.igts[i].unresolved == rp.igts[i].unresolved);
  }
  CHECK(rs.resolution_rate == doctest::Approx(rp.resolution_rate));
  REQUIRE(rs.issues.size() == rp.issues.size());
  for (size_t i = 0; i < rs.issues.size(); ++i)
    CHECK(rs.issues[i].entry_id == rp.issues[i].entry_id);
}

TEST_CASE("validate: parallel equals serial") {
  Corpus c = replicated_corpus(8);
  c.entries[3].bangla.clear();
  auto rs = validate(c, {}, ExecutionPolicy::Serial);
  auto rp = validate(c, {}, ExecutionPolicy::Parallel);
  CHECK(rs.pass == rp.pass);
  REQUIRE(rs.issues.size() == rp.issues.size());
  for (size_t i = 0; i < rs.issues.size(); ++i) {
    CHECK(rs.issues[i].entry_id == rp.issues[i].entry_id);
    CHECK(rs.issues[i].type == rp.issues[i].type);
  }
}

TEST_CASE("stats: parallel equals serial") {
  Corpus c = replicated_corpus(8);
  auto rs = stats(c, golden_lex(), ExecutionPolicy::Serial);
  auto rp = stats(c, golden_lex(), ExecutionPolicy::Parallel);
  CHECK(rs.category_freq == rp.category_freq);
  CHECK(rs.toto_tokens_total == rp.toto_tokens_total);
  CHECK(rs.toto_tokens_analyzable == rp.toto_tokens_analyzable);
  CHECK(rs.coverage == doctest::Approx(rp.coverage));
}
