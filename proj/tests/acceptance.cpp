// Acceptance suite: one pass/fail line per criterion, exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toto/corpus.hpp"
#include "toto/gloss.hpp"
#include "toto/lexicon.hpp"
#include "toto/morphology.hpp"
#include "toto/rng.hpp"
#include "toto/tokenizer.hpp"
#include "toto/translit.hpp"

using namespace toto;
namespace fs = std::filesystem;

namespace {

const std::string kData = TOTO_DATA_DIR;
const std::string kCli = TOTO_CLI_BIN;

int checks_failed = 0;
std::vector<std::string> failure_notes;

void expect(bool ok, const std::string& note) {
  if (!ok) {
    ++checks_failed;
    failure_notes.push_back(note);
  }
}

const Lexicon& lex() {
  static Lexicon l = Lexicon::load_file(kData + "/lexicon.totolex");
  return l;
}

const Corpus& golden() {
  static Corpus c =
      read_corpus_file(kData + "/golden_corpus.json", CorpusFormat::Structured);
  return c;
}

struct GoldenRow {
  std::string id;
  std::string force;  // "-" or a category tag
  std::string surface;
  std::string gloss;
};

std::vector<GoldenRow> golden_rows() {
  std::vector<GoldenRow> rows;
  std::ifstream in(kData + "/golden_expected.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    GoldenRow r;
    std::istringstream ss(line);
    std::getline(ss, r.id, '\t');
    std::getline(ss, r.force, '\t');
    std::getline(ss, r.surface, '\t');
    std::getline(ss, r.gloss, '\t');
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------- 1
// Golden gloss suite: >= 40 transcribed sentences, batch_gloss output
// string-equal to the expected rows, resolution rate 1.0, < 5 s.
bool criterion_golden_gloss() {
  const auto rows = golden_rows();
  expect(rows.size() >= 40, "golden suite has fewer than 40 sentences");
  expect(rows.size() == golden().entries.size(),
         "expected-row count differs from corpus size");

  BatchGlossOptions opts;
  for (const auto& r : rows)
    if (r.force != "-") opts.tense_overrides[r.id] = category_from(r.force);

  const auto t0 = std::chrono::steady_clock::now();
  BatchGlossResult res = batch_gloss(lex(), golden(), opts);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

  expect(res.resolution_rate == 1.0, "resolution rate below 1.0");
  expect(ms < 5000.0, "golden gloss suite exceeded 5 s");

  std::map<std::string, const Igt*> by_id;
  for (size_t i = 0; i < golden().entries.size(); ++i)
    by_id[golden().entries[i].id] = &res.igts[i];
  for (const auto& r : rows) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      expect(false, r.id + ": missing from corpus");
      continue;
    }
    expect(it->second->surface_line() == r.surface,
           r.id + ": surface row mismatch: got '" +
               it->second->surface_line() + "'");
    expect(it->second->gloss_line() == r.gloss,
           r.id + ": gloss row mismatch: got '" + it->second->gloss_line() +
               "'");
  }
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 2
// Derivation tables reproduced exactly.
bool criterion_derivation_tables() {
  struct Row {
    const char* lemma;
    WordClass cls;
    WordClass target;
    const char* surface;
    const char* gloss;
  };
  const Row rows[] = {
      // verb -> noun (7 rows)
      {"təi", WordClass::Verb, WordClass::Noun, "təiva", "walker"},
      {"ca", WordClass::Verb, WordClass::Noun, "cava", "eater"},
      {"kəlai", WordClass::Verb, WordClass::Noun, "kəlaiva", "player"},
      {"pərai", WordClass::Verb, WordClass::Noun, "pəraiva", "reader"},
      {"la", WordClass::Verb, WordClass::Noun, "lava", "writer"},
      {"tʰui", WordClass::Verb, WordClass::Noun, "tʰuiva", "runner"},
      {"jɔ", WordClass::Verb, WordClass::Noun, "jɔva", "talker"},
      // adjective -> verb (8 rows)
      {"hai", WordClass::Adjective, WordClass::Verb, "haipaJoa", "brighten"},
      {"edaŋ", WordClass::Adjective, WordClass::Verb, "edaŋpaJoa", "shorten"},
      {"təbo", WordClass::Adjective, WordClass::Verb, "təboJoa", "widen"},
      {"haŋpapa", WordClass::Adjective, WordClass::Verb, "haŋpapaJoa",
       "whiten"},
      {"daʃi", WordClass::Adjective, WordClass::Verb, "daʃipaʃoa", "blacken"},
      {"ælui", WordClass::Adjective, WordClass::Verb, "æluipaʃoa", "redden"},
      {"dilen", WordClass::Adjective, WordClass::Verb, "dilenpaʃoa", "darken"},
      {"peleŋ", WordClass::Adjective, WordClass::Verb, "peleŋpaʃoa",
       "lighten"},
      // noun -> adjective, lexicalized pairs (10 rows)
      {"hiŋva", WordClass::Noun, WordClass::Adjective, "hiŋva koiva",
       "attentive"},
      {"ʃedaŋ", WordClass::Noun, WordClass::Adjective, "ʃedaŋva", "angry"},
      {"lo", WordClass::Noun, WordClass::Adjective, "loa", "believable"},
      {"ʃeʃoŋ", WordClass::Noun, WordClass::Adjective, "ʃeʃoŋva", "lovely"},
      {"mucuiŋ", WordClass::Noun, WordClass::Adjective, "mucuiŋva",
       "courageous"},
      {"kʰətrabi", WordClass::Noun, WordClass::Adjective, "kʰətrabiva",
       "dangerous"},
      {"bæro", WordClass::Noun, WordClass::Adjective, "bæro", "dear"},
      {"ləmʃ", WordClass::Noun, WordClass::Adjective, "ləmʃva", "miserable"},
      {"iuŋ", WordClass::Noun, WordClass::Adjective, "iuŋva", "habitual"},
      {"tuŋsiŋ", WordClass::Noun, WordClass::Adjective, "tuŋsiŋ tuicpava",
       "insulting"},
  };
  for (const auto& row : rows) {
    const LexicalEntry* entry = nullptr;
    for (const auto* e : lex().lookup_stem(row.lemma))
      if (e->word_class == row.cls) entry = e;
    if (!entry) {
      expect(false, std::string(row.lemma) + ": stem missing");
      continue;
    }
    try {
      DerivedEntry d = derive(lex(), *entry, row.target);
      expect(d.surface == row.surface,
             std::string(row.lemma) + ": surface '" + d.surface + "' != '" +
                 row.surface + "'");
      expect(d.gloss_en == row.gloss,
             std::string(row.lemma) + ": gloss '" + d.gloss_en + "' != '" +
                 row.gloss + "'");
      expect(d.word_class == row.target, std::string(row.lemma) + ": class");
    } catch (const Error& e) {
      expect(false, std::string(row.lemma) + ": " + e.what());
    }
  }
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 3
// Ambiguity cardinalities, exhaustively over every golden stem.
bool criterion_ambiguity_cardinalities() {
  auto stem_analyses = [&](const LexicalEntry& s, const std::string& suffix) {
    std::vector<Analysis> mine;
    for (auto& a : analyze(lex(), s.lemma + suffix))
      if (a.stem == &s) mine.push_back(std::move(a));
    return mine;
  };
  auto cases_of = [](const std::vector<Analysis>& as) {
    std::set<MorphCategory> out;
    for (const auto& a : as)
      if (auto c = a.features.get("case")) out.insert(*c);
    return out;
  };
  auto tams_of = [](const std::vector<Analysis>& as) {
    std::set<MorphCategory> out;
    for (const auto& a : as)
      if (auto t = a.features.get("tam")) out.insert(*t);
    return out;
  };

  size_t nominals = 0, verbs = 0;
  for (const auto& s : lex().entries()) {
    if (s.word_class == WordClass::Noun || s.word_class == WordClass::Pronoun) {
      ++nominals;
      auto fo = stem_analyses(s, "fo");
      expect(fo.size() == 3 && cases_of(fo) ==
                 std::set<MorphCategory>{MorphCategory::Loc, MorphCategory::Inst,
                                         MorphCategory::Abl},
             s.lemma + "+fo: expected the LOC/INST/ABL triple, got " +
                 std::to_string(fo.size()));
      auto ta = stem_analyses(s, "ta");
      expect(ta.size() == 2 && cases_of(ta) ==
                 std::set<MorphCategory>{MorphCategory::Loc, MorphCategory::Dat},
             s.lemma + "+ta: expected the LOC/DAT pair, got " +
                 std::to_string(ta.size()));
      auto hing = stem_analyses(s, "hiŋ");
      expect(hing.size() == 2 && cases_of(hing) ==
                 std::set<MorphCategory>{MorphCategory::Acc, MorphCategory::Dat},
             s.lemma + "+hiŋ: expected the ACC/DAT pair, got " +
                 std::to_string(hing.size()));
    } else if (s.word_class == WordClass::Verb) {
      ++verbs;
      auto mi = stem_analyses(s, "mi");
      expect(mi.size() == 2 && tams_of(mi) ==
                 std::set<MorphCategory>{MorphCategory::Prs, MorphCategory::Pst},
             s.lemma + "+mi: expected the PRS/PST pair, got " +
                 std::to_string(mi.size()));
      auto na = stem_analyses(s, "na");
      expect(na.size() == 2 && tams_of(na) ==
                 std::set<MorphCategory>{MorphCategory::Prs, MorphCategory::Pst},
             s.lemma + "+na: expected the PRS/PST pair, got " +
                 std::to_string(na.size()));
      auto ro = stem_analyses(s, "ro");
      expect(ro.size() == 1 && tams_of(ro) ==
                 std::set<MorphCategory>{MorphCategory::Fut},
             s.lemma + "+ro: expected FUT only, got " +
                 std::to_string(ro.size()));
    }
  }
  expect(nominals > 0 && verbs > 0, "lexicon has no nominals or no verbs");
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 4
// Generator/analyzer inverse over all golden stems x all legal bundles.
bool criterion_generator_analyzer_inverse() {
  size_t pairs = 0, failures = 0;
  for (const auto& s : lex().entries()) {
    for (const auto& f : enumerate_bundles(s.word_class)) {
      ++pairs;
      std::string surface;
      try {
        surface = generate(lex(), s, f);
      } catch (const Error& e) {
        ++failures;
        expect(false, s.lemma + " + " + f.canonical() + ": generate threw " +
                          e.what());
        continue;
      }
      bool found = false;
      for (const auto& a : analyze(lex(), surface))
        if (a.stem == &s && a.features == f) found = true;
      if (!found) {
        ++failures;
        expect(false, s.lemma + " + " + f.canonical() + " -> '" + surface +
                          "': no matching analysis");
      }
    }
  }
  std::cout << "  (inverse property: " << pairs << " stem/bundle pairs, "
            << failures << " failures)\n";
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 5
// Corpus formats: round trips on a 100-entry synthetic corpus; split
// sizes and seed determinism.
Corpus synthetic_corpus() {
  Corpus c;
  c.name = "synthetic";
  c.version = "1";
  const char* verbs[] = {"ha", "ca", "coi", "tui", "nui",
                         "la", "lei", "porai", "fai", "gepa"};
  for (int i = 0; i < 100; ++i) {
    CorpusEntry e;
    e.id = "e" + std::to_string(i + 1);
    e.toto = std::string("ka ") + verbs[i % 10] + "-na";
    e.bangla = "বাক্য " + std::to_string(i + 1);
    e.english = "Sentence " + std::to_string(i + 1) + ".";
    c.entries.push_back(std::move(e));
  }
  return c;
}

bool corpora_equal(const Corpus& a, const Corpus& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.id != y.id || x.toto != y.toto || x.bangla != y.bangla ||
        x.english != y.english || x.augmented != y.augmented ||
        x.provenance != y.provenance || x.pos != y.pos ||
        x.boundaries != y.boundaries ||
        x.morphemes.size() != y.morphemes.size())
      return false;
    for (size_t k = 0; k < x.morphemes.size(); ++k)
      if (x.morphemes[k].seg != y.morphemes[k].seg ||
          x.morphemes[k].gloss != y.morphemes[k].gloss)
        return false;
  }
  return true;
}

bool criterion_corpus_formats() {
  Corpus c = synthetic_corpus();

  {
    std::istringstream in(write_corpus(c, CorpusFormat::Structured));
    Corpus back = read_corpus(in, CorpusFormat::Structured);
    expect(corpora_equal(c, back), "structured round trip not identity");
  }
  {
    std::istringstream in(write_corpus(c, CorpusFormat::Tabular));
    Corpus back = read_corpus(in, CorpusFormat::Tabular);
    expect(corpora_equal(c, back), "tabular round trip not identity");
  }

  auto first = split(c, 0.8, 0.1, 0.1, 20250809);
  expect(first[0].entries.size() == 80, "train size != 80");
  expect(first[1].entries.size() == 10, "val size != 10");
  expect(first[2].entries.size() == 10, "test size != 10");
  for (int run = 0; run < 2; ++run) {
    auto again = split(c, 0.8, 0.1, 0.1, 20250809);
    for (int p = 0; p < 3; ++p) {
      bool same = first[p].entries.size() == again[p].entries.size();
      if (same)
        for (size_t i = 0; i < first[p].entries.size(); ++i)
          if (first[p].entries[i].id != again[p].entries[i].id) same = false;
      expect(same, "split not deterministic across runs");
    }
  }
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 6
// Conjugation augmentation: 10 annotated entries, one verb each, expand
// to 30 entries (20 augmented siblings), originals intact.
bool criterion_conjugation_augmentation() {
  const char* verbs[] = {"ha", "ca", "coi", "tui", "nui",
                         "la", "lei", "porai", "fai", "gepa"};
  Corpus c;
  for (int i = 0; i < 10; ++i) {
    CorpusEntry e;
    e.id = "a" + std::to_string(i + 1);
    e.toto = std::string("ka ") + verbs[i] + "-na";
    e.bangla = "বাক্য";
    e.english = "Sentence.";
    const LexicalEntry* v = nullptr;
    for (const auto* s : lex().lookup_stem(verbs[i]))
      if (s->word_class == WordClass::Verb) v = s;
    e.morphemes = {{"ka", "1SG"},
                   {std::string(verbs[i]) + "-na", v->gloss_en + "-PRS"}};
    e.pos = {"PRONOUN", "VERB"};
    c.entries.push_back(std::move(e));
  }

  Corpus out = augment(c, lex(), {Strategy::Conjugation}, 1);
  expect(out.entries.size() == 30,
         "expected 30 entries, got " + std::to_string(out.entries.size()));

  size_t originals = 0, siblings = 0;
  for (const auto& e : out.entries) (e.augmented ? siblings : originals)++;
  expect(originals == 10, "originals not intact");
  expect(siblings == 20, "expected 20 augmented siblings");

  std::map<std::string, const CorpusEntry*> by_id;
  for (const auto& e : out.entries) by_id[e.id] = &e;
  for (const auto& e : c.entries) {
    auto it = by_id.find(e.id);
    expect(it != by_id.end() && it->second->toto == e.toto &&
               !it->second->augmented,
           e.id + ": original modified or missing");
  }
  // each original gains exactly a PST and a FUT sibling
  for (const auto& e : c.entries) {
    expect(by_id.count(e.id + "#conj-PST") == 1, e.id + ": missing PST sibling");
    expect(by_id.count(e.id + "#conj-FUT") == 1, e.id + ": missing FUT sibling");
  }
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 7
// Transliteration: 1000 random round trips over an invertible table's
// key alphabet; the longest-match example behaves as specified.
bool criterion_transliteration() {
  TransliterationTable table =
      TransliterationTable::load_file(kData + "/toto_script.tsv");
  expect(table.invertible(), "shipped table is not invertible");

  std::vector<std::string> keys;
  for (const auto& [k, v] : table.pairs()) keys.push_back(k);
  Rng rng(20260809);
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    const size_t len = rng.bounded(24);
    for (size_t k = 0; k < len; ++k) s += keys[rng.bounded(keys.size())];
    const std::string there = table.to_script(s).text;
    const std::string back = table.to_roman(there).text;
    if (back != s) {
      expect(false, "round trip failed on '" + s + "'");
      return false;
    }
  }

  std::istringstream doc("a\tX\nab\tY\n");
  TransliterationTable small = TransliterationTable::load(doc, "<mem>");
  expect(small.to_script("ab").text == "Y", "longest match: ab -> Y");
  expect(small.to_script("aab").text == "XY", "longest match: aab -> XY");
  expect(small.to_script("").text.empty(), "empty input");
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 8
// Tokenizer: identity on every golden sentence; exact vocab size;
// masked fraction within ±0.03 over >= 10k maskable tokens; control
// tag line shape.
bool criterion_tokenizer() {
  std::vector<std::string> texts;
  for (const auto& e : golden().entries) {
    texts.push_back(e.toto);
    texts.push_back(e.bangla);
    texts.push_back(e.english);
  }
  SubwordModel m = train_subword(texts, 512, 1);
  expect(m.vocab_size() == 512, "vocab size != 512");

  for (const auto& t : texts)
    if (decode(m, encode(m, t)) != t) {
      expect(false, "decode(encode(x)) != x for '" + t + "'");
      break;
    }

  std::vector<int> ids;
  for (int i = 0; i < 12000; ++i) ids.push_back(8 + (i % 100));
  MaskedBatch batch = make_mlm_examples(m, ids, 0.15, 77);
  const double fraction =
      static_cast<double>(batch.positions.size()) / ids.size();
  expect(fraction > 0.12 && fraction < 0.18,
         "masked fraction " + std::to_string(fraction) + " outside 0.15±0.03");

  const std::string pairs = emit_translation_pairs(golden(), Direction::ToEn);
  std::istringstream in(pairs);
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    const auto& e = golden().entries[n];
    expect(line == "<2en> " + e.toto + "\t" + e.english,
           e.id + ": pair line shape mismatch");
    ++n;
  }
  expect(n == golden().entries.size(), "pair line count mismatch");
  return checks_failed == 0;
}

// ---------------------------------------------------------------- 9
// Determinism sweep: every CLI subcommand re-run with identical inputs
// and seeds produces byte-identical stdout and output files.
std::string run_cli(const std::string& args, const std::string& stdout_path) {
  const std::string cmd =
      kCli + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return rc == 0 ? "" : "exit " + std::to_string(rc) + ": " + cmd;
}

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion_determinism_sweep() {
  const fs::path dir = fs::temp_directory_path() / "toto_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string d = dir.string();
  const std::string lexicon = " --lexicon " + kData + "/lexicon.totolex ";
  const std::string corpus = kData + "/golden_corpus.json";

  // subcommand -> (argv template, produced output files); {RUN} keeps the
  // two runs' scratch files apart.
  const std::vector<std::pair<std::string, std::vector<std::string>>> cmds = {
      {lexicon + "analyze hami", {}},
      {lexicon + "generate ha PFV,FUT", {}},
      {lexicon + "derive ca NOUN --class VERB", {}},
      {lexicon + "gloss \"fenepa tui\"", {}},
      {" --table " + kData + "/toto_script.tsv translit --to-script \"ka haro\"",
       {}},
      {" corpus validate -i " + corpus, {}},
      {" corpus convert -i " + corpus + " --to tsv -o " + d + "/c{RUN}.tsv",
       {d + "/c{RUN}.tsv"}},
      {" corpus split -i " + corpus + " --ratios 0.8,0.1,0.1 --seed 7 -o " +
           d + "/s{RUN}",
       {d + "/s{RUN}.train.json", d + "/s{RUN}.val.json",
        d + "/s{RUN}.test.json"}},
      {lexicon + "corpus augment -i " + corpus +
           " --strategies synonym --seed 3 -o " + d + "/a{RUN}.json",
       {d + "/a{RUN}.json"}},
      {lexicon + "corpus stats -i " + corpus, {}},
      {" tok train -i " + corpus + " --vocab-size 300 --seed 1 -o " + d +
           "/m{RUN}.totobpe",
       {d + "/m{RUN}.totobpe"}},
      {" tok encode --model " + d + "/m1.totobpe \"ka haro\"", {}},
      {" tok decode --model " + d + "/m1.totobpe 7 8 9", {}},
      {" tok mlm-prep --model " + d + "/m1.totobpe --rate 0.15 --seed 2 -i " +
           corpus + " -o " + d + "/mlm{RUN}.jsonl",
       {d + "/mlm{RUN}.jsonl"}},
      {" tok pairs -i " + corpus + " --direction to-en -o " + d +
           "/p{RUN}.tsv",
       {d + "/p{RUN}.tsv"}},
  };

  auto subst = [](std::string s, const std::string& run) {
    size_t at;
    while ((at = s.find("{RUN}")) != std::string::npos) s.replace(at, 5, run);
    return s;
  };

  size_t idx = 0;
  for (const auto& [tmpl, outputs] : cmds) {
    ++idx;
    const std::string out1 = d + "/stdout." + std::to_string(idx) + ".1";
    const std::string out2 = d + "/stdout." + std::to_string(idx) + ".2";
    std::string err = run_cli(subst(tmpl, "1"), out1);
    if (err.empty()) err = run_cli(subst(tmpl, "2"), out2);
    if (!err.empty()) {
      expect(false, "command failed: " + err);
      continue;
    }
    expect(file_bytes(out1) == file_bytes(out2),
           "stdout differs for: " + subst(tmpl, "N"));
    for (const auto& produced : outputs)
      expect(file_bytes(subst(produced, "1")) == file_bytes(subst(produced, "2")),
             "output file differs for: " + subst(produced, "N"));
  }
  return checks_failed == 0;
}

int run_criterion(const char* name, bool (*fn)()) {
  checks_failed = 0;
  failure_notes.clear();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    ok = false;
    failure_notes.push_back(std::string("exception: ") + e.what());
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  if (!ok)
    for (const auto& note : failure_notes) std::cout << "      - " << note << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += run_criterion("golden gloss suite (>=40 sentences, rate 1.0, <5s)",
                          criterion_golden_gloss);
  failed += run_criterion("derivation tables (7 V>N, 8 ADJ>V, 10 N>ADJ)",
                          criterion_derivation_tables);
  failed += run_criterion("ambiguity cardinalities over every golden stem",
                          criterion_ambiguity_cardinalities);
  failed += run_criterion("generator/analyzer inverse over all legal bundles",
                          criterion_generator_analyzer_inverse);
  failed += run_criterion("corpus format round trips and seeded split",
                          criterion_corpus_formats);
  failed += run_criterion("conjugation augmentation (10 -> 30, originals intact)",
                          criterion_conjugation_augmentation);
  failed += run_criterion("transliteration round trips and longest match",
                          criterion_transliteration);
  failed += run_criterion("tokenizer identity, vocab size, mask rate, pairs",
                          criterion_tokenizer);
  failed += run_criterion("CLI determinism sweep", criterion_determinism_sweep);

  std::cout << (failed == 0 ? "ALL CRITERIA PASSED"
                            : std::to_string(failed) + " CRITERIA FAILED")
            << "\n";
  return failed;
}
