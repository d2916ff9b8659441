#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toto/corpus.hpp"
#include "toto/error.hpp"
#include "toto/gloss.hpp"
#include "toto/lexicon.hpp"
#include "toto/morphology.hpp"
#include "toto/tokenizer.hpp"
#include "toto/translit.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace toto;

struct Config {
  std::string lexicon;
  std::string table;
  std::string format = "json";
  bool json_output = false;
};

// TOTO_CONFIG points at a JSON file in the corpus structured dialect:
// {"lexicon": ..., "table": ..., "format": ...}. Flags override it.
Config load_config() {
  Config cfg;
  const char* path = std::getenv("TOTO_CONFIG");
  if (!path) return cfg;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, std::string("cannot open config '") + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    fail(ErrorKind::Parse, std::string("bad config: ") + ex.what());
  }
  cfg.lexicon = j.value("lexicon", "");
  cfg.table = j.value("table", "");
  cfg.format = j.value("format", "json");
  return cfg;
}

Lexicon need_lexicon(const Config& cfg) {
  if (cfg.lexicon.empty())
    fail(ErrorKind::Argument,
         "no lexicon given (use --lexicon or a TOTO_CONFIG file)");
  return Lexicon::load_file(cfg.lexicon);
}

const LexicalEntry* find_stem(const Lexicon& lex, const std::string& lemma,
                              const std::string& cls) {
  auto hits = lex.lookup_stem(lemma);
  if (!cls.empty()) {
    WordClass wc = word_class_from(cls);
    for (const auto* e : hits)
      if (e->word_class == wc) return e;
    fail(ErrorKind::Argument,
         "stem '" + lemma + "' not found with class " + cls);
  }
  if (hits.empty()) fail(ErrorKind::Argument, "stem '" + lemma + "' not found");
  if (hits.size() > 1)
    fail(ErrorKind::Argument,
         "stem '" + lemma + "' is ambiguous; pass --class");
  return hits[0];
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
  out << content;
}

json igt_to_json(const Igt& igt) {
  json j = json::object();
  json toks = json::array();
  for (const auto& t : igt.tokens) {
    json tok = json::object();
    tok["surface"] = t.surface();
    tok["gloss"] = t.gloss();
    tok["resolved"] = t.resolved;
    if (!t.alternatives.empty()) tok["alternatives"] = t.alternatives;
    toks.push_back(tok);
  }
  j["tokens"] = toks;
  j["surface_line"] = igt.surface_line();
  j["gloss_line"] = igt.gloss_line();
  if (!igt.translation.empty()) j["translation"] = igt.translation;
  j["unresolved"] = igt.unresolved;
  return j;
}

void report_to_stream(const ValidationReport& report, bool as_json,
                      std::ostream& out) {
  if (as_json) {
    json j = json::object();
    j["pass"] = report.pass;
    json issues = json::array();
    for (const auto& i : report.issues)
      issues.push_back({{"entry", i.entry_id},
                        {"type", i.type},
                        {"severity",
                         i.severity == Severity::Error ? "ERROR" : "WARNING"},
                        {"detail", i.detail}});
    j["issues"] = issues;
    j["counts"] = report.counts_by_type;
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& i : report.issues)
    out << (i.severity == Severity::Error ? "ERROR" : "WARNING") << "\t"
        << i.entry_id << "\t" << i.type << "\t" << i.detail << "\n";
  for (const auto& [type, n] : report.counts_by_type)
    out << "count\t" << type << "\t" << n << "\n";
  out << (report.pass ? "PASS" : "FAIL") << "\n";
}

int run(int argc, char** argv) {
  Config cfg = load_config();

  CLI::App app{"Toto language workbench"};
  app.require_subcommand(1);
  app.add_option("--lexicon", cfg.lexicon, "lexicon document path");
  app.add_option("--table", cfg.table, "transliteration table path");
  app.add_flag("--json", cfg.json_output, "structured JSON output");

  // analyze <token>
  auto* cmd_analyze = app.add_subcommand("analyze", "segment a surface token");
  std::string an_token;
  bool an_hyp = false;
  cmd_analyze->add_option("token", an_token)->required();
  cmd_analyze->add_flag("--hypothesize", an_hyp, "allow unknown stems");

  // generate <stem> <features>
  auto* cmd_generate = app.add_subcommand("generate", "inflect a stem");
  std::string gen_stem, gen_features, gen_class;
  bool gen_mi = false, gen_impko = false;
  cmd_generate->add_option("stem", gen_stem)->required();
  cmd_generate->add_option("features", gen_features,
                           "comma list, e.g. PFV,FUT (empty: bare stem)");
  cmd_generate->add_option("--class", gen_class, "word class of the stem");
  cmd_generate->add_flag("--use-mi", gen_mi, "realize PRS/PST as -mi");
  cmd_generate->add_flag("--imp-ko", gen_impko, "realize IMP as -ko");

  // derive <stem> <class>
  auto* cmd_derive = app.add_subcommand("derive", "derive a new word class");
  std::string der_stem, der_target, der_class;
  cmd_derive->add_option("stem", der_stem)->required();
  cmd_derive->add_option("target", der_target)->required();
  cmd_derive->add_option("--class", der_class, "word class of the stem");

  // gloss <sentence|file>
  auto* cmd_gloss = app.add_subcommand("gloss", "interlinear gloss");
  std::string gl_sentence, gl_file, gl_force, gl_translation;
  bool gl_all = false;
  size_t gl_gap = 2;
  cmd_gloss->add_option("sentence", gl_sentence);
  cmd_gloss->add_option("--file", gl_file, "gloss each line of a file");
  cmd_gloss->add_option("--force-tense", gl_force, "PRS|PST");
  cmd_gloss->add_option("--translation", gl_translation);
  cmd_gloss->add_flag("--all", gl_all, "list alternative readings");
  cmd_gloss->add_option("--gap", gl_gap, "minimum column gap");

  // translit
  auto* cmd_translit = app.add_subcommand("translit", "apply a mapping table");
  std::string tr_text, tr_file, tr_out;
  bool tr_to_script = false, tr_to_roman = false;
  cmd_translit->add_option("text", tr_text);
  cmd_translit->add_option("--file", tr_file);
  cmd_translit->add_option("-o,--output", tr_out);
  cmd_translit->add_flag("--to-script", tr_to_script);
  cmd_translit->add_flag("--to-roman", tr_to_roman);

  // corpus ...
  auto* cmd_corpus = app.add_subcommand("corpus", "corpus management");
  cmd_corpus->require_subcommand(1);
  std::string co_in, co_out, co_from, co_to, co_ratios = "0.8,0.1,0.1";
  std::string co_strategies;
  uint64_t co_seed = 0;
  bool co_legacy = false;
  auto* cmd_validate = cmd_corpus->add_subcommand("validate");
  cmd_validate->add_option("-i,--input", co_in)->required();
  auto* cmd_convert = cmd_corpus->add_subcommand("convert");
  cmd_convert->add_option("-i,--input", co_in)->required();
  cmd_convert->add_option("--from", co_from, "json|tsv (default: config format)");
  cmd_convert->add_option("--to", co_to)->required();
  cmd_convert->add_option("-o,--output", co_out)->required();
  cmd_convert->add_flag("--legacy", co_legacy, "strict unescaped tabular");
  auto* cmd_split = cmd_corpus->add_subcommand("split");
  cmd_split->add_option("-i,--input", co_in)->required();
  cmd_split->add_option("--ratios", co_ratios, "train,val,test");
  cmd_split->add_option("--seed", co_seed)->required();
  cmd_split->add_option("-o,--output", co_out, "output prefix")->required();
  auto* cmd_augment = cmd_corpus->add_subcommand("augment");
  cmd_augment->add_option("-i,--input", co_in)->required();
  cmd_augment->add_option("--strategies", co_strategies)->required();
  cmd_augment->add_option("--seed", co_seed)->required();
  cmd_augment->add_option("-o,--output", co_out)->required();
  auto* cmd_stats = cmd_corpus->add_subcommand("stats");
  cmd_stats->add_option("-i,--input", co_in)->required();

  // tok ...
  auto* cmd_tok = app.add_subcommand("tok", "subword tokenizer");
  cmd_tok->require_subcommand(1);
  std::string tk_in, tk_out, tk_model, tk_text, tk_direction;
  size_t tk_vocab = 0;
  uint64_t tk_seed = 0;
  double tk_rate = 0.15;
  std::vector<int> tk_ids;
  auto* cmd_train = cmd_tok->add_subcommand("train");
  cmd_train->add_option("-i,--input", tk_in, "corpus (all three columns)")
      ->required();
  cmd_train->add_option("--vocab-size", tk_vocab)->required();
  cmd_train->add_option("--seed", tk_seed)->required();
  cmd_train->add_option("-o,--output", tk_out)->required();
  auto* cmd_encode = cmd_tok->add_subcommand("encode");
  cmd_encode->add_option("--model", tk_model)->required();
  cmd_encode->add_option("text", tk_text)->required();
  auto* cmd_decode = cmd_tok->add_subcommand("decode");
  cmd_decode->add_option("--model", tk_model)->required();
  cmd_decode->add_option("ids", tk_ids)->required();
  auto* cmd_mlm = cmd_tok->add_subcommand("mlm-prep");
  cmd_mlm->add_option("--model", tk_model)->required();
  cmd_mlm->add_option("--rate", tk_rate);
  cmd_mlm->add_option("--seed", tk_seed)->required();
  cmd_mlm->add_option("-i,--input", tk_in, "corpus; masks the Toto column")
      ->required();
  cmd_mlm->add_option("-o,--output", tk_out)->required();
  auto* cmd_pairs = cmd_tok->add_subcommand("pairs");
  cmd_pairs->add_option("-i,--input", tk_in)->required();
  cmd_pairs->add_option("--direction", tk_direction, "to-en|to-bn|en-to|bn-to")
      ->required();
  cmd_pairs->add_option("-o,--output", tk_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    std::cerr << app.help();
    return 2;
  }

  const CorpusFormat fmt = format_from(cfg.format);

  if (cmd_analyze->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    AnalyzeOptions opts;
    opts.hypothesize_stems = an_hyp;
    auto analyses = analyze(lex, an_token, opts);
    if (cfg.json_output) {
      json arr = json::array();
      for (const auto& a : analyses)
        arr.push_back({{"segments", segment_string(a)},
                       {"gloss", a.gloss_line()},
                       {"features", a.features.canonical()},
                       {"hypothesized", a.hypothesized()}});
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& a : analyses)
        std::cout << segment_string(a) << "  " << a.gloss_line() << "\n";
    }
    return 0;
  }

  if (cmd_generate->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    const LexicalEntry* stem = find_stem(lex, gen_stem, gen_class);
    std::vector<MorphCategory> cats;
    for (const auto& t : split_list(gen_features))
      if (!t.empty()) cats.push_back(category_from(t));
    FeatureBundle bundle = FeatureBundle::from_categories(stem->word_class, cats);
    GenerateOptions opts;
    if (gen_mi) opts.tense_exponent = "mi";
    opts.imp_ko = gen_impko;
    std::cout << generate(lex, *stem, bundle, opts) << "\n";
    return 0;
  }

  if (cmd_derive->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    const LexicalEntry* stem = find_stem(lex, der_stem, der_class);
    DerivedEntry d = derive(lex, *stem, word_class_from(der_target));
    std::cout << d.surface << "\t" << to_string(d.word_class) << "\t"
              << d.gloss_en << "\n";
    return 0;
  }

  if (cmd_gloss->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    GlossOptions opts;
    if (!gl_force.empty()) opts.force_tense = category_from(gl_force);
    opts.emit_all = gl_all;
    opts.translation = gl_translation;
    std::vector<std::string> sentences;
    if (!gl_file.empty()) {
      std::istringstream in(slurp(gl_file));
      std::string line;
      while (std::getline(in, line)) sentences.push_back(line);
    } else {
      sentences.push_back(gl_sentence);
    }
    for (const auto& s : sentences) {
      Igt igt = gloss_sentence(lex, s, opts);
      if (cfg.json_output) {
        std::cout << igt_to_json(igt).dump(2) << "\n";
      } else {
        std::cout << format_igt(igt, gl_gap);
        if (gl_all)
          for (const auto& t : igt.tokens)
            if (t.alternatives.size() > 1) {
              std::cout << "# " << t.surface() << ":";
              for (const auto& alt : t.alternatives) std::cout << " " << alt;
              std::cout << "\n";
            }
      }
    }
    return 0;
  }

  if (cmd_translit->parsed()) {
    if (cfg.table.empty())
      fail(ErrorKind::Argument, "no table given (use --table)");
    if (tr_to_script == tr_to_roman)
      fail(ErrorKind::Argument, "pass exactly one of --to-script/--to-roman");
    TransliterationTable table = TransliterationTable::load_file(cfg.table);
    std::string text = !tr_file.empty() ? slurp(tr_file) : tr_text;
    TranslitResult res =
        tr_to_script ? table.to_script(text) : table.to_roman(text);
    if (!tr_out.empty()) {
      spill(tr_out, res.text);
      std::cout << "passthrough: " << res.passthrough << "\n";
    } else {
      std::cout << res.text << "\n";
      std::cerr << "passthrough: " << res.passthrough << "\n";
    }
    return 0;
  }

  if (cmd_validate->parsed()) {
    Corpus c = read_corpus_file(co_in, fmt);
    ValidationReport report = validate(c);
    report_to_stream(report, cfg.json_output, std::cout);
    return report.pass ? 0 : 1;
  }

  if (cmd_convert->parsed()) {
    const CorpusFormat from = co_from.empty() ? fmt : format_from(co_from);
    Corpus c = read_corpus_file(co_in, from);
    WriteNotice notice;
    WriteOptions wopts;
    wopts.legacy_tabular = co_legacy;
    spill(co_out, write_corpus(c, format_from(co_to), &notice, wopts));
    for (const auto& d : notice.dropped)
      std::cerr << "notice: dropped " << d << "\n";
    std::cout << "wrote " << c.entries.size() << " entries to " << co_out
              << "\n";
    return 0;
  }

  if (cmd_split->parsed()) {
    auto parts = split_list(co_ratios);
    if (parts.size() != 3)
      fail(ErrorKind::Argument, "--ratios needs train,val,test");
    double r[3];
    try {
      for (int i = 0; i < 3; ++i) r[i] = std::stod(parts[i]);
    } catch (...) {
      fail(ErrorKind::Argument, "bad ratio in '" + co_ratios + "'");
    }
    Corpus c = read_corpus_file(co_in, fmt);
    auto out = split(c, r[0], r[1], r[2], co_seed);
    std::cerr << "seed: " << co_seed << "\n";
    const char* names[3] = {"train", "val", "test"};
    for (int i = 0; i < 3; ++i) {
      const std::string path = co_out + "." + names[i] +
                               (fmt == CorpusFormat::Structured ? ".json" : ".tsv");
      spill(path, write_corpus(out[i], fmt));
      std::cout << names[i] << "\t" << out[i].entries.size() << "\t" << path
                << "\n";
    }
    return 0;
  }

  if (cmd_augment->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    Corpus c = read_corpus_file(co_in, fmt);
    std::set<Strategy> strategies;
    for (const auto& t : split_list(co_strategies))
      if (!t.empty()) strategies.insert(strategy_from(t));
    Corpus out = augment(c, lex, strategies, co_seed);
    std::cerr << "seed: " << co_seed << "\n";
    spill(co_out, write_corpus(out, fmt));
    std::cout << "entries: " << c.entries.size() << " -> "
              << out.entries.size() << "\n";
    return 0;
  }

  if (cmd_stats->parsed()) {
    Lexicon lex = need_lexicon(cfg);
    Corpus c = read_corpus_file(co_in, fmt);
    CorpusStats st = stats(c, lex);
    if (cfg.json_output) {
      json j = json::object();
      j["entries"] = st.entry_count;
      j["tokens"] = st.token_counts;
      j["type_token_ratio"] = st.type_token_ratio;
      json freq = json::object();
      for (const auto& [cat, n] : st.category_freq) freq[to_string(cat)] = n;
      j["category_freq"] = freq;
      j["coverage"] = st.coverage;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "entries\t" << st.entry_count << "\n";
      for (const auto& [lang, n] : st.token_counts)
        std::cout << "tokens." << lang << "\t" << n << "\n";
      for (const auto& [lang, r] : st.type_token_ratio)
        std::cout << "ttr." << lang << "\t" << r << "\n";
      for (const auto& [cat, n] : st.category_freq)
        std::cout << "freq." << to_string(cat) << "\t" << n << "\n";
      std::cout << "coverage\t" << st.coverage << "\n";
    }
    return 0;
  }

  if (cmd_train->parsed()) {
    Corpus c = read_corpus_file(tk_in, fmt);
    std::vector<std::string> texts;
    for (const auto& e : c.entries) {
      texts.push_back(e.toto);
      texts.push_back(e.bangla);
      texts.push_back(e.english);
    }
    SubwordModel m = train_subword(texts, tk_vocab, tk_seed);
    std::cerr << "seed: " << tk_seed << "\n";
    m.save_file(tk_out);
    std::cout << "vocab: " << m.vocab_size() << "\tmerges: "
              << m.merges().size() << "\n";
    return 0;
  }

  if (cmd_encode->parsed()) {
    SubwordModel m = SubwordModel::load_file(tk_model);
    auto ids = encode(m, tk_text);
    for (size_t i = 0; i < ids.size(); ++i)
      std::cout << (i ? " " : "") << ids[i];
    std::cout << "\n";
    return 0;
  }

  if (cmd_decode->parsed()) {
    SubwordModel m = SubwordModel::load_file(tk_model);
    std::cout << decode(m, tk_ids) << "\n";
    return 0;
  }

  if (cmd_mlm->parsed()) {
    SubwordModel m = SubwordModel::load_file(tk_model);
    Corpus c = read_corpus_file(tk_in, fmt);
    std::cerr << "seed: " << tk_seed << "\n";
    std::ostringstream out;
    uint64_t k = 0;
    for (const auto& e : c.entries) {
      auto ids = encode(m, e.toto);
      MaskedBatch b = make_mlm_examples(m, ids, tk_rate, tk_seed + k++);
      json j = json::object();
      j["id"] = e.id;
      j["input"] = b.input;
      j["labels"] = b.labels;
      j["positions"] = b.positions;
      out << j.dump() << "\n";
    }
    spill(tk_out, out.str());
    std::cout << "examples: " << c.entries.size() << "\n";
    return 0;
  }

  if (cmd_pairs->parsed()) {
    Corpus c = read_corpus_file(tk_in, fmt);
    spill(tk_out, emit_translation_pairs(c, direction_from(tk_direction)));
    std::cout << "pairs: " << c.entries.size() << "\n";
    return 0;
  }

  std::cerr << "error: usage: no subcommand\n" << app.help();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::Argument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}
