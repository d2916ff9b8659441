#include "toto/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toto/morphology.hpp"
#include "toto/rng.hpp"
#include "toto/translit.hpp"
#include "toto/utf8.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace toto {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string default_id(size_t index_1based) {
  return "e" + std::to_string(index_1based);
}

const char* kEntryKeys[] = {"id",        "toto", "bangla",     "english",
                            "morphemes", "pos",  "boundaries", "augmented",
                            "provenance"};

CorpusEntry entry_from_json(const json& j, size_t index,
                            ReadNotice* notice) {
  if (!j.is_object())
    fail(ErrorKind::Parse,
         "entry " + std::to_string(index + 1) + " is not an object");
  CorpusEntry e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (std::none_of(std::begin(kEntryKeys), std::end(kEntryKeys),
                     [&](const char* k) { return key == k; })) {
      if (notice)
        notice->warnings.push_back("entry " + std::to_string(index + 1) +
                                   ": unknown key '" + key + "' ignored");
    }
  }
  for (const char* req : {"toto", "bangla", "english"})
    if (!j.contains(req))
      fail(ErrorKind::Parse, "entry " + std::to_string(index + 1) +
                                 ": missing required key '" + req + "'");
  e.toto = j.at("toto").get<std::string>();
  e.bangla = j.at("bangla").get<std::string>();
  e.english = j.at("english").get<std::string>();
  e.id = j.value("id", default_id(index + 1));
  e.augmented = j.value("augmented", false);
  e.provenance = j.value("provenance", "");
  if (j.contains("morphemes"))
    for (const auto& m : j.at("morphemes"))
      e.morphemes.push_back({m.value("seg", ""), m.value("gloss", "")});
  if (j.contains("pos"))
    for (const auto& p : j.at("pos")) e.pos.push_back(p.get<std::string>());
  if (j.contains("boundaries"))
    for (const auto& b : j.at("boundaries")) e.boundaries.push_back(b.get<int>());
  return e;
}

json entry_to_json(const CorpusEntry& e) {
  json j = json::object();
  j["id"] = e.id;
  j["toto"] = e.toto;
  j["bangla"] = e.bangla;
  j["english"] = e.english;
  if (!e.morphemes.empty()) {
    json arr = json::array();
    for (const auto& m : e.morphemes)
      arr.push_back({{"seg", m.seg}, {"gloss", m.gloss}});
    j["morphemes"] = arr;
  }
  if (!e.pos.empty()) j["pos"] = e.pos;
  if (!e.boundaries.empty()) j["boundaries"] = e.boundaries;
  if (e.augmented) j["augmented"] = true;
  if (!e.provenance.empty()) j["provenance"] = e.provenance;
  return j;
}

std::string escape_tsv(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_tsv(const std::string& s, size_t lineno) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (i + 1 >= s.size())
      fail(ErrorKind::Parse,
           "line " + std::to_string(lineno) + ": dangling backslash");
    const char n = s[++i];
    if (n == '\\') out.push_back('\\');
    else if (n == 't') out.push_back('\t');
    else if (n == 'n') out.push_back('\n');
    else
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                 ": unknown escape '\\" + n + "'");
  }
  return out;
}

bool in_toto_block(char32_t cp) { return cp >= 0x1E290 && cp <= 0x1E2BF; }

template <typename F>
void for_each_entry(size_t n, ExecutionPolicy policy, F&& f) {
#if defined(_OPENMP)
  if (policy == ExecutionPolicy::Parallel) {
    const auto nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < nn; ++i) f(static_cast<size_t>(i));
    return;
  }
#endif
  (void)policy;
  for (size_t i = 0; i < n; ++i) f(i);
}

}  // namespace

CorpusFormat format_from(std::string_view tag) {
  if (tag == "json" || tag == "structured") return CorpusFormat::Structured;
  if (tag == "tsv" || tag == "tabular") return CorpusFormat::Tabular;
  fail(ErrorKind::Argument, "unknown corpus format '" + std::string(tag) + "'");
}

Corpus read_corpus(std::istream& in, CorpusFormat fmt, ReadNotice* notice) {
  Corpus c;
  if (fmt == CorpusFormat::Structured) {
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      fail(ErrorKind::Parse, std::string("bad structured document: ") + ex.what());
    }
    const json* entries = nullptr;
    if (j.is_array()) {
      entries = &j;
    } else if (j.is_object()) {
      c.name = j.value("name", "");
      c.version = j.value("version", "");
      c.created = j.value("created", "");
      if (!j.contains("entries") || !j.at("entries").is_array())
        fail(ErrorKind::Parse, "structured document has no 'entries' array");
      entries = &j.at("entries");
    } else {
      fail(ErrorKind::Parse, "structured document must be an object or array");
    }
    size_t i = 0;
    for (const auto& je : *entries)
      c.entries.push_back(entry_from_json(je, i++, notice));
  } else {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto cols = split_on(line, '\t');
      if (cols.size() != 3)
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 3 "
                               "tab-separated columns, got " +
                                   std::to_string(cols.size()));
      CorpusEntry e;
      e.toto = unescape_tsv(cols[0], lineno);
      e.bangla = unescape_tsv(cols[1], lineno);
      e.english = unescape_tsv(cols[2], lineno);
      e.id = default_id(c.entries.size() + 1);
      c.entries.push_back(std::move(e));
    }
  }

  std::set<std::string> ids;
  for (const auto& e : c.entries)
    if (!ids.insert(e.id).second)
      fail(ErrorKind::Parse, "duplicate entry id '" + e.id + "'");
  return c;
}

Corpus read_corpus_file(const std::string& path, CorpusFormat fmt,
                        ReadNotice* notice) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open corpus '" + path + "'");
  return read_corpus(in, fmt, notice);
}

std::string write_corpus(const Corpus& c, CorpusFormat fmt,
                         WriteNotice* notice, const WriteOptions& opts) {
  if (fmt == CorpusFormat::Structured) {
    json j = json::object();
    j["name"] = c.name;
    j["version"] = c.version;
    j["created"] = c.created;
    json arr = json::array();
    for (const auto& e : c.entries) arr.push_back(entry_to_json(e));
    j["entries"] = arr;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const auto& e : c.entries) {
    if (notice) {
      if (!e.morphemes.empty())
        notice->dropped.push_back(e.id + ": morphemes");
      if (!e.pos.empty()) notice->dropped.push_back(e.id + ": pos");
      if (!e.boundaries.empty())
        notice->dropped.push_back(e.id + ": boundaries");
      if (e.augmented) notice->dropped.push_back(e.id + ": augmented");
      if (!e.provenance.empty())
        notice->dropped.push_back(e.id + ": provenance");
      notice->dropped.push_back(e.id + ": id");
    }
    for (const std::string* f : {&e.toto, &e.bangla, &e.english}) {
      if (opts.legacy_tabular &&
          (f->find('\t') != std::string::npos ||
           f->find('\n') != std::string::npos))
        fail(ErrorKind::Argument,
             "entry " + e.id + ": field contains tab/newline, not "
             "representable in legacy tabular mode");
    }
    if (opts.legacy_tabular)
      out << e.toto << '\t' << e.bangla << '\t' << e.english << '\n';
    else
      out << escape_tsv(e.toto) << '\t' << escape_tsv(e.bangla) << '\t'
          << escape_tsv(e.english) << '\n';
  }
  return out.str();
}

ValidationReport validate(const Corpus& c, const ValidateConfig& cfg,
                          ExecutionPolicy policy) {
  std::vector<std::vector<ValidationIssue>> per_entry(c.entries.size());

  for_each_entry(c.entries.size(), policy, [&](size_t i) {
    const CorpusEntry& e = c.entries[i];
    auto& issues = per_entry[i];
    auto add = [&](const char* type, std::string detail, Severity sev) {
      issues.push_back({e.id, type, std::move(detail), sev});
    };

    for (const auto& [field, value] :
         std::initializer_list<std::pair<const char*, const std::string*>>{
             {"toto", &e.toto}, {"bangla", &e.bangla}, {"english", &e.english}})
      if (value->empty())
        add("missing-field", std::string(field) + " is empty", Severity::Error);

    const auto toks = whitespace_tokens(e.toto);
    if (!e.morphemes.empty() && e.morphemes.size() != toks.size())
      add("annotation",
          "morpheme annotations (" + std::to_string(e.morphemes.size()) +
              ") do not match token count (" + std::to_string(toks.size()) + ")",
          Severity::Error);
    if (!e.pos.empty() && e.pos.size() != toks.size())
      add("annotation",
          "pos tags (" + std::to_string(e.pos.size()) +
              ") do not match token count (" + std::to_string(toks.size()) + ")",
          Severity::Error);

    bool has_roman = false, has_script = false;
    size_t pos = 0;
    while (pos < e.toto.size()) {
      const char32_t cp = utf8::next(e.toto, pos);
      if (in_toto_block(cp)) has_script = true;
      else if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 0xC0 && cp <= 0x2AF) || (cp >= 0x1E00 && cp <= 0x1EFF))
        has_roman = true;
    }
    switch (cfg.script) {
      case ScriptExpectation::Any:
        if (has_roman && has_script)
          add("script", "mixed Roman and Toto-script text", Severity::Warning);
        break;
      case ScriptExpectation::Roman:
        if (has_script)
          add("script", "Toto-script characters in a Roman corpus",
              Severity::Warning);
        break;
      case ScriptExpectation::TotoScript:
        if (has_roman)
          add("script", "Roman characters in a Toto-script corpus",
              Severity::Warning);
        break;
    }

    const size_t en = whitespace_tokens(e.english).size();
    if (!toks.empty() && en > 0) {
      const double ratio = static_cast<double>(en) / toks.size();
      if (ratio < cfg.length_ratio_low || ratio > cfg.length_ratio_high) {
        std::ostringstream d;
        d << "en/toto token ratio " << ratio << " outside ["
          << cfg.length_ratio_low << ", " << cfg.length_ratio_high << "]";
        add("length-ratio", d.str(), Severity::Warning);
      }
    }
  });

  ValidationReport report;
  std::map<std::string, std::string> seen_triples;  // triple -> first id
  for (size_t i = 0; i < c.entries.size(); ++i) {
    for (auto& issue : per_entry[i]) report.issues.push_back(std::move(issue));
    const CorpusEntry& e = c.entries[i];
    const std::string triple = e.toto + "\x1f" + e.bangla + "\x1f" + e.english;
    auto [it, inserted] = seen_triples.emplace(triple, e.id);
    if (!inserted)
      report.issues.push_back({e.id, "duplicate",
                               "duplicates entry " + it->second,
                               Severity::Warning});
  }
  for (const auto& issue : report.issues) {
    ++report.counts_by_type[issue.type];
    if (issue.severity == Severity::Error) report.pass = false;
  }
  return report;
}

std::array<Corpus, 3> split(const Corpus& c, double train, double val,
                            double test, uint64_t seed) {
  if (train <= 0 || val <= 0 || test <= 0)
    fail(ErrorKind::Argument, "split ratios must be positive");
  if (std::abs(train + val + test - 1.0) > 1e-9)
    fail(ErrorKind::Argument, "split ratios must sum to 1");

  std::vector<size_t> order(c.entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  shuffle(order, rng);

  const size_t n = order.size();
  const size_t n_val = static_cast<size_t>(n * val);
  const size_t n_test = static_cast<size_t>(n * test);
  const size_t n_train = n - n_val - n_test;  // remainder goes to train

  std::array<Corpus, 3> out;
  for (auto& part : out) {
    part.name = c.name;
    part.version = c.version;
    part.created = c.created;
  }
  for (size_t i = 0; i < n; ++i) {
    const CorpusEntry& e = c.entries[order[i]];
    if (i < n_train) out[0].entries.push_back(e);
    else if (i < n_train + n_val) out[1].entries.push_back(e);
    else out[2].entries.push_back(e);
  }
  return out;
}

Strategy strategy_from(std::string_view tag) {
  if (tag == "synonym") return Strategy::Synonym;
  if (tag == "conjugation") return Strategy::Conjugation;
  if (tag == "reorder") return Strategy::Reorder;
  fail(ErrorKind::Argument, "unknown strategy '" + std::string(tag) + "'");
}

namespace {

const std::vector<MorphCategory> kTenses = {MorphCategory::Prs,
                                            MorphCategory::Pst,
                                            MorphCategory::Fut};

// Rebuilds the token in segmented form from an analysis of the
// generated surface (the analyzer/generator round trip guarantees one
// exists).
std::optional<Analysis> analysis_with(const Lexicon& lex,
                                      const std::string& surface,
                                      const LexicalEntry* stem,
                                      const FeatureBundle& features) {
  for (const auto& a : analyze(lex, surface))
    if (a.stem == stem && a.features == features) return a;
  return std::nullopt;
}

std::vector<CorpusEntry> conjugation_siblings(const Corpus& corpus,
                                              const CorpusEntry& e,
                                              const Lexicon& lex) {
  (void)corpus;
  std::vector<CorpusEntry> out;
  if (e.morphemes.empty()) return out;
  const auto tokens = whitespace_tokens(e.toto);
  if (e.morphemes.size() != tokens.size()) return out;

  for (size_t ti = 0; ti < tokens.size(); ++ti) {
    if (!e.pos.empty() && e.pos[ti] != "VERB") continue;
    const auto pieces = split_on(e.morphemes[ti].seg, '-');
    std::vector<Analysis> analyses;
    try {
      analyses = analyze_pieces(lex, pieces);
    } catch (const Error&) {
      continue;
    }
    const Analysis* chosen = nullptr;
    for (const auto& a : analyses)
      if (a.gloss_line() == e.morphemes[ti].gloss) { chosen = &a; break; }
    if (!chosen && !analyses.empty()) chosen = &analyses.front();
    if (!chosen || chosen->hypothesized()) continue;
    if (chosen->stem->word_class != WordClass::Verb) continue;
    auto tam = chosen->features.get("tam");
    if (!tam) continue;
    if (std::find(kTenses.begin(), kTenses.end(), *tam) == kTenses.end())
      continue;

    const bool hyphenated = tokens[ti].find('-') != std::string::npos;
    for (MorphCategory other : kTenses) {
      if (other == *tam) continue;
      FeatureBundle nb = chosen->features;
      nb.set("tam", other);
      std::string surface;
      try {
        surface = generate(lex, *chosen->stem, nb);
      } catch (const Error&) {
        continue;
      }
      auto na = analysis_with(lex, surface, chosen->stem, nb);
      if (!na) continue;

      CorpusEntry sib = e;
      sib.id = e.id + "#conj-" + gloss_label(other);
      sib.augmented = true;
      sib.provenance = "augment:conjugation";
      std::vector<std::string> new_tokens = tokens;
      new_tokens[ti] = hyphenated ? segment_string(*na) : surface;
      std::string joined;
      for (size_t i = 0; i < new_tokens.size(); ++i) {
        if (i) joined.push_back(' ');
        joined += new_tokens[i];
      }
      sib.toto = joined;
      sib.english = e.english + " [TENSE:" + gloss_label(other) + "]";
      sib.morphemes[ti] = {segment_string(*na), na->gloss_line()};
      out.push_back(std::move(sib));
    }
    break;  // one verb token per entry drives the paradigm
  }
  return out;
}

std::vector<CorpusEntry> synonym_siblings(const CorpusEntry& e,
                                          const Lexicon& lex, uint64_t seed) {
  std::vector<CorpusEntry> out;
  const auto tokens = whitespace_tokens(e.toto);

  struct Candidate {
    size_t token;
    const LexicalEntry* from;
    const LexicalEntry* to;
  };
  std::vector<Candidate> candidates;
  for (size_t ti = 0; ti < tokens.size(); ++ti) {
    const auto pieces = split_on(tokens[ti], '-');
    const std::string& stem_piece = pieces[0];
    for (const LexicalEntry* from : lex.lookup_stem(stem_piece)) {
      for (const auto& other : lex.entries()) {
        if (&other == from) continue;
        if (other.word_class != from->word_class) continue;
        if (other.gloss_en != from->gloss_en) continue;
        candidates.push_back({ti, from, &other});
      }
    }
  }
  if (candidates.empty()) return out;

  Rng rng = keyed_rng(seed, e.id + "|synonym");
  const Candidate& pick = candidates[rng.bounded(candidates.size())];

  std::vector<std::string> new_tokens = tokens;
  auto pieces = split_on(tokens[pick.token], '-');
  pieces[0] = pick.to->lemma;
  std::string rebuilt;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) rebuilt.push_back('-');
    rebuilt += pieces[i];
  }
  new_tokens[pick.token] = rebuilt;

  CorpusEntry sib = e;
  sib.id = e.id + "#syn";
  sib.augmented = true;
  sib.provenance = "augment:synonym";
  std::string joined;
  for (size_t i = 0; i < new_tokens.size(); ++i) {
    if (i) joined.push_back(' ');
    joined += new_tokens[i];
  }
  sib.toto = joined;
  if (!sib.morphemes.empty() && pick.token < sib.morphemes.size()) {
    auto seg = split_on(sib.morphemes[pick.token].seg, '-');
    seg[0] = pick.to->lemma;
    std::string s;
    for (size_t i = 0; i < seg.size(); ++i) {
      if (i) s.push_back('-');
      s += seg[i];
    }
    sib.morphemes[pick.token].seg = s;
  }
  out.push_back(std::move(sib));
  return out;
}

std::vector<CorpusEntry> reorder_siblings(const CorpusEntry& e, uint64_t seed) {
  std::vector<CorpusEntry> out;
  if (e.pos.empty()) return out;
  const auto tokens = whitespace_tokens(e.toto);
  if (e.pos.size() != tokens.size()) return out;

  auto adjunct = [&](size_t i) {
    return e.pos[i] == "ADV" || e.pos[i] == "ADVERB" || e.pos[i] == "ADJUNCT";
  };
  std::vector<size_t> pairs;
  for (size_t i = 0; i + 1 < tokens.size(); ++i)
    if (adjunct(i) && adjunct(i + 1)) pairs.push_back(i);
  if (pairs.empty()) return out;

  Rng rng = keyed_rng(seed, e.id + "|reorder");
  const size_t at = pairs[rng.bounded(pairs.size())];

  CorpusEntry sib = e;
  sib.id = e.id + "#reord";
  sib.augmented = true;
  sib.provenance = "augment:reorder";
  std::vector<std::string> new_tokens = tokens;
  std::swap(new_tokens[at], new_tokens[at + 1]);
  std::string joined;
  for (size_t i = 0; i < new_tokens.size(); ++i) {
    if (i) joined.push_back(' ');
    joined += new_tokens[i];
  }
  sib.toto = joined;
  std::swap(sib.pos[at], sib.pos[at + 1]);
  if (!sib.morphemes.empty() && at + 1 < sib.morphemes.size())
    std::swap(sib.morphemes[at], sib.morphemes[at + 1]);
  return {sib};
}

}  // namespace

Corpus augment(const Corpus& c, const Lexicon& lex,
               const std::set<Strategy>& strategies, uint64_t seed) {
  if (strategies.empty())
    fail(ErrorKind::Argument, "augment needs at least one strategy");
  if (strategies.count(Strategy::Conjugation)) {
    const bool any_annotated = std::any_of(
        c.entries.begin(), c.entries.end(),
        [](const CorpusEntry& e) { return e.has_morpheme_annotations(); });
    if (!any_annotated)
      fail(ErrorKind::StrategyInapplicable,
           "conjugation expansion needs morpheme annotations");
  }

  Corpus out;
  out.name = c.name;
  out.version = c.version;
  out.created = c.created;
  for (const auto& e : c.entries) {
    out.entries.push_back(e);
    if (strategies.count(Strategy::Conjugation))
      for (auto& sib : conjugation_siblings(c, e, lex))
        out.entries.push_back(std::move(sib));
    if (strategies.count(Strategy::Synonym))
      for (auto& sib : synonym_siblings(e, lex, seed))
        out.entries.push_back(std::move(sib));
    if (strategies.count(Strategy::Reorder))
      for (auto& sib : reorder_siblings(e, seed))
        out.entries.push_back(std::move(sib));
  }
  return out;
}

CorpusStats stats(const Corpus& c, const Lexicon& lex,
                  ExecutionPolicy policy) {
  CorpusStats st;
  st.entry_count = c.entries.size();

  struct Partial {
    size_t toto_tokens = 0, analyzable = 0;
    std::map<MorphCategory, size_t> freq;
  };
  std::vector<Partial> partials(c.entries.size());

  for_each_entry(c.entries.size(), policy, [&](size_t i) {
    Partial& p = partials[i];
    for (const auto& tok : whitespace_tokens(c.entries[i].toto)) {
      ++p.toto_tokens;
      std::vector<Analysis> analyses;
      try {
        if (tok.find('-') != std::string::npos)
          analyses = analyze_pieces(lex, split_on(tok, '-'));
        else
          analyses = analyze(lex, tok);
      } catch (const Error&) {
      }
      if (analyses.empty()) continue;
      ++p.analyzable;
      for (const auto& seg : analyses.front().segments) ++p.freq[seg.category];
    }
  });

  for (const auto& p : partials) {
    st.toto_tokens_total += p.toto_tokens;
    st.toto_tokens_analyzable += p.analyzable;
    for (const auto& [cat, n] : p.freq) st.category_freq[cat] += n;
  }
  st.coverage = st.toto_tokens_total == 0
                    ? 0.0
                    : static_cast<double>(st.toto_tokens_analyzable) /
                          st.toto_tokens_total;

  for (const auto& [lang, get] :
       std::initializer_list<std::pair<const char*, std::string CorpusEntry::*>>{
           {"toto", &CorpusEntry::toto},
           {"bangla", &CorpusEntry::bangla},
           {"english", &CorpusEntry::english}}) {
    size_t total = 0;
    std::set<std::string> types;
    for (const auto& e : c.entries)
      for (const auto& tok : whitespace_tokens(e.*get)) {
        ++total;
        types.insert(tok);
      }
    st.token_counts[lang] = total;
    st.type_token_ratio[lang] =
        total == 0 ? 0.0 : static_cast<double>(types.size()) / total;
  }
  return st;
}

}  // namespace toto
