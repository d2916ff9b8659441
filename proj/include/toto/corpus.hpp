#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toto/lexicon.hpp"

namespace toto {

enum class ExecutionPolicy { Serial, Parallel };

struct TokenAnnotation {
  std::string seg;    // hyphen-segmented surface, e.g. "ha-mi"
  std::string gloss;  // aligned glosses, e.g. "go-PRS"
};

struct CorpusEntry {
  std::string id;
  std::string toto;
  std::string bangla;
  std::string english;
  std::vector<TokenAnnotation> morphemes;  // optional, one per token
  std::vector<std::string> pos;            // optional, one per token
  std::vector<int> boundaries;             // optional clause-boundary indices
  bool augmented = false;
  std::string provenance;

  bool has_morpheme_annotations() const { return !morphemes.empty(); }
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::string name;
  std::string version;
  std::string created;
};

enum class CorpusFormat { Structured, Tabular };
CorpusFormat format_from(std::string_view tag);  // "json"/"structured", "tsv"/"tabular"

struct ReadNotice {
  std::vector<std::string> warnings;  // unknown keys etc.
};

Corpus read_corpus(std::istream& in, CorpusFormat fmt,
                   ReadNotice* notice = nullptr);
Corpus read_corpus_file(const std::string& path, CorpusFormat fmt,
                        ReadNotice* notice = nullptr);

struct WriteNotice {
  std::vector<std::string> dropped;  // fields lost by the tabular form
};

struct WriteOptions {
  // Strict legacy tabular mode: fields containing tab/newline are a
  // write error instead of being backslash-escaped.
  bool legacy_tabular = false;
};

std::string write_corpus(const Corpus& c, CorpusFormat fmt,
                         WriteNotice* notice = nullptr,
                         const WriteOptions& opts = {});

enum class Severity { Warning, Error };

struct ValidationIssue {
  std::string entry_id;
  std::string type;  // missing-field, duplicate, script, annotation, length-ratio
  std::string detail;
  Severity severity = Severity::Warning;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::map<std::string, size_t> counts_by_type;
  bool pass = true;  // true iff zero ERROR issues
};

enum class ScriptExpectation { Any, Roman, TotoScript };

struct ValidateConfig {
  ScriptExpectation script = ScriptExpectation::Any;
  double length_ratio_low = 0.3;
  double length_ratio_high = 3.0;
};

ValidationReport validate(const Corpus& c, const ValidateConfig& cfg = {},
                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Seeded shuffle then contiguous cut; val/test get floor(n*ratio),
// the remainder goes to train. Outputs partition the input.
std::array<Corpus, 3> split(const Corpus& c, double train, double val,
                            double test, uint64_t seed);

enum class Strategy { Synonym, Conjugation, Reorder };
Strategy strategy_from(std::string_view tag);

Corpus augment(const Corpus& c, const Lexicon& lex,
               const std::set<Strategy>& strategies, uint64_t seed);

struct CorpusStats {
  size_t entry_count = 0;
  std::map<std::string, size_t> token_counts;       // per language
  std::map<std::string, double> type_token_ratio;   // per language
  std::map<MorphCategory, size_t> category_freq;    // top-ranked analyses
  size_t toto_tokens_total = 0;
  size_t toto_tokens_analyzable = 0;
  double coverage = 0.0;
};

CorpusStats stats(const Corpus& c, const Lexicon& lex,
                  ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace toto
