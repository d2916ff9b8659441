#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toto/corpus.hpp"
#include "toto/lexicon.hpp"
#include "toto/morphology.hpp"

namespace toto {

struct IgtToken {
  std::vector<std::string> pieces;   // hyphen-segmented surface
  std::vector<std::string> glosses;  // aligned 1:1 with pieces
  bool resolved = true;
  std::vector<std::string> alternatives;  // full gloss lines, emit_all only

  std::string surface() const;  // pieces joined with '-'
  std::string gloss() const;    // glosses joined with '-'
};

struct Igt {
  std::vector<IgtToken> tokens;
  std::string translation;
  std::vector<size_t> unresolved;  // token indices with zero analyses

  bool empty() const { return tokens.empty(); }
  std::string surface_line() const;  // tokens joined with single spaces
  std::string gloss_line() const;
};

struct GlossOptions {
  // Force the reading of tense-ambiguous (-mi/-na) tokens.
  std::optional<MorphCategory> force_tense;
  bool emit_all = false;  // record alternative gloss lines per token
  std::string translation;
};

// Whitespace tokenization; hyphenated tokens are segmentation hints
// constraining analyze. Tokens with no analysis appear verbatim with
// gloss "???" and are listed in unresolved.
Igt gloss_sentence(const Lexicon& lex, std::string_view sentence,
                   const GlossOptions& opts = {});

// Monospace block: aligned surface/gloss rows plus a quoted
// translation line when present. Deterministic.
std::string format_igt(const Igt& igt, size_t min_col_gap = 2);

struct BatchGlossOptions {
  // Per-entry forced tense readings (transcription metadata), keyed by
  // entry id.
  std::map<std::string, MorphCategory> tense_overrides;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

struct BatchGlossIssue {
  std::string entry_id;
  std::vector<std::string> unresolved_tokens;
};

struct BatchGlossResult {
  std::vector<Igt> igts;  // corpus order
  std::vector<BatchGlossIssue> issues;
  size_t tokens_total = 0;
  size_t tokens_resolved = 0;
  double resolution_rate = 1.0;
};

BatchGlossResult batch_gloss(const Lexicon& lex, const Corpus& corpus,
                             const BatchGlossOptions& opts = {});

}  // namespace toto
