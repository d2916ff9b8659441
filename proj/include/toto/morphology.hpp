#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toto/lexicon.hpp"

namespace toto {

// Fixed affix position order per word class.
struct Slot {
  std::string name;
  std::vector<MorphCategory> allowed;
  int index;
};

// Noun/pronoun: STEM . PL . DEF . CASE, all optional.
// Verb: STEM . ASPECT . TAM . EMPH, all optional (bare stem reads imperative).
// Other classes take no affixes.
const std::vector<Slot>& slot_template(WordClass c);

// slot name -> category. At most one category per slot; CASE=NOM is
// normalized to "unmarked" (the null morpheme carries no feature key).
class FeatureBundle {
 public:
  FeatureBundle() = default;

  // Builds from a category list, resolving each to its slot for the
  // given class. Two categories in one slot -> FeatureConflict; a
  // category with no slot in the class's template -> WordClassMismatch.
  static FeatureBundle from_categories(WordClass c,
                                       const std::vector<MorphCategory>& cats);

  void set(const std::string& slot, MorphCategory cat);
  std::optional<MorphCategory> get(const std::string& slot) const;
  const std::map<std::string, MorphCategory>& slots() const { return slots_; }
  bool operator==(const FeatureBundle& o) const { return slots_ == o.slots_; }

  std::string canonical() const;  // "aspect=PROG;tam=PRS" (slot order)

 private:
  std::map<std::string, MorphCategory> slots_;
};

struct Segment {
  std::string surface;  // "∅" for an explicit null NOM piece
  std::string morph_id; // morpheme id, or "stem"
  std::string gloss;
  MorphCategory category = MorphCategory::Stem;
};

struct Analysis {
  std::string token;  // concatenation of pieces (hyphens removed)
  std::vector<Segment> segments;
  FeatureBundle features;
  const LexicalEntry* stem = nullptr;  // null when hypothesized
  std::string hypothesized_lemma;      // set when stem == nullptr
  bool unattested_combination = false; // DEF+PL, permitted but flagged

  bool hypothesized() const { return stem == nullptr; }
  size_t affix_count() const;
  std::string gloss_line() const;      // glosses joined with '-'
};

// Hyphen-joined surface pieces; concatenation minus hyphens == token.
std::string segment_string(const Analysis& a);

struct AnalyzeOptions {
  bool hypothesize_stems = false;
};

// Every analysis consistent with some slot template. Ordering: known
// stem before hypothesized; fewer affixes first; then lexicographic by
// gloss line; then by feature bundle. Deterministic.
std::vector<Analysis> analyze(const Lexicon& lex, std::string_view token,
                              const AnalyzeOptions& opts = {});

// Pre-segmented variant: pieces[0] is the stem, later pieces one
// morpheme each ("∅" marks the null NOM). Used for hinted input.
std::vector<Analysis> analyze_pieces(const Lexicon& lex,
                                     const std::vector<std::string>& pieces,
                                     const AnalyzeOptions& opts = {});

struct GenerateOptions {
  std::string tense_exponent = "na";  // "na" or "mi" for PRS/PST
  bool imp_ko = false;                // emit -ko for IMP instead of bare stem
  // Per-category allomorph override; must name one of the morpheme's
  // attested allomorphs.
  std::map<MorphCategory, std::string> allomorphs;
};

std::string generate(const Lexicon& lex, const LexicalEntry& stem,
                     const FeatureBundle& features,
                     const GenerateOptions& opts = {});

struct DerivationRule {
  WordClass source;
  WordClass target;
  std::vector<std::string> suffixes;  // ordered; first is the default
};

const std::vector<DerivationRule>& derivation_rules();

struct DerivedEntry {
  std::string surface;
  WordClass word_class;
  std::string gloss_en;
};

// Lexicalized pair wins over the productive rule.
DerivedEntry derive(const Lexicon& lex, const LexicalEntry& entry,
                    WordClass target);

// All legal feature bundles for a word class (exhaustive slot-value
// product; unmarked allowed in every slot).
std::vector<FeatureBundle> enumerate_bundles(WordClass c);

}  // namespace toto
