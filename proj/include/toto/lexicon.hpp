#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toto/error.hpp"

namespace toto {

enum class WordClass {
  Noun,
  Pronoun,
  Verb,
  Adjective,
  Adverb,
  Numeral,
  Particle,
};

// Closed category set; unknown tags are rejected at load time.
enum class MorphCategory {
  Stem,
  Pl,
  Prs,
  Pst,
  Fut,
  Prog,
  Pfv,
  Hab,
  Imp,
  Nom,
  Acc,
  Gen,
  Dat,
  Loc,
  Inst,
  Abl,
  Def,
  Emph,
  DerivAdj2V,
  DerivV2N,
  DerivN2Adj,
};

const char* to_string(WordClass c);
const char* to_string(MorphCategory c);
WordClass word_class_from(std::string_view tag);              // throws Schema
MorphCategory category_from(std::string_view tag);            // throws Schema
const char* gloss_label(MorphCategory c);                     // paper label (INST -> "INS")

struct Allomorph {
  std::string surface;       // empty only for the NOM null allomorph
  std::string ipa;           // optional
  std::string conditioning;  // optional free-text note
};

struct Morpheme {
  std::string id;
  std::vector<MorphCategory> categories;  // 1..n categories this form realizes
  std::map<MorphCategory, std::string> gloss_labels;
  std::vector<Allomorph> allomorphs;      // ordered; first = generation default
  std::set<WordClass> attaches_to;
  int slot = 0;  // index in the owning word class's slot template
};

struct DerivedPair {
  WordClass target;
  std::string surface;
  std::string gloss_en;
};

struct LexicalEntry {
  std::string lemma;  // Romanized, canonical internal representation
  std::string ipa;    // optional
  WordClass word_class = WordClass::Noun;
  std::string gloss_en;
  std::string gloss_bn;                 // optional
  std::string prog_allomorph = "daŋ";   // verbs only
  std::string pinned_deriv_allomorph;   // optional: productive-rule allomorph override
  std::string agent_gloss;              // optional V->N gloss override
  std::string verbal_gloss;             // optional ADJ->V gloss override
  std::string variant;                  // optional attested spelling variant
  std::vector<DerivedPair> derived_pairs;
};

// Immutable after construction; mutation produces a new value.
class Lexicon {
 public:
  // The 18 grammatical morphemes, no stems.
  static Lexicon with_builtins();

  // Parses the lexicon document format (see data/lexicon.totolex).
  static Lexicon load(std::istream& in, const std::string& source_name = "<stream>");
  static Lexicon load_file(const std::string& path);

  Lexicon add(const LexicalEntry& e) const;  // throws DuplicateEntry

  // All entries whose lemma equals `surface` after normalization.
  std::vector<const LexicalEntry*> lookup_stem(std::string_view surface) const;

  // Deterministic order: by slot index, then id.
  std::vector<const Morpheme*> inventory() const;

  const Morpheme* morpheme_by_id(std::string_view id) const;

  const std::vector<LexicalEntry>& entries() const { return entries_; }
  const std::vector<Morpheme>& morphemes() const { return morphemes_; }
  const std::string& version() const { return version_; }

  // Canonical document form: load(serialize(x)) == x and
  // serialize(load(doc)) == doc for canonical doc.
  std::string serialize() const;

 private:
  Lexicon() = default;
  void index_entries();
  void check_morpheme(const Morpheme& m) const;

  std::vector<LexicalEntry> entries_;
  std::vector<Morpheme> morphemes_;
  std::string version_ = "1";
  std::unordered_map<std::string, std::vector<size_t>> by_lemma_;
};

}  // namespace toto
