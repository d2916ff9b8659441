#include "toto/morphology.hpp"

#include <algorithm>
#include <set>

#include "toto/translit.hpp"

namespace toto {

namespace {

using MC = MorphCategory;

const std::vector<Slot> kNominalTemplate = {
    {"number", {MC::Pl}, 1},
    {"def", {MC::Def}, 2},
    {"case", {MC::Nom, MC::Acc, MC::Gen, MC::Dat, MC::Loc, MC::Inst, MC::Abl}, 3},
};

const std::vector<Slot> kVerbalTemplate = {
    {"aspect", {MC::Prog, MC::Pfv}, 1},
    {"tam", {MC::Prs, MC::Pst, MC::Fut, MC::Hab, MC::Imp}, 2},
    {"emph", {MC::Emph}, 3},
};

const std::vector<Slot> kBareTemplate = {};

const Slot* slot_of(const std::vector<Slot>& tmpl, MorphCategory cat) {
  for (const auto& s : tmpl)
    for (auto c : s.allowed)
      if (c == cat) return &s;
  return nullptr;
}

std::string sort_key(const Analysis& a) {
  std::string key = a.gloss_line();
  key.push_back('\x01');
  key += a.features.canonical();
  key.push_back('\x01');
  key += a.stem ? a.stem->lemma : a.hypothesized_lemma;
  key.push_back('\x01');
  key += a.stem ? to_string(a.stem->word_class) : "?";
  return key;
}

struct AnalysisOrder {
  bool operator()(const Analysis& a, const Analysis& b) const {
    if (a.hypothesized() != b.hypothesized()) return !a.hypothesized();
    if (a.affix_count() != b.affix_count())
      return a.affix_count() < b.affix_count();
    return sort_key(a) < sort_key(b);
  }
};

// (morpheme, category) readings of one surface piece for a word class,
// constrained to slots after `min_slot`.
struct Reading {
  const Morpheme* morpheme;
  MorphCategory category;
  const Slot* slot;
};

std::vector<Reading> readings_of(const Lexicon& lex, const std::string& piece,
                                 WordClass cls, const std::vector<Slot>& tmpl,
                                 int min_slot) {
  std::vector<Reading> out;
  for (const Morpheme* m : lex.inventory()) {
    if (!m->attaches_to.count(cls)) continue;
    bool surface_match = false;
    for (const auto& a : m->allomorphs) {
      if (a.surface == piece && !a.surface.empty()) surface_match = true;
      if (piece == "∅" && a.surface.empty()) surface_match = true;
    }
    if (!surface_match) continue;
    for (MorphCategory cat : m->categories) {
      const Slot* s = slot_of(tmpl, cat);
      if (s && s->index > min_slot) out.push_back({m, cat, s});
    }
  }
  return out;
}

void assemble(const Lexicon& lex, const std::string& token,
              const LexicalEntry* stem, const std::string& hyp_lemma,
              const std::string& stem_surface,
              const std::vector<std::string>& affix_pieces,
              std::vector<Analysis>& out) {
  const WordClass cls = stem ? stem->word_class : WordClass::Noun;
  const std::vector<WordClass> classes =
      stem ? std::vector<WordClass>{cls}
           : std::vector<WordClass>{WordClass::Noun, WordClass::Verb};

  for (WordClass c : classes) {
    const auto& tmpl = slot_template(c);
    if (affix_pieces.size() > tmpl.size()) continue;

    Analysis base;
    base.token = token;
    base.stem = stem;
    base.hypothesized_lemma = stem ? "" : hyp_lemma;
    base.segments.push_back({stem_surface, "stem",
                             stem ? stem->gloss_en : hyp_lemma,
                             MorphCategory::Stem});

    // Depth-first assignment of pieces to strictly later slots.
    struct Frame {
      Analysis partial;
      size_t next;
      int min_slot;
    };
    std::vector<Frame> stack{{base, 0, 0}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.next == affix_pieces.size()) {
        auto finish = [&](Analysis a) {
          auto pl = a.features.get("number");
          auto def = a.features.get("def");
          if (pl && def) a.unattested_combination = true;
          out.push_back(std::move(a));
        };
        finish(f.partial);
        // Bare TAM on a verb also reads as the zero-marked imperative.
        if (c == WordClass::Verb && !f.partial.features.get("tam")) {
          Analysis imp = f.partial;
          imp.features.set("tam", MC::Imp);
          finish(std::move(imp));
        }
        continue;
      }
      const std::string& piece = affix_pieces[f.next];
      for (const Reading& r :
           readings_of(lex, piece, c, tmpl, f.min_slot)) {
        Frame next = f;
        next.partial.segments.push_back(
            {piece, r.morpheme->id, r.morpheme->gloss_labels.at(r.category),
             r.category});
        if (r.category != MC::Nom)
          next.partial.features.set(r.slot->name, r.category);
        next.next = f.next + 1;
        next.min_slot = r.slot->index;
        stack.push_back(std::move(next));
      }
    }
  }
}

void sort_and_dedup(std::vector<Analysis>& all) {
  std::sort(all.begin(), all.end(), AnalysisOrder{});
  std::set<std::string> seen;
  std::vector<Analysis> unique;
  for (auto& a : all) {
    std::string key = segment_string(a);
    key.push_back('\x02');
    key += sort_key(a);
    key.push_back('\x02');
    key += a.hypothesized() ? "h" : "k";
    if (seen.insert(key).second) unique.push_back(std::move(a));
  }
  all = std::move(unique);
}

}  // namespace

const std::vector<Slot>& slot_template(WordClass c) {
  switch (c) {
    case WordClass::Noun:
    case WordClass::Pronoun:
      return kNominalTemplate;
    case WordClass::Verb:
      return kVerbalTemplate;
    default:
      return kBareTemplate;
  }
}

FeatureBundle FeatureBundle::from_categories(
    WordClass c, const std::vector<MorphCategory>& cats) {
  const auto& tmpl = slot_template(c);
  FeatureBundle b;
  for (MorphCategory cat : cats) {
    const Slot* s = slot_of(tmpl, cat);
    if (!s)
      fail(ErrorKind::WordClassMismatch,
           std::string(to_string(cat)) + " is not legal for " + to_string(c));
    if (cat == MC::Nom) continue;  // nominative is the unmarked case
    if (b.slots_.count(s->name))
      fail(ErrorKind::FeatureConflict,
           "two values for slot '" + s->name + "': " +
               to_string(b.slots_.at(s->name)) + " and " + to_string(cat));
    b.slots_[s->name] = cat;
  }
  return b;
}

void FeatureBundle::set(const std::string& slot, MorphCategory cat) {
  if (cat == MC::Nom) return;
  slots_[slot] = cat;
}

std::optional<MorphCategory> FeatureBundle::get(const std::string& slot) const {
  auto it = slots_.find(slot);
  if (it == slots_.end()) return std::nullopt;
  return it->second;
}

std::string FeatureBundle::canonical() const {
  std::string out;
  for (const auto& [slot, cat] : slots_) {
    if (!out.empty()) out.push_back(';');
    out += slot;
    out.push_back('=');
    out += to_string(cat);
  }
  return out;
}

size_t Analysis::affix_count() const {
  return segments.empty() ? 0 : segments.size() - 1;
}

std::string Analysis::gloss_line() const {
  std::string out;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i) out.push_back('-');
    out += segments[i].gloss;
  }
  return out;
}

std::string segment_string(const Analysis& a) {
  std::string out;
  for (size_t i = 0; i < a.segments.size(); ++i) {
    if (i) out.push_back('-');
    out += a.segments[i].surface;
  }
  return out;
}

std::vector<Analysis> analyze(const Lexicon& lex, std::string_view token,
                              const AnalyzeOptions& opts) {
  const std::string tok = normalize(token);
  if (tok.empty()) fail(ErrorKind::Argument, "empty token");

  // Distinct strippable suffix surfaces.
  std::set<std::string> surfaces;
  for (const auto& m : lex.morphemes())
    for (const auto& a : m.allomorphs)
      if (!a.surface.empty()) surfaces.insert(a.surface);

  std::vector<Analysis> all;
  // Enumerate every suffix decomposition (right to left, at most one
  // morpheme per slot so depth is bounded by the template size).
  struct Frame {
    std::string remaining;
    std::vector<std::string> suffixes;  // right-to-left
  };
  std::vector<Frame> stack{{tok, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();

    std::vector<std::string> l2r(f.suffixes.rbegin(), f.suffixes.rend());
    for (const LexicalEntry* e : lex.lookup_stem(f.remaining))
      assemble(lex, tok, e, "", f.remaining, l2r, all);
    if (opts.hypothesize_stems && lex.lookup_stem(f.remaining).empty())
      assemble(lex, tok, nullptr, f.remaining, f.remaining, l2r, all);

    if (f.suffixes.size() >= 3) continue;
    for (const auto& s : surfaces) {
      if (f.remaining.size() > s.size() &&
          f.remaining.compare(f.remaining.size() - s.size(), s.size(), s) == 0) {
        Frame next;
        next.remaining = f.remaining.substr(0, f.remaining.size() - s.size());
        next.suffixes = f.suffixes;
        next.suffixes.push_back(s);
        stack.push_back(std::move(next));
      }
    }
  }

  sort_and_dedup(all);
  return all;
}

std::vector<Analysis> analyze_pieces(const Lexicon& lex,
                                     const std::vector<std::string>& pieces,
                                     const AnalyzeOptions& opts) {
  if (pieces.empty() || pieces[0].empty())
    fail(ErrorKind::Argument, "empty token");
  for (const auto& p : pieces)
    if (p.empty()) return {};  // malformed hint, not analyzable

  std::string token;
  for (const auto& p : pieces) token += p;
  std::vector<std::string> affixes(pieces.begin() + 1, pieces.end());

  std::vector<Analysis> all;
  for (const LexicalEntry* e : lex.lookup_stem(pieces[0]))
    assemble(lex, token, e, "", pieces[0], affixes, all);
  if (opts.hypothesize_stems && lex.lookup_stem(pieces[0]).empty())
    assemble(lex, token, nullptr, pieces[0], pieces[0], affixes, all);

  sort_and_dedup(all);
  return all;
}

std::string generate(const Lexicon& lex, const LexicalEntry& stem,
                     const FeatureBundle& features,
                     const GenerateOptions& opts) {
  const auto& tmpl = slot_template(stem.word_class);
  for (const auto& [slot_name, cat] : features.slots()) {
    const Slot* s = slot_of(tmpl, cat);
    if (!s || s->name != slot_name)
      fail(ErrorKind::WordClassMismatch,
           std::string(to_string(cat)) + " is not legal for " +
               to_string(stem.word_class));
  }

  auto attested = [&](const char* morph_id, const std::string& surface) {
    const Morpheme* m = lex.morpheme_by_id(morph_id);
    if (!m) fail(ErrorKind::Schema, std::string("missing morpheme ") + morph_id);
    for (const auto& a : m->allomorphs)
      if (a.surface == surface) return surface;
    fail(ErrorKind::Argument, "'" + surface + "' is not an allomorph of " +
                                  std::string(morph_id));
  };
  auto pick = [&](MorphCategory cat, const char* morph_id,
                  const std::string& fallback) {
    auto it = opts.allomorphs.find(cat);
    return attested(morph_id, it != opts.allomorphs.end() ? it->second
                                                          : fallback);
  };

  std::string out = stem.lemma;
  for (const auto& slot : tmpl) {
    auto catOpt = features.get(slot.name);
    if (!catOpt) continue;
    switch (*catOpt) {
      case MC::Pl: out += pick(MC::Pl, "pl", "bi"); break;
      case MC::Def: out += pick(MC::Def, "def", "ha"); break;
      case MC::Acc: out += pick(MC::Acc, "acc", "hiŋ"); break;
      case MC::Gen: out += pick(MC::Gen, "gen", "ko"); break;
      case MC::Dat: out += pick(MC::Dat, "dat", "hiŋ"); break;
      case MC::Loc: out += pick(MC::Loc, "loc", "ta"); break;
      case MC::Inst: out += pick(MC::Inst, "inst", "fo"); break;
      case MC::Abl: out += pick(MC::Abl, "abl", "fo"); break;
      case MC::Prog:
        out += pick(MC::Prog, "prog",
                    stem.prog_allomorph.empty() ? "daŋ" : stem.prog_allomorph);
        break;
      case MC::Pfv: {
        // -pate with present/past, -pu with future.
        auto tam = features.get("tam");
        out += (tam && *tam == MC::Fut) ? attested("pfv_pu", "pu")
                                        : attested("pfv_pate", "pate");
        break;
      }
      case MC::Prs:
      case MC::Pst: {
        if (opts.tense_exponent != "na" && opts.tense_exponent != "mi")
          fail(ErrorKind::Argument,
               "tense exponent must be 'na' or 'mi', got '" +
                   opts.tense_exponent + "'");
        out += opts.tense_exponent;
        break;
      }
      case MC::Fut: out += "ro"; break;
      case MC::Hab: out += "ko"; break;
      case MC::Imp:
        if (opts.imp_ko) out += "ko";
        break;
      case MC::Emph: out += "he"; break;
      default:
        fail(ErrorKind::Argument,
             std::string("cannot generate category ") + to_string(*catOpt));
    }
  }
  return out;
}

const std::vector<DerivationRule>& derivation_rules() {
  static const std::vector<DerivationRule> rules = {
      {WordClass::Adjective, WordClass::Verb, {"paJoa", "Joa"}},
      {WordClass::Verb, WordClass::Noun, {"va", "pəva"}},
      {WordClass::Noun, WordClass::Adjective, {}},  // lexicalized pairs only
  };
  return rules;
}

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// English gloss for a productive derivation: -er / -en with final-e
// drop and CVC doubling (write->writer, run->runner, red->redden).
std::string derived_gloss(const std::string& base, const std::string& suffix) {
  if (base.empty()) return base + suffix;
  const char last = base.back();
  if (last == 'e') return base + suffix.substr(1);
  const size_t n = base.size();
  if (n >= 3 && !is_vowel(base[n - 1]) && is_vowel(base[n - 2]) &&
      !is_vowel(base[n - 3]) && last != 'w' && last != 'x' && last != 'y')
    return base + last + suffix;
  return base + suffix;
}

}  // namespace

DerivedEntry derive(const Lexicon& lex, const LexicalEntry& entry,
                    WordClass target) {
  (void)lex;
  for (const auto& p : entry.derived_pairs)
    if (p.target == target) return {p.surface, target, p.gloss_en};

  for (const auto& rule : derivation_rules()) {
    if (rule.source != entry.word_class || rule.target != target) continue;
    if (rule.suffixes.empty()) break;  // lexicalized-only rule
    std::string suffix = rule.suffixes[0];
    if (!entry.pinned_deriv_allomorph.empty()) {
      bool known = false;
      for (const auto& s : rule.suffixes)
        if (s == entry.pinned_deriv_allomorph) known = true;
      if (!known)
        fail(ErrorKind::Argument,
             "pinned allomorph '" + entry.pinned_deriv_allomorph +
                 "' is not in the rule for " + to_string(entry.word_class) +
                 "->" + to_string(target));
      suffix = entry.pinned_deriv_allomorph;
    }
    std::string gloss;
    if (target == WordClass::Noun)
      gloss = entry.agent_gloss.empty() ? derived_gloss(entry.gloss_en, "er")
                                        : entry.agent_gloss;
    else if (target == WordClass::Verb)
      gloss = entry.verbal_gloss.empty() ? derived_gloss(entry.gloss_en, "en")
                                         : entry.verbal_gloss;
    else
      gloss = entry.gloss_en;
    return {entry.lemma + suffix, target, gloss};
  }
  fail(ErrorKind::DerivationUnsupported,
       "no rule or lexicalized pair for " +
           std::string(to_string(entry.word_class)) + "->" +
           to_string(target) + " on '" + entry.lemma + "'");
}

std::vector<FeatureBundle> enumerate_bundles(WordClass c) {
  const auto& tmpl = slot_template(c);
  std::vector<FeatureBundle> out{FeatureBundle{}};
  for (const auto& slot : tmpl) {
    std::vector<FeatureBundle> next;
    for (const auto& b : out) {
      next.push_back(b);  // slot unmarked
      for (MorphCategory cat : slot.allowed) {
        if (cat == MC::Nom) continue;  // identical to unmarked
        FeatureBundle withCat = b;
        withCat.set(slot.name, cat);
        next.push_back(std::move(withCat));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace toto
