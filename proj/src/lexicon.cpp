#include "toto/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toto/translit.hpp"

namespace toto {

namespace {

struct ClassName {
  WordClass c;
  const char* name;
};

constexpr ClassName kClasses[] = {
    {WordClass::Noun, "NOUN"},         {WordClass::Pronoun, "PRONOUN"},
    {WordClass::Verb, "VERB"},         {WordClass::Adjective, "ADJECTIVE"},
    {WordClass::Adverb, "ADVERB"},     {WordClass::Numeral, "NUMERAL"},
    {WordClass::Particle, "PARTICLE"},
};

struct CatName {
  MorphCategory c;
  const char* name;
  const char* label;
};

constexpr CatName kCategories[] = {
    {MorphCategory::Stem, "STEM", "STEM"},
    {MorphCategory::Pl, "PL", "PL"},
    {MorphCategory::Prs, "PRS", "PRS"},
    {MorphCategory::Pst, "PST", "PST"},
    {MorphCategory::Fut, "FUT", "FUT"},
    {MorphCategory::Prog, "PROG", "PROG"},
    {MorphCategory::Pfv, "PFV", "PFV"},
    {MorphCategory::Hab, "HAB", "HAB"},
    {MorphCategory::Imp, "IMP", "IMP"},
    {MorphCategory::Nom, "NOM", "NOM"},
    {MorphCategory::Acc, "ACC", "ACC"},
    {MorphCategory::Gen, "GEN", "GEN"},
    {MorphCategory::Dat, "DAT", "DAT"},
    {MorphCategory::Loc, "LOC", "LOC"},
    {MorphCategory::Inst, "INST", "INS"},
    {MorphCategory::Abl, "ABL", "ABL"},
    {MorphCategory::Def, "DEF", "DEF"},
    {MorphCategory::Emph, "EMPH", "EMPH"},
    {MorphCategory::DerivAdj2V, "DERIV_ADJ2V", "ADJ2V"},
    {MorphCategory::DerivV2N, "DERIV_V2N", "V2N"},
    {MorphCategory::DerivN2Adj, "DERIV_N2ADJ", "N2ADJ"},
};

std::vector<std::string> split(const std::string& s, char sep) {
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

const std::set<WordClass> kNominal = {WordClass::Noun, WordClass::Pronoun};
const std::set<WordClass> kVerbal = {WordClass::Verb};

Morpheme make(std::string id, std::vector<MorphCategory> cats,
              std::vector<std::string> surfaces, std::set<WordClass> attaches,
              int slot, std::string conditioning = "") {
  Morpheme m;
  m.id = std::move(id);
  m.categories = std::move(cats);
  for (auto c : m.categories) m.gloss_labels[c] = gloss_label(c);
  for (auto& s : surfaces) m.allomorphs.push_back({std::move(s), "", conditioning});
  m.attaches_to = std::move(attaches);
  m.slot = slot;
  return m;
}

}  // namespace

const char* to_string(WordClass c) {
  for (const auto& e : kClasses)
    if (e.c == c) return e.name;
  return "?";
}

const char* to_string(MorphCategory c) {
  for (const auto& e : kCategories)
    if (e.c == c) return e.name;
  return "?";
}

const char* gloss_label(MorphCategory c) {
  for (const auto& e : kCategories)
    if (e.c == c) return e.label;
  return "?";
}

WordClass word_class_from(std::string_view tag) {
  for (const auto& e : kClasses)
    if (tag == e.name) return e.c;
  fail(ErrorKind::Schema, "unknown word class tag '" + std::string(tag) + "'");
}

MorphCategory category_from(std::string_view tag) {
  for (const auto& e : kCategories)
    if (tag == e.name) return e.c;
  fail(ErrorKind::Schema, "unknown category tag '" + std::string(tag) + "'");
}

Lexicon Lexicon::with_builtins() {
  Lexicon lex;
  auto& ms = lex.morphemes_;

  // Nominal template: PL(1) . DEF(2) . CASE(3)
  ms.push_back(make("pl", {MorphCategory::Pl}, {"bi"}, kNominal, 1));
  ms.push_back(make("def", {MorphCategory::Def}, {"ha"}, kNominal, 2));
  ms.push_back(make("nom", {MorphCategory::Nom}, {""}, kNominal, 3, "null morpheme"));
  ms.push_back(make("acc", {MorphCategory::Acc}, {"hẽ", "hiŋ", "hi"}, kNominal, 3));
  ms.push_back(make("gen", {MorphCategory::Gen}, {"ko", "kɔ"}, kNominal, 3));
  ms.push_back(make("dat", {MorphCategory::Dat}, {"hiŋ", "ta"}, kNominal, 3));
  ms.push_back(make("loc", {MorphCategory::Loc}, {"ta", "fo"}, kNominal, 3));
  ms.push_back(make("inst", {MorphCategory::Inst}, {"fo"}, kNominal, 3));
  ms.push_back(make("abl", {MorphCategory::Abl}, {"fo"}, kNominal, 3));

  // Verbal template: ASPECT(1) . TAM(2) . EMPH(3)
  ms.push_back(make("prog", {MorphCategory::Prog}, {"daŋ", "diŋ", "duŋ"},
                    kVerbal, 1, "free variation, per-stem preference"));
  ms.push_back(make("pfv_pate", {MorphCategory::Pfv}, {"pate"}, kVerbal, 1,
                    "present/past perfect"));
  ms.push_back(make("pfv_pu", {MorphCategory::Pfv}, {"pu"}, kVerbal, 1,
                    "future perfect"));
  ms.push_back(make("tam_mi", {MorphCategory::Prs, MorphCategory::Pst}, {"mi"},
                    kVerbal, 2, "present and past interchangeably"));
  ms.push_back(make("tam_na", {MorphCategory::Prs, MorphCategory::Pst}, {"na"},
                    kVerbal, 2, "present and past interchangeably"));
  ms.push_back(make("fut", {MorphCategory::Fut}, {"ro"}, kVerbal, 2));
  ms.push_back(make("hab", {MorphCategory::Hab}, {"ko"}, kVerbal, 2));
  ms.push_back(make("imp", {MorphCategory::Imp}, {"ko"}, kVerbal, 2,
                    "not obligatory; bare stem also imperative"));
  ms.push_back(make("emph", {MorphCategory::Emph}, {"he"}, kVerbal, 3));

  lex.index_entries();
  return lex;
}

void Lexicon::check_morpheme(const Morpheme& m) const {
  if (m.id.empty()) fail(ErrorKind::Schema, "morpheme with empty id");
  if (m.categories.empty())
    fail(ErrorKind::Schema, "morpheme '" + m.id + "' has no categories");
  for (auto c : m.categories)
    if (!m.gloss_labels.count(c))
      fail(ErrorKind::Schema,
           "morpheme '" + m.id + "' missing gloss label for " + to_string(c));
  for (const auto& a : m.allomorphs)
    if (a.surface.empty() && m.id != "nom")
      fail(ErrorKind::Schema,
           "morpheme '" + m.id + "' has an empty allomorph (only NOM may)");
  for (const auto& other : morphemes_)
    if (other.id == m.id)
      fail(ErrorKind::Schema, "duplicate morpheme id '" + m.id + "'");
}

void Lexicon::index_entries() {
  by_lemma_.clear();
  for (size_t i = 0; i < entries_.size(); ++i)
    by_lemma_[normalize(entries_[i].lemma)].push_back(i);
}

Lexicon Lexicon::add(const LexicalEntry& e) const {
  if (e.lemma.empty())
    fail(ErrorKind::Schema, "lexical entry with empty lemma");
  for (const auto& prev : entries_)
    if (prev.lemma == e.lemma && prev.word_class == e.word_class)
      fail(ErrorKind::DuplicateEntry,
           "duplicate entry (" + e.lemma + ", " + to_string(e.word_class) + ")");
  Lexicon out = *this;
  out.entries_.push_back(e);
  out.index_entries();
  return out;
}

std::vector<const LexicalEntry*> Lexicon::lookup_stem(
    std::string_view surface) const {
  std::vector<const LexicalEntry*> out;
  auto it = by_lemma_.find(normalize(surface));
  if (it == by_lemma_.end()) return out;
  for (size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

std::vector<const Morpheme*> Lexicon::inventory() const {
  std::vector<const Morpheme*> out;
  for (const auto& m : morphemes_) out.push_back(&m);
  std::sort(out.begin(), out.end(), [](const Morpheme* a, const Morpheme* b) {
    if (a->slot != b->slot) return a->slot < b->slot;
    return a->id < b->id;
  });
  return out;
}

const Morpheme* Lexicon::morpheme_by_id(std::string_view id) const {
  for (const auto& m : morphemes_)
    if (m.id == id) return &m;
  return nullptr;
}

// Document format, tab-separated, '#' comments, header "totolex <ver>".
//   stem<TAB>lemma<TAB>CLASS<TAB>gloss_en[<TAB>key=value ...]
//   morpheme<TAB>id<TAB>CATS<TAB>allomorphs<TAB>CLASSES<TAB>slot<TAB>CAT=LABEL[,..]
// stem keys: ipa= bn= prog= pin= agent= verbal= variant= pair=CLASS:surface:gloss
Lexicon Lexicon::load(std::istream& in, const std::string& source_name) {
  Lexicon lex = with_builtins();
  std::string line;
  size_t lineno = 0;
  auto where = [&](const std::string& what) {
    return source_name + ":" + std::to_string(lineno) + ": " + what;
  };

  if (!std::getline(in, line))
    fail(ErrorKind::Parse, source_name + ": empty document");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    auto header = split(line, ' ');
    if (header.size() != 2 || header[0] != "totolex")
      fail(ErrorKind::Parse, where("expected 'totolex <version>' header"));
    if (header[1] != "1")
      fail(ErrorKind::Schema, where("unrecognized schema version '" + header[1] + "'"));
    lex.version_ = header[1];
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    const std::string& kind = fields[0];

    if (kind == "stem") {
      if (fields.size() < 4)
        fail(ErrorKind::Parse, where("stem record needs lemma, class, gloss"));
      LexicalEntry e;
      e.lemma = fields[1];
      e.word_class = word_class_from(fields[2]);
      e.gloss_en = fields[3];
      if (e.lemma.empty()) fail(ErrorKind::Parse, where("empty lemma"));
      for (size_t i = 4; i < fields.size(); ++i) {
        const std::string& kv = fields[i];
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          fail(ErrorKind::Parse, where("malformed key=value field '" + kv + "'"));
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "ipa") {
          e.ipa = val;
        } else if (key == "bn") {
          e.gloss_bn = val;
        } else if (key == "prog") {
          e.prog_allomorph = val;
        } else if (key == "pin") {
          e.pinned_deriv_allomorph = val;
        } else if (key == "agent") {
          e.agent_gloss = val;
        } else if (key == "verbal") {
          e.verbal_gloss = val;
        } else if (key == "variant") {
          e.variant = val;
        } else if (key == "pair") {
          auto parts = split(val, ':');
          if (parts.size() != 3)
            fail(ErrorKind::Parse, where("pair needs CLASS:surface:gloss"));
          e.derived_pairs.push_back(
              {word_class_from(parts[0]), parts[1], parts[2]});
        } else {
          fail(ErrorKind::Parse, where("unknown stem key '" + key + "'"));
        }
      }
      for (const auto& prev : lex.entries_)
        if (prev.lemma == e.lemma && prev.word_class == e.word_class)
          fail(ErrorKind::DuplicateEntry,
               where("duplicate entry (" + e.lemma + ", " + fields[2] + ")"));
      lex.entries_.push_back(std::move(e));
    } else if (kind == "morpheme") {
      if (fields.size() != 7)
        fail(ErrorKind::Parse,
             where("morpheme record needs id, cats, allomorphs, classes, slot, labels"));
      Morpheme m;
      m.id = fields[1];
      for (const auto& t : split(fields[2], ','))
        m.categories.push_back(category_from(t));
      for (const auto& s : split(fields[3], ',')) {
        if (s.empty()) fail(ErrorKind::Parse, where("empty allomorph"));
        m.allomorphs.push_back({s, "", ""});
      }
      for (const auto& t : split(fields[4], ','))
        m.attaches_to.insert(word_class_from(t));
      try {
        m.slot = std::stoi(fields[5]);
      } catch (...) {
        fail(ErrorKind::Parse, where("bad slot index '" + fields[5] + "'"));
      }
      for (const auto& kv : split(fields[6], ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          fail(ErrorKind::Parse, where("labels need CAT=LABEL"));
        m.gloss_labels[category_from(kv.substr(0, eq))] = kv.substr(eq + 1);
      }
      lex.check_morpheme(m);
      lex.morphemes_.push_back(std::move(m));
    } else {
      fail(ErrorKind::Parse, where("unknown record kind '" + kind + "'"));
    }
  }
  lex.index_entries();
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open lexicon '" + path + "'");
  return load(in, path);
}

std::string Lexicon::serialize() const {
  std::ostringstream out;
  out << "totolex " << version_ << "\n";

  const Lexicon builtin = with_builtins();
  std::vector<const Morpheme*> extras;
  for (const auto& m : morphemes_)
    if (!builtin.morpheme_by_id(m.id)) extras.push_back(&m);
  std::sort(extras.begin(), extras.end(),
            [](const Morpheme* a, const Morpheme* b) { return a->id < b->id; });
  for (const Morpheme* m : extras) {
    out << "morpheme\t" << m->id << "\t";
    for (size_t i = 0; i < m->categories.size(); ++i)
      out << (i ? "," : "") << to_string(m->categories[i]);
    out << "\t";
    for (size_t i = 0; i < m->allomorphs.size(); ++i)
      out << (i ? "," : "") << m->allomorphs[i].surface;
    out << "\t";
    size_t i = 0;
    for (auto c : m->attaches_to) out << (i++ ? "," : "") << to_string(c);
    out << "\t" << m->slot << "\t";
    i = 0;
    for (const auto& [cat, label] : m->gloss_labels)
      out << (i++ ? "," : "") << to_string(cat) << "=" << label;
    out << "\n";
  }

  std::vector<const LexicalEntry*> stems;
  for (const auto& e : entries_) stems.push_back(&e);
  std::sort(stems.begin(), stems.end(),
            [](const LexicalEntry* a, const LexicalEntry* b) {
              if (a->lemma != b->lemma) return a->lemma < b->lemma;
              return static_cast<int>(a->word_class) <
                     static_cast<int>(b->word_class);
            });
  for (const LexicalEntry* e : stems) {
    out << "stem\t" << e->lemma << "\t" << to_string(e->word_class) << "\t"
        << e->gloss_en;
    if (!e->ipa.empty()) out << "\tipa=" << e->ipa;
    if (!e->gloss_bn.empty()) out << "\tbn=" << e->gloss_bn;
    if (e->word_class == WordClass::Verb && e->prog_allomorph != "daŋ")
      out << "\tprog=" << e->prog_allomorph;
    if (!e->pinned_deriv_allomorph.empty())
      out << "\tpin=" << e->pinned_deriv_allomorph;
    if (!e->agent_gloss.empty()) out << "\tagent=" << e->agent_gloss;
    if (!e->verbal_gloss.empty()) out << "\tverbal=" << e->verbal_gloss;
    if (!e->variant.empty()) out << "\tvariant=" << e->variant;
    for (const auto& p : e->derived_pairs)
      out << "\tpair=" << to_string(p.target) << ":" << p.surface << ":"
          << p.gloss_en;
    out << "\n";
  }
  return out.str();
}

}  // namespace toto
