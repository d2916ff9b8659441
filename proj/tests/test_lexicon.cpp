#include <set>
#include <sstream>

#include "doctest.h"
#include "toto/lexicon.hpp"

using namespace toto;

namespace {

const Lexicon& golden() {
  static Lexicon lex = Lexicon::load_file(std::string(TOTO_DATA_DIR) +
                                          "/lexicon.totolex");
  return lex;
}

Lexicon from_doc(const std::string& doc) {
  std::istringstream in(doc);
  return Lexicon::load(in, "<test>");
}

}  // namespace

TEST_CASE("builtin inventory is present for an empty stem document") {
  Lexicon lex = from_doc("totolex 1\n");
  CHECK(lex.entries().empty());
  CHECK(lex.morphemes().size() == 18);

  const Morpheme* pl = lex.morpheme_by_id("pl");
  REQUIRE(pl != nullptr);
  CHECK(pl->allomorphs.size() == 1);
  CHECK(pl->allomorphs[0].surface == "bi");
}

TEST_CASE("builtin inventory realizes the documented category-surface relations") {
  Lexicon lex = Lexicon::with_builtins();
  auto surfaces_of = [&](MorphCategory cat) {
    std::set<std::string> out;
    for (const auto& m : lex.morphemes())
      for (auto c : m.categories)
        if (c == cat)
          for (const auto& a : m.allomorphs) out.insert(a.surface);
    return out;
  };
  CHECK(surfaces_of(MorphCategory::Pl) == std::set<std::string>{"bi"});
  CHECK(surfaces_of(MorphCategory::Fut) == std::set<std::string>{"ro"});
  CHECK(surfaces_of(MorphCategory::Prs) == std::set<std::string>{"mi", "na"});
  CHECK(surfaces_of(MorphCategory::Pst) == std::set<std::string>{"mi", "na"});
  CHECK(surfaces_of(MorphCategory::Prog) ==
        std::set<std::string>{"daŋ", "diŋ", "duŋ"});
  CHECK(surfaces_of(MorphCategory::Pfv) == std::set<std::string>{"pate", "pu"});
  CHECK(surfaces_of(MorphCategory::Hab) == std::set<std::string>{"ko"});
  CHECK(surfaces_of(MorphCategory::Imp) == std::set<std::string>{"ko"});
  CHECK(surfaces_of(MorphCategory::Acc) ==
        std::set<std::string>{"hẽ", "hiŋ", "hi"});
  CHECK(surfaces_of(MorphCategory::Gen) == std::set<std::string>{"ko", "kɔ"});
  CHECK(surfaces_of(MorphCategory::Loc) == std::set<std::string>{"ta", "fo"});
  CHECK(surfaces_of(MorphCategory::Dat) == std::set<std::string>{"hiŋ", "ta"});
  CHECK(surfaces_of(MorphCategory::Inst) == std::set<std::string>{"fo"});
  CHECK(surfaces_of(MorphCategory::Abl) == std::set<std::string>{"fo"});
  CHECK(surfaces_of(MorphCategory::Def) == std::set<std::string>{"ha"});
  CHECK(surfaces_of(MorphCategory::Emph) == std::set<std::string>{"he"});
  CHECK(surfaces_of(MorphCategory::Nom) == std::set<std::string>{""});
}

TEST_CASE("load: stem definition becomes a findable entry") {
  Lexicon lex = from_doc("totolex 1\nstem\tha\tVERB\tgo\n");
  auto hits = lex.lookup_stem("ha");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]->word_class == WordClass::Verb);
  CHECK(hits[0]->gloss_en == "go");
}

TEST_CASE("load: duplicate (lemma, class) is a duplicate-entry error") {
  try {
    from_doc("totolex 1\nstem\tha\tVERB\tgo\nstem\tha\tVERB\twalk\n");
    FAIL("expected duplicate-entry error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateEntry);
  }
}

TEST_CASE("load: unknown category tag is a schema error") {
  try {
    from_doc("totolex 1\nmorpheme\tx\tBOGUS\tzz\tNOUN\t3\tBOGUS=X\n");
    FAIL("expected schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
  }
}

TEST_CASE("load: malformed line reports its location") {
  try {
    from_doc("totolex 1\nstem\tonly-two\n");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("load: bad header and bad version are rejected") {
  CHECK_THROWS_AS(from_doc("nonsense\n"), Error);
  try {
    from_doc("totolex 99\n");
    FAIL("expected schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
  }
}

TEST_CASE("lookup_stem: golden forms") {
  auto ceng = golden().lookup_stem("ceŋ");
  REQUIRE(ceng.size() == 1);
  CHECK(ceng[0]->word_class == WordClass::Noun);
  CHECK(ceng[0]->gloss_en == "child");

  auto tui = golden().lookup_stem("tui");
  REQUIRE(tui.size() == 1);
  CHECK(tui[0]->word_class == WordClass::Verb);
  CHECK(tui[0]->gloss_en == "run");

  CHECK(golden().lookup_stem("zzz").empty());
}

TEST_CASE("lookup_stem normalizes its argument") {
  // decomposed e + combining tilde finds the composed lemma, and
  // surrounding whitespace is ignored
  Lexicon lex = from_doc("totolex 1\nstem\thẽka\tNOUN\tx\n");
  CHECK(lex.lookup_stem("hẽka").size() == 1);
  CHECK(lex.lookup_stem("  hẽka ").size() == 1);
}

TEST_CASE("morpheme_inventory is deterministic and ordered by slot then id") {
  auto inv1 = golden().inventory();
  auto inv2 = golden().inventory();
  REQUIRE(inv1.size() == inv2.size());
  for (size_t i = 0; i < inv1.size(); ++i) CHECK(inv1[i]->id == inv2[i]->id);
  for (size_t i = 1; i < inv1.size(); ++i) {
    CHECK(inv1[i - 1]->slot <= inv1[i]->slot);
    if (inv1[i - 1]->slot == inv1[i]->slot)
      CHECK(inv1[i - 1]->id < inv1[i]->id);
  }
}

TEST_CASE("inventory has exactly one NOM morpheme with the null allomorph") {
  int nulls = 0;
  for (const Morpheme* m : golden().inventory())
    for (auto c : m->categories)
      if (c == MorphCategory::Nom) {
        ++nulls;
        REQUIRE(m->allomorphs.size() == 1);
        CHECK(m->allomorphs[0].surface.empty());
      }
  CHECK(nulls == 1);
}

TEST_CASE("add returns a new value and leaves the original untouched") {
  Lexicon base = from_doc("totolex 1\n");
  LexicalEntry pika;
  pika.lemma = "pika";
  pika.word_class = WordClass::Noun;
  pika.gloss_en = "cow";
  Lexicon grown = base.add(pika);
  CHECK(grown.lookup_stem("pika").size() == 1);
  CHECK(base.lookup_stem("pika").empty());
  CHECK_THROWS_AS(grown.add(pika), Error);
}

TEST_CASE("serialize round trip is identity on the canonical form") {
  const std::string canonical = golden().serialize();
  std::istringstream in(canonical);
  Lexicon reloaded = Lexicon::load(in, "<canonical>");
  CHECK(reloaded.serialize() == canonical);
  CHECK(reloaded.entries().size() == golden().entries().size());
  CHECK(reloaded.morphemes().size() == golden().morphemes().size());
}

TEST_CASE("golden lexicon ships the -fa instrumental extension") {
  const Morpheme* fa = golden().morpheme_by_id("ins_fa");
  REQUIRE(fa != nullptr);
  CHECK(fa->gloss_labels.at(MorphCategory::Inst) == "INS");
  CHECK(golden().morphemes().size() == 19);
}
