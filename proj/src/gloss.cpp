#include "toto/gloss.hpp"

#include <algorithm>
#include <sstream>

#include "toto/translit.hpp"
#include "toto/utf8.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace toto {

namespace {

using MC = MorphCategory;

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_pieces(const std::string& token) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : token) {
    if (ch == '-') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// Temporal adverbs that decide the reading of tense-ambiguous tokens.
std::optional<MC> adverb_tense(const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) {
    if (t == "ainji") return MC::Pst;
    if (t == "neha") return MC::Prs;
    if (t == "jukuŋ") return MC::Fut;
  }
  return std::nullopt;
}

// Default reading of a case-ambiguous suffix; mirrors the generation
// defaults and the attested usage of the examples.
std::optional<MC> default_case(const std::string& surface) {
  if (surface == "ta") return MC::Loc;
  if (surface == "fo") return MC::Abl;
  if (surface == "hiŋ" || surface == "hi" || surface == "hẽ") return MC::Acc;
  if (surface == "ko" || surface == "kɔ") return MC::Gen;
  return std::nullopt;
}

bool is_case_cat(MC c) {
  return c == MC::Nom || c == MC::Acc || c == MC::Gen || c == MC::Dat ||
         c == MC::Loc || c == MC::Inst || c == MC::Abl;
}

size_t disambiguation_penalty(const Analysis& a, MC preferred_tam) {
  size_t penalty = 0;
  for (size_t i = 1; i < a.segments.size(); ++i) {
    const Segment& seg = a.segments[i];
    if (is_case_cat(seg.category)) {
      auto pref = default_case(seg.surface);
      if (pref && seg.category != *pref) ++penalty;
    } else if (seg.category == MC::Hab || seg.category == MC::Imp) {
      if (seg.surface == "ko" && seg.category != MC::Hab) ++penalty;
    } else if (seg.category == MC::Prs || seg.category == MC::Pst) {
      const MC want =
          (preferred_tam == MC::Pst) ? MC::Pst : MC::Prs;
      if (seg.category != want) ++penalty;
    }
  }
  return penalty;
}

}  // namespace

std::string IgtToken::surface() const {
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) out.push_back('-');
    out += pieces[i];
  }
  return out;
}

std::string IgtToken::gloss() const {
  std::string out;
  for (size_t i = 0; i < glosses.size(); ++i) {
    if (i) out.push_back('-');
    out += glosses[i];
  }
  return out;
}

std::string Igt::surface_line() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i].surface();
  }
  return out;
}

std::string Igt::gloss_line() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i].gloss();
  }
  return out;
}

Igt gloss_sentence(const Lexicon& lex, std::string_view sentence,
                   const GlossOptions& opts) {
  Igt igt;
  igt.translation = opts.translation;
  const std::string norm = normalize(sentence);
  if (norm.empty()) return igt;

  const auto tokens = split_tokens(norm);
  const MC preferred_tam =
      opts.force_tense ? *opts.force_tense
                       : adverb_tense(tokens).value_or(MC::Prs);

  for (size_t ti = 0; ti < tokens.size(); ++ti) {
    const std::string& token = tokens[ti];
    std::vector<Analysis> analyses;
    try {
      if (token.find('-') != std::string::npos)
        analyses = analyze_pieces(lex, split_pieces(token));
      else
        analyses = analyze(lex, token);
    } catch (const Error&) {
      analyses.clear();
    }

    IgtToken out;
    if (analyses.empty()) {
      out.pieces = {token};  // verbatim, hyphens and all
      out.glosses = {"???"};
      out.resolved = false;
      igt.unresolved.push_back(ti);
    } else {
      std::stable_sort(analyses.begin(), analyses.end(),
                       [&](const Analysis& a, const Analysis& b) {
                         return disambiguation_penalty(a, preferred_tam) <
                                disambiguation_penalty(b, preferred_tam);
                       });
      const Analysis& best = analyses.front();
      for (const auto& seg : best.segments) {
        out.pieces.push_back(seg.surface);
        out.glosses.push_back(seg.gloss);
      }
      if (opts.emit_all)
        for (const auto& a : analyses) out.alternatives.push_back(a.gloss_line());
    }
    igt.tokens.push_back(std::move(out));
  }
  return igt;
}

std::string format_igt(const Igt& igt, size_t min_col_gap) {
  if (min_col_gap < 1) fail(ErrorKind::Argument, "min_col_gap must be >= 1");
  if (igt.empty()) return "";

  std::string surface_row, gloss_row;
  for (size_t i = 0; i < igt.tokens.size(); ++i) {
    const std::string s = igt.tokens[i].surface();
    const std::string g = igt.tokens[i].gloss();
    const size_t sw = utf8::length(s), gw = utf8::length(g);
    const size_t w = std::max(sw, gw);
    surface_row += s;
    gloss_row += g;
    if (i + 1 < igt.tokens.size()) {
      surface_row.append(w - sw + min_col_gap, ' ');
      gloss_row.append(w - gw + min_col_gap, ' ');
    }
  }
  while (!surface_row.empty() && surface_row.back() == ' ') surface_row.pop_back();
  while (!gloss_row.empty() && gloss_row.back() == ' ') gloss_row.pop_back();

  std::string out = surface_row + "\n" + gloss_row + "\n";
  if (!igt.translation.empty()) out += "'" + igt.translation + "'\n";
  return out;
}

BatchGlossResult batch_gloss(const Lexicon& lex, const Corpus& corpus,
                             const BatchGlossOptions& opts) {
  BatchGlossResult res;
  res.igts.resize(corpus.entries.size());

  auto run_one = [&](size_t i) {
    const CorpusEntry& e = corpus.entries[i];
    GlossOptions g;
    g.translation = e.english;
    auto it = opts.tense_overrides.find(e.id);
    if (it != opts.tense_overrides.end()) g.force_tense = it->second;
    res.igts[i] = gloss_sentence(lex, e.toto, g);
  };

  const auto n = static_cast<long long>(corpus.entries.size());
#if defined(_OPENMP)
  if (opts.policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) run_one(static_cast<size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) run_one(static_cast<size_t>(i));
  }
#else
  for (long long i = 0; i < n; ++i) run_one(static_cast<size_t>(i));
#endif

  for (size_t i = 0; i < res.igts.size(); ++i) {
    const Igt& igt = res.igts[i];
    res.tokens_total += igt.tokens.size();
    res.tokens_resolved += igt.tokens.size() - igt.unresolved.size();
    if (!igt.unresolved.empty()) {
      BatchGlossIssue issue;
      issue.entry_id = corpus.entries[i].id;
      for (size_t ti : igt.unresolved)
        issue.unresolved_tokens.push_back(igt.tokens[ti].surface());
      res.issues.push_back(std::move(issue));
    }
  }
  res.resolution_rate =
      res.tokens_total == 0
          ? 1.0
          : static_cast<double>(res.tokens_resolved) / res.tokens_total;
  return res;
}

}  // namespace toto
