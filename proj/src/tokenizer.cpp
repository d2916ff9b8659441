#include "toto/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "toto/error.hpp"
#include "toto/rng.hpp"
#include "toto/utf8.hpp"

namespace toto {

namespace {

constexpr const char* kWordMark = "▁";  // U+2581, one per input space

// Splits a text into word pieces; each space attaches a leading mark to
// the following piece (or becomes a standalone mark before a special),
// so decode can restore it exactly.
struct Piece {
  std::string text;   // without the leading mark
  bool marked;        // preceded by a space
  bool special;       // text is a special tag
};

std::vector<Piece> split_text(std::string_view text,
                              const std::vector<std::string>& specials) {
  std::vector<Piece> out;
  std::string cur;
  bool marked = false;
  auto flush = [&]() {
    if (cur.empty() && !marked) return;
    const bool special =
        std::find(specials.begin(), specials.end(), cur) != specials.end();
    out.push_back({cur, marked, special});
    cur.clear();
    marked = false;
  };
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ' ') {
      flush();
      marked = true;
    } else {
      cur.push_back(text[i]);
    }
  }
  flush();
  return out;
}

// Flat base units of a piece: a standalone word mark for each leading
// space, then one unit per codepoint.
std::vector<std::string> piece_units(const Piece& p) {
  std::vector<std::string> units;
  if (p.marked) units.push_back(kWordMark);
  for (auto& cp : utf8::split_codepoints(p.text)) units.push_back(std::move(cp));
  return units;
}

}  // namespace

const std::vector<std::string>& SubwordModel::specials() {
  static const std::vector<std::string> s = {"<pad>", "<unk>", "<s>", "</s>",
                                             "<mask>", "<2to>", "<2bn>",
                                             "<2en>"};
  return s;
}

int SubwordModel::id_of(const std::string& unit) const {
  auto it = ids_.find(unit);
  return it == ids_.end() ? -1 : it->second;
}

void SubwordModel::rebuild_index() {
  ids_.clear();
  for (size_t i = 0; i < vocab_.size(); ++i) ids_[vocab_[i]] = static_cast<int>(i);
  merge_rank_.clear();
  for (size_t i = 0; i < merges_.size(); ++i)
    merge_rank_[merges_[i].first + "\x01" + merges_[i].second] =
        static_cast<int>(i);
}

SubwordModel train_subword(const std::vector<std::string>& texts,
                           size_t vocab_size, uint64_t seed) {
  if (texts.empty()) fail(ErrorKind::Argument, "no training texts");

  // Base alphabet: every codepoint seen, plus the word mark.
  std::set<std::string> alphabet;
  alphabet.insert(kWordMark);
  std::vector<std::vector<std::string>> seqs;
  for (const auto& t : texts) {
    std::vector<std::string> units;
    for (const auto& p : split_text(t, {}))  // no specials inside training text
      for (auto& u : piece_units(p)) units.push_back(std::move(u));
    for (const auto& u : units) alphabet.insert(u);
    seqs.push_back(std::move(units));
  }

  const size_t n_specials = SubwordModel::specials().size();
  if (vocab_size <= n_specials + alphabet.size())
    fail(ErrorKind::Argument,
         "vocab_size " + std::to_string(vocab_size) +
             " too small: need > " + std::to_string(n_specials) +
             " specials + " + std::to_string(alphabet.size()) +
             " base characters");

  SubwordModel m;
  m.configured_vocab_size = vocab_size;
  m.seed = seed;
  for (const auto& s : SubwordModel::specials()) m.vocab_.push_back(s);
  for (const auto& u : alphabet) m.vocab_.push_back(u);

  const size_t target_merges = vocab_size - n_specials - alphabet.size();
  for (size_t step = 0; step < target_merges; ++step) {
    std::map<std::pair<std::string, std::string>, size_t> counts;
    for (const auto& seq : seqs)
      for (size_t i = 0; i + 1 < seq.size(); ++i)
        ++counts[{seq[i], seq[i + 1]}];
    if (counts.empty())
      fail(ErrorKind::Argument,
           "vocab_size " + std::to_string(vocab_size) +
               " unreachable: training data exhausted after " +
               std::to_string(step) + " merges");
    // Highest count wins; ties go to the lexicographically smallest
    // pair (std::map iterates keys in order, so first max is smallest).
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
      if (it->second > best->second) best = it;

    const auto [a, b] = best->first;
    const std::string merged = a + b;
    for (auto& seq : seqs) {
      std::vector<std::string> next;
      next.reserve(seq.size());
      for (size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 < seq.size() && seq[i] == a && seq[i + 1] == b) {
          next.push_back(merged);
          ++i;
        } else {
          next.push_back(seq[i]);
        }
      }
      seq = std::move(next);
    }
    m.merges_.emplace_back(a, b);
    m.vocab_.push_back(merged);
  }

  m.rebuild_index();
  return m;
}

std::vector<int> encode(const SubwordModel& m, std::string_view text) {
  std::vector<int> out;
  for (const auto& piece : split_text(text, SubwordModel::specials())) {
    if (piece.special) {
      if (piece.marked) out.push_back(m.id_of(kWordMark));
      out.push_back(m.id_of(piece.text));
      continue;
    }
    std::vector<std::string> units;
    if (piece.marked) units.push_back(kWordMark);
    for (const auto& cp : utf8::split_codepoints(piece.text))
      units.push_back(cp);

    // Apply merges lowest-rank-first until none fit.
    while (units.size() > 1) {
      int best_rank = -1;
      size_t best_at = 0;
      for (size_t i = 0; i + 1 < units.size(); ++i) {
        auto it = m.merge_rank_.find(units[i] + "\x01" + units[i + 1]);
        if (it == m.merge_rank_.end()) continue;
        if (best_rank < 0 || it->second < best_rank) {
          best_rank = it->second;
          best_at = i;
        }
      }
      if (best_rank < 0) break;
      units[best_at] += units[best_at + 1];
      units.erase(units.begin() + best_at + 1);
    }
    for (const auto& u : units) {
      const int id = m.id_of(u);
      out.push_back(id < 0 ? SubwordModel::kUnk : id);
    }
  }
  return out;
}

std::string decode(const SubwordModel& m, std::span<const int> ids) {
  std::string joined;
  for (int id : ids) {
    if (id < 0 || static_cast<size_t>(id) >= m.vocab_size())
      fail(ErrorKind::Argument, "id " + std::to_string(id) + " out of range");
    if (id == SubwordModel::kPad) continue;
    joined += m.vocab()[id];
  }
  // Every word mark is exactly one original space.
  std::string out;
  size_t i = 0;
  const std::string mark = kWordMark;
  while (i < joined.size()) {
    if (joined.compare(i, mark.size(), mark) == 0) {
      out.push_back(' ');
      i += mark.size();
    } else {
      out.push_back(joined[i]);
      ++i;
    }
  }
  return out;
}

MaskedBatch make_mlm_examples(const SubwordModel& m, std::span<const int> ids,
                              double mask_rate, uint64_t seed) {
  if (!(mask_rate > 0.0 && mask_rate < 1.0))
    fail(ErrorKind::Argument, "mask_rate must be in (0, 1)");

  MaskedBatch batch;
  batch.input.assign(ids.begin(), ids.end());
  batch.labels.assign(ids.size(), MaskedBatch::kIgnore);

  Rng rng(seed);
  std::vector<size_t> maskable;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (m.is_special(ids[i])) continue;
    maskable.push_back(i);
    if (rng.next_double() < mask_rate) {
      batch.input[i] = SubwordModel::kMask;
      batch.labels[i] = ids[i];
      batch.positions.push_back(i);
    }
  }
  if (batch.positions.empty() && !maskable.empty()) {
    const size_t i = maskable[rng.bounded(maskable.size())];
    batch.input[i] = SubwordModel::kMask;
    batch.labels[i] = ids[i];
    batch.positions.push_back(i);
  }
  return batch;
}

Direction direction_from(std::string_view tag) {
  if (tag == "to-en") return Direction::ToEn;
  if (tag == "to-bn") return Direction::ToBn;
  if (tag == "en-to") return Direction::EnTo;
  if (tag == "bn-to") return Direction::BnTo;
  fail(ErrorKind::Argument, "unknown direction '" + std::string(tag) +
                                "' (want to-en, to-bn, en-to, bn-to)");
}

std::string emit_translation_pairs(const Corpus& c, Direction dir) {
  std::string offenders;
  for (const auto& e : c.entries) {
    if (e.toto.empty() || e.bangla.empty() || e.english.empty()) {
      if (!offenders.empty()) offenders += ", ";
      offenders += e.id;
    }
  }
  if (!offenders.empty())
    fail(ErrorKind::Validation,
         "corpus does not validate; entries with missing fields: " + offenders);

  std::ostringstream out;
  for (const auto& e : c.entries) {
    switch (dir) {
      case Direction::ToEn:
        out << "<2en> " << e.toto << '\t' << e.english << '\n';
        break;
      case Direction::ToBn:
        out << "<2bn> " << e.toto << '\t' << e.bangla << '\n';
        break;
      case Direction::EnTo:
        out << "<2to> " << e.english << '\t' << e.toto << '\n';
        break;
      case Direction::BnTo:
        out << "<2to> " << e.bangla << '\t' << e.toto << '\n';
        break;
    }
  }
  return out.str();
}

void SubwordModel::save(std::ostream& out) const {
  out << "totobpe 1\n";
  out << "config\t" << configured_vocab_size << "\t" << seed << "\n";
  out << "vocab\t" << vocab_.size() << "\n";
  for (const auto& u : vocab_) out << u << "\n";
  out << "merges\t" << merges_.size() << "\n";
  for (const auto& [a, b] : merges_) out << a << "\t" << b << "\n";
}

SubwordModel SubwordModel::load(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line))
      fail(ErrorKind::Parse, "truncated subword model file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  if (next_line() != "totobpe 1")
    fail(ErrorKind::Schema, "expected 'totobpe 1' header");

  SubwordModel m;
  {
    std::istringstream cfg(next_line());
    std::string tag;
    cfg >> tag >> m.configured_vocab_size >> m.seed;
    if (tag != "config") fail(ErrorKind::Parse, "expected config line");
  }
  size_t n_vocab = 0;
  {
    std::istringstream vs(next_line());
    std::string tag;
    vs >> tag >> n_vocab;
    if (tag != "vocab") fail(ErrorKind::Parse, "expected vocab line");
  }
  for (size_t i = 0; i < n_vocab; ++i) m.vocab_.push_back(next_line());
  for (size_t i = 0; i < specials().size(); ++i)
    if (i >= m.vocab_.size() || m.vocab_[i] != specials()[i])
      fail(ErrorKind::Schema, "model does not reserve the special tokens");
  size_t n_merges = 0;
  {
    std::istringstream ms(next_line());
    std::string tag;
    ms >> tag >> n_merges;
    if (tag != "merges") fail(ErrorKind::Parse, "expected merges line");
  }
  for (size_t i = 0; i < n_merges; ++i) {
    next_line();
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail(ErrorKind::Parse, "merge line without tab");
    m.merges_.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  m.rebuild_index();
  return m;
}

void SubwordModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write model '" + path + "'");
  save(out);
}

SubwordModel SubwordModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open model '" + path + "'");
  return load(in);
}

}  // namespace toto
