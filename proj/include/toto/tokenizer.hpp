#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toto/corpus.hpp"

namespace toto {

// Shared trilingual subword vocabulary, deterministic pair-merge
// training. Spaces map to "▁" one-for-one so decode . encode is the
// identity on any text whose characters were seen in training.
class SubwordModel {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kBos = 2;
  static constexpr int kEos = 3;
  static constexpr int kMask = 4;
  static constexpr int kToTag = 5;   // <2to>
  static constexpr int kBnTag = 6;   // <2bn>
  static constexpr int kEnTag = 7;   // <2en>
  static const std::vector<std::string>& specials();

  size_t vocab_size() const { return vocab_.size(); }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }
  int id_of(const std::string& unit) const;  // -1 when absent
  bool is_special(int id) const { return id >= 0 && id < 8; }

  size_t configured_vocab_size = 0;
  uint64_t seed = 0;

  void save(std::ostream& out) const;
  static SubwordModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static SubwordModel load_file(const std::string& path);

  friend SubwordModel train_subword(const std::vector<std::string>& texts,
                                    size_t vocab_size, uint64_t seed);

 private:
  std::vector<std::string> vocab_;  // id -> unit; specials first
  std::unordered_map<std::string, int> ids_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, int> merge_rank_;
  void rebuild_index();
  friend std::vector<int> encode(const SubwordModel&, std::string_view);
};

// Joint training over all given texts. Deterministic: highest pair
// count wins, ties broken lexicographically.
SubwordModel train_subword(const std::vector<std::string>& texts,
                           size_t vocab_size, uint64_t seed);

std::vector<int> encode(const SubwordModel& m, std::string_view text);

// Inverse of encode on UNK-free sequences; specials render as their
// literal tag text except PAD (empty). Out-of-range id -> Argument.
std::string decode(const SubwordModel& m, std::span<const int> ids);

struct MaskedBatch {
  static constexpr int kIgnore = -100;
  std::vector<int> input;   // ids with MASK substitutions
  std::vector<int> labels;  // original ids at masked positions, else kIgnore
  std::vector<size_t> positions;
};

// Each non-special position masked independently with probability
// mask_rate; at least one mask when any position is maskable.
MaskedBatch make_mlm_examples(const SubwordModel& m, std::span<const int> ids,
                              double mask_rate, uint64_t seed);

enum class Direction { ToEn, ToBn, EnTo, BnTo };
Direction direction_from(std::string_view tag);  // "to-en" etc.

// One line per entry: "<tag> <source>\t<target>", tag names the target
// language. Corpus must validate (throws Validation listing offenders).
std::string emit_translation_pairs(const Corpus& c, Direction dir);

}  // namespace toto
