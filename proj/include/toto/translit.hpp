#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace toto {

// Canonical composed form (Latin-range combining marks), whitespace
// runs collapsed to single spaces, ends trimmed. Idempotent.
std::string normalize(std::string_view text);

struct TranslitResult {
  std::string text;
  size_t passthrough = 0;  // characters that matched no key
};

// Bidirectional grapheme-cluster mapping, greedy longest-match.
class TransliterationTable {
 public:
  // One "roman<TAB>script" pair per line, '#' comments. Duplicate or
  // empty keys are load errors.
  static TransliterationTable load(std::istream& in,
                                   const std::string& source_name = "<stream>");
  static TransliterationTable load_file(const std::string& path);

  TranslitResult to_script(std::string_view text) const;
  TranslitResult to_roman(std::string_view text) const;  // throws DirectionUnsupported

  bool invertible() const { return invertible_; }
  const std::string& name() const { return name_; }
  size_t size() const { return forward_.size(); }
  const std::vector<std::pair<std::string, std::string>>& pairs() const {
    return forward_;
  }
  std::pair<char32_t, char32_t> target_range() const { return target_range_; }

 private:
  TranslitResult apply(std::string_view text,
                       const std::vector<std::pair<std::string, std::string>>&
                           mapping) const;

  std::vector<std::pair<std::string, std::string>> forward_;  // longest-first
  std::vector<std::pair<std::string, std::string>> inverse_;  // longest-first
  bool invertible_ = false;
  std::string name_;
  std::pair<char32_t, char32_t> target_range_ = {0x1E290, 0x1E2BF};
};

}  // namespace toto
