#include "toto/translit.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "toto/error.hpp"
#include "toto/utf8.hpp"

namespace toto {

namespace {

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Canonical compositions for Latin bases with combining marks
// U+0300..U+0327 (the project's working character ranges). Frozen from
// the Unicode canonical composition data.
constexpr Composition kCompositions[] = {
    {0x0041, 0x0300, 0x00C0},
    {0x0041, 0x0301, 0x00C1},
    {0x0041, 0x0302, 0x00C2},
    {0x0041, 0x0303, 0x00C3},
    {0x0041, 0x0304, 0x0100},
    {0x0041, 0x0306, 0x0102},
    {0x0041, 0x0307, 0x0226},
    {0x0041, 0x0308, 0x00C4},
    {0x0041, 0x0309, 0x1EA2},
    {0x0041, 0x030A, 0x00C5},
    {0x0041, 0x030C, 0x01CD},
    {0x0041, 0x030F, 0x0200},
    {0x0041, 0x0311, 0x0202},
    {0x0041, 0x0323, 0x1EA0},
    {0x0041, 0x0325, 0x1E00},
    {0x0042, 0x0307, 0x1E02},
    {0x0042, 0x0323, 0x1E04},
    {0x0043, 0x0301, 0x0106},
    {0x0043, 0x0302, 0x0108},
    {0x0043, 0x0307, 0x010A},
    {0x0043, 0x030C, 0x010C},
    {0x0043, 0x0327, 0x00C7},
    {0x0044, 0x0307, 0x1E0A},
    {0x0044, 0x030C, 0x010E},
    {0x0044, 0x0323, 0x1E0C},
    {0x0044, 0x0327, 0x1E10},
    {0x0045, 0x0300, 0x00C8},
    {0x0045, 0x0301, 0x00C9},
    {0x0045, 0x0302, 0x00CA},
    {0x0045, 0x0303, 0x1EBC},
    {0x0045, 0x0304, 0x0112},
    {0x0045, 0x0306, 0x0114},
    {0x0045, 0x0307, 0x0116},
    {0x0045, 0x0308, 0x00CB},
    {0x0045, 0x0309, 0x1EBA},
    {0x0045, 0x030C, 0x011A},
    {0x0045, 0x030F, 0x0204},
    {0x0045, 0x0311, 0x0206},
    {0x0045, 0x0323, 0x1EB8},
    {0x0045, 0x0327, 0x0228},
    {0x0046, 0x0307, 0x1E1E},
    {0x0047, 0x0301, 0x01F4},
    {0x0047, 0x0302, 0x011C},
    {0x0047, 0x0304, 0x1E20},
    {0x0047, 0x0306, 0x011E},
    {0x0047, 0x0307, 0x0120},
    {0x0047, 0x030C, 0x01E6},
    {0x0047, 0x0327, 0x0122},
    {0x0048, 0x0302, 0x0124},
    {0x0048, 0x0307, 0x1E22},
    {0x0048, 0x0308, 0x1E26},
    {0x0048, 0x030C, 0x021E},
    {0x0048, 0x0323, 0x1E24},
    {0x0048, 0x0327, 0x1E28},
    {0x0049, 0x0300, 0x00CC},
    {0x0049, 0x0301, 0x00CD},
    {0x0049, 0x0302, 0x00CE},
    {0x0049, 0x0303, 0x0128},
    {0x0049, 0x0304, 0x012A},
    {0x0049, 0x0306, 0x012C},
    {0x0049, 0x0307, 0x0130},
    {0x0049, 0x0308, 0x00CF},
    {0x0049, 0x0309, 0x1EC8},
    {0x0049, 0x030C, 0x01CF},
    {0x0049, 0x030F, 0x0208},
    {0x0049, 0x0311, 0x020A},
    {0x0049, 0x0323, 0x1ECA},
    {0x004A, 0x0302, 0x0134},
    {0x004B, 0x0301, 0x1E30},
    {0x004B, 0x030C, 0x01E8},
    {0x004B, 0x0323, 0x1E32},
    {0x004B, 0x0327, 0x0136},
    {0x004C, 0x0301, 0x0139},
    {0x004C, 0x030C, 0x013D},
    {0x004C, 0x0323, 0x1E36},
    {0x004C, 0x0327, 0x013B},
    {0x004D, 0x0301, 0x1E3E},
    {0x004D, 0x0307, 0x1E40},
    {0x004D, 0x0323, 0x1E42},
    {0x004E, 0x0300, 0x01F8},
    {0x004E, 0x0301, 0x0143},
    {0x004E, 0x0303, 0x00D1},
    {0x004E, 0x0307, 0x1E44},
    {0x004E, 0x030C, 0x0147},
    {0x004E, 0x0323, 0x1E46},
    {0x004E, 0x0327, 0x0145},
    {0x004F, 0x0300, 0x00D2},
    {0x004F, 0x0301, 0x00D3},
    {0x004F, 0x0302, 0x00D4},
    {0x004F, 0x0303, 0x00D5},
    {0x004F, 0x0304, 0x014C},
    {0x004F, 0x0306, 0x014E},
    {0x004F, 0x0307, 0x022E},
    {0x004F, 0x0308, 0x00D6},
    {0x004F, 0x0309, 0x1ECE},
    {0x004F, 0x030B, 0x0150},
    {0x004F, 0x030C, 0x01D1},
    {0x004F, 0x030F, 0x020C},
    {0x004F, 0x0311, 0x020E},
    {0x004F, 0x031B, 0x01A0},
    {0x004F, 0x0323, 0x1ECC},
    {0x0050, 0x0301, 0x1E54},
    {0x0050, 0x0307, 0x1E56},
    {0x0052, 0x0301, 0x0154},
    {0x0052, 0x0307, 0x1E58},
    {0x0052, 0x030C, 0x0158},
    {0x0052, 0x030F, 0x0210},
    {0x0052, 0x0311, 0x0212},
    {0x0052, 0x0323, 0x1E5A},
    {0x0052, 0x0327, 0x0156},
    {0x0053, 0x0301, 0x015A},
    {0x0053, 0x0302, 0x015C},
    {0x0053, 0x0307, 0x1E60},
    {0x0053, 0x030C, 0x0160},
    {0x0053, 0x0323, 0x1E62},
    {0x0053, 0x0326, 0x0218},
    {0x0053, 0x0327, 0x015E},
    {0x0054, 0x0307, 0x1E6A},
    {0x0054, 0x030C, 0x0164},
    {0x0054, 0x0323, 0x1E6C},
    {0x0054, 0x0326, 0x021A},
    {0x0054, 0x0327, 0x0162},
    {0x0055, 0x0300, 0x00D9},
    {0x0055, 0x0301, 0x00DA},
    {0x0055, 0x0302, 0x00DB},
    {0x0055, 0x0303, 0x0168},
    {0x0055, 0x0304, 0x016A},
    {0x0055, 0x0306, 0x016C},
    {0x0055, 0x0308, 0x00DC},
    {0x0055, 0x0309, 0x1EE6},
    {0x0055, 0x030A, 0x016E},
    {0x0055, 0x030B, 0x0170},
    {0x0055, 0x030C, 0x01D3},
    {0x0055, 0x030F, 0x0214},
    {0x0055, 0x0311, 0x0216},
    {0x0055, 0x031B, 0x01AF},
    {0x0055, 0x0323, 0x1EE4},
    {0x0055, 0x0324, 0x1E72},
    {0x0056, 0x0303, 0x1E7C},
    {0x0056, 0x0323, 0x1E7E},
    {0x0057, 0x0300, 0x1E80},
    {0x0057, 0x0301, 0x1E82},
    {0x0057, 0x0302, 0x0174},
    {0x0057, 0x0307, 0x1E86},
    {0x0057, 0x0308, 0x1E84},
    {0x0057, 0x0323, 0x1E88},
    {0x0058, 0x0307, 0x1E8A},
    {0x0058, 0x0308, 0x1E8C},
    {0x0059, 0x0300, 0x1EF2},
    {0x0059, 0x0301, 0x00DD},
    {0x0059, 0x0302, 0x0176},
    {0x0059, 0x0303, 0x1EF8},
    {0x0059, 0x0304, 0x0232},
    {0x0059, 0x0307, 0x1E8E},
    {0x0059, 0x0308, 0x0178},
    {0x0059, 0x0309, 0x1EF6},
    {0x0059, 0x0323, 0x1EF4},
    {0x005A, 0x0301, 0x0179},
    {0x005A, 0x0302, 0x1E90},
    {0x005A, 0x0307, 0x017B},
    {0x005A, 0x030C, 0x017D},
    {0x005A, 0x0323, 0x1E92},
    {0x0061, 0x0300, 0x00E0},
    {0x0061, 0x0301, 0x00E1},
    {0x0061, 0x0302, 0x00E2},
    {0x0061, 0x0303, 0x00E3},
    {0x0061, 0x0304, 0x0101},
    {0x0061, 0x0306, 0x0103},
    {0x0061, 0x0307, 0x0227},
    {0x0061, 0x0308, 0x00E4},
    {0x0061, 0x0309, 0x1EA3},
    {0x0061, 0x030A, 0x00E5},
    {0x0061, 0x030C, 0x01CE},
    {0x0061, 0x030F, 0x0201},
    {0x0061, 0x0311, 0x0203},
    {0x0061, 0x0323, 0x1EA1},
    {0x0061, 0x0325, 0x1E01},
    {0x0062, 0x0307, 0x1E03},
    {0x0062, 0x0323, 0x1E05},
    {0x0063, 0x0301, 0x0107},
    {0x0063, 0x0302, 0x0109},
    {0x0063, 0x0307, 0x010B},
    {0x0063, 0x030C, 0x010D},
    {0x0063, 0x0327, 0x00E7},
    {0x0064, 0x0307, 0x1E0B},
    {0x0064, 0x030C, 0x010F},
    {0x0064, 0x0323, 0x1E0D},
    {0x0064, 0x0327, 0x1E11},
    {0x0065, 0x0300, 0x00E8},
    {0x0065, 0x0301, 0x00E9},
    {0x0065, 0x0302, 0x00EA},
    {0x0065, 0x0303, 0x1EBD},
    {0x0065, 0x0304, 0x0113},
    {0x0065, 0x0306, 0x0115},
    {0x0065, 0x0307, 0x0117},
    {0x0065, 0x0308, 0x00EB},
    {0x0065, 0x0309, 0x1EBB},
    {0x0065, 0x030C, 0x011B},
    {0x0065, 0x030F, 0x0205},
    {0x0065, 0x0311, 0x0207},
    {0x0065, 0x0323, 0x1EB9},
    {0x0065, 0x0327, 0x0229},
    {0x0066, 0x0307, 0x1E1F},
    {0x0067, 0x0301, 0x01F5},
    {0x0067, 0x0302, 0x011D},
    {0x0067, 0x0304, 0x1E21},
    {0x0067, 0x0306, 0x011F},
    {0x0067, 0x0307, 0x0121},
    {0x0067, 0x030C, 0x01E7},
    {0x0067, 0x0327, 0x0123},
    {0x0068, 0x0302, 0x0125},
    {0x0068, 0x0307, 0x1E23},
    {0x0068, 0x0308, 0x1E27},
    {0x0068, 0x030C, 0x021F},
    {0x0068, 0x0323, 0x1E25},
    {0x0068, 0x0327, 0x1E29},
    {0x0069, 0x0300, 0x00EC},
    {0x0069, 0x0301, 0x00ED},
    {0x0069, 0x0302, 0x00EE},
    {0x0069, 0x0303, 0x0129},
    {0x0069, 0x0304, 0x012B},
    {0x0069, 0x0306, 0x012D},
    {0x0069, 0x0308, 0x00EF},
    {0x0069, 0x0309, 0x1EC9},
    {0x0069, 0x030C, 0x01D0},
    {0x0069, 0x030F, 0x0209},
    {0x0069, 0x0311, 0x020B},
    {0x0069, 0x0323, 0x1ECB},
    {0x006A, 0x0302, 0x0135},
    {0x006A, 0x030C, 0x01F0},
    {0x006B, 0x0301, 0x1E31},
    {0x006B, 0x030C, 0x01E9},
    {0x006B, 0x0323, 0x1E33},
    {0x006B, 0x0327, 0x0137},
    {0x006C, 0x0301, 0x013A},
    {0x006C, 0x030C, 0x013E},
    {0x006C, 0x0323, 0x1E37},
    {0x006C, 0x0327, 0x013C},
    {0x006D, 0x0301, 0x1E3F},
    {0x006D, 0x0307, 0x1E41},
    {0x006D, 0x0323, 0x1E43},
    {0x006E, 0x0300, 0x01F9},
    {0x006E, 0x0301, 0x0144},
    {0x006E, 0x0303, 0x00F1},
    {0x006E, 0x0307, 0x1E45},
    {0x006E, 0x030C, 0x0148},
    {0x006E, 0x0323, 0x1E47},
    {0x006E, 0x0327, 0x0146},
    {0x006F, 0x0300, 0x00F2},
    {0x006F, 0x0301, 0x00F3},
    {0x006F, 0x0302, 0x00F4},
    {0x006F, 0x0303, 0x00F5},
    {0x006F, 0x0304, 0x014D},
    {0x006F, 0x0306, 0x014F},
    {0x006F, 0x0307, 0x022F},
    {0x006F, 0x0308, 0x00F6},
    {0x006F, 0x0309, 0x1ECF},
    {0x006F, 0x030B, 0x0151},
    {0x006F, 0x030C, 0x01D2},
    {0x006F, 0x030F, 0x020D},
    {0x006F, 0x0311, 0x020F},
    {0x006F, 0x031B, 0x01A1},
    {0x006F, 0x0323, 0x1ECD},
    {0x0070, 0x0301, 0x1E55},
    {0x0070, 0x0307, 0x1E57},
    {0x0072, 0x0301, 0x0155},
    {0x0072, 0x0307, 0x1E59},
    {0x0072, 0x030C, 0x0159},
    {0x0072, 0x030F, 0x0211},
    {0x0072, 0x0311, 0x0213},
    {0x0072, 0x0323, 0x1E5B},
    {0x0072, 0x0327, 0x0157},
    {0x0073, 0x0301, 0x015B},
    {0x0073, 0x0302, 0x015D},
    {0x0073, 0x0307, 0x1E61},
    {0x0073, 0x030C, 0x0161},
    {0x0073, 0x0323, 0x1E63},
    {0x0073, 0x0326, 0x0219},
    {0x0073, 0x0327, 0x015F},
    {0x0074, 0x0307, 0x1E6B},
    {0x0074, 0x0308, 0x1E97},
    {0x0074, 0x030C, 0x0165},
    {0x0074, 0x0323, 0x1E6D},
    {0x0074, 0x0326, 0x021B},
    {0x0074, 0x0327, 0x0163},
    {0x0075, 0x0300, 0x00F9},
    {0x0075, 0x0301, 0x00FA},
    {0x0075, 0x0302, 0x00FB},
    {0x0075, 0x0303, 0x0169},
    {0x0075, 0x0304, 0x016B},
    {0x0075, 0x0306, 0x016D},
    {0x0075, 0x0308, 0x00FC},
    {0x0075, 0x0309, 0x1EE7},
    {0x0075, 0x030A, 0x016F},
    {0x0075, 0x030B, 0x0171},
    {0x0075, 0x030C, 0x01D4},
    {0x0075, 0x030F, 0x0215},
    {0x0075, 0x0311, 0x0217},
    {0x0075, 0x031B, 0x01B0},
    {0x0075, 0x0323, 0x1EE5},
    {0x0075, 0x0324, 0x1E73},
    {0x0076, 0x0303, 0x1E7D},
    {0x0076, 0x0323, 0x1E7F},
    {0x0077, 0x0300, 0x1E81},
    {0x0077, 0x0301, 0x1E83},
    {0x0077, 0x0302, 0x0175},
    {0x0077, 0x0307, 0x1E87},
    {0x0077, 0x0308, 0x1E85},
    {0x0077, 0x030A, 0x1E98},
    {0x0077, 0x0323, 0x1E89},
    {0x0078, 0x0307, 0x1E8B},
    {0x0078, 0x0308, 0x1E8D},
    {0x0079, 0x0300, 0x1EF3},
    {0x0079, 0x0301, 0x00FD},
    {0x0079, 0x0302, 0x0177},
    {0x0079, 0x0303, 0x1EF9},
    {0x0079, 0x0304, 0x0233},
    {0x0079, 0x0307, 0x1E8F},
    {0x0079, 0x0308, 0x00FF},
    {0x0079, 0x0309, 0x1EF7},
    {0x0079, 0x030A, 0x1E99},
    {0x0079, 0x0323, 0x1EF5},
    {0x007A, 0x0301, 0x017A},
    {0x007A, 0x0302, 0x1E91},
    {0x007A, 0x0307, 0x017C},
    {0x007A, 0x030C, 0x017E},
    {0x007A, 0x0323, 0x1E93},
};

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v';
}

}  // namespace

std::string normalize(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::u32string composed;
  composed.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!composed.empty()) {
      bool merged = false;
      for (const auto& c : kCompositions) {
        if (c.base == composed.back() && c.mark == cp) {
          composed.back() = c.composed;
          merged = true;
          break;
        }
      }
      if (merged) continue;
    }
    composed.push_back(cp);
  }

  std::u32string out;
  out.reserve(composed.size());
  bool pending_space = false;
  for (char32_t cp : composed) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return utf8::encode(out);
}

TransliterationTable TransliterationTable::load(std::istream& in,
                                                const std::string& source_name) {
  TransliterationTable t;
  t.name_ = source_name;
  std::string line;
  size_t lineno = 0;
  std::set<std::string> seen_keys;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail(ErrorKind::Parse, source_name + ":" + std::to_string(lineno) +
                                 ": expected roman<TAB>script");
    std::string key = line.substr(0, tab);
    std::string val = line.substr(tab + 1);
    if (key.empty())
      fail(ErrorKind::Parse,
           source_name + ":" + std::to_string(lineno) + ": empty key");
    if (!seen_keys.insert(key).second)
      fail(ErrorKind::Parse, source_name + ":" + std::to_string(lineno) +
                                 ": duplicate key '" + key + "'");
    t.forward_.emplace_back(std::move(key), std::move(val));
  }

  // Longest-first so greedy matching prefers the longest cluster.
  auto longest_first = [](const std::pair<std::string, std::string>& a,
                          const std::pair<std::string, std::string>& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  };
  std::sort(t.forward_.begin(), t.forward_.end(), longest_first);

  std::set<std::string> values;
  t.invertible_ = true;
  for (const auto& [k, v] : t.forward_)
    if (!values.insert(v).second) t.invertible_ = false;
  if (t.invertible_) {
    for (const auto& [k, v] : t.forward_) t.inverse_.emplace_back(v, k);
    std::sort(t.inverse_.begin(), t.inverse_.end(), longest_first);
  }
  return t;
}

TransliterationTable TransliterationTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table '" + path + "'");
  return load(in, path);
}

TranslitResult TransliterationTable::apply(
    std::string_view text,
    const std::vector<std::pair<std::string, std::string>>& mapping) const {
  TranslitResult res;
  size_t i = 0;
  while (i < text.size()) {
    const std::pair<std::string, std::string>* hit = nullptr;
    for (const auto& kv : mapping) {
      if (text.compare(i, kv.first.size(), kv.first) == 0) {
        hit = &kv;
        break;  // mapping is longest-first
      }
    }
    if (hit) {
      res.text += hit->second;
      i += hit->first.size();
    } else {
      size_t j = i;
      utf8::next(text, j);  // pass whole codepoints through
      res.text.append(text.substr(i, j - i));
      ++res.passthrough;
      i = j;
    }
  }
  return res;
}

TranslitResult TransliterationTable::to_script(std::string_view text) const {
  return apply(text, forward_);
}

TranslitResult TransliterationTable::to_roman(std::string_view text) const {
  if (!invertible_)
    fail(ErrorKind::DirectionUnsupported,
         "table '" + name_ + "' is not invertible");
  return apply(text, inverse_);
}

}  // namespace toto
