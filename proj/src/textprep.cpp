#include "docsim/textprep.hpp"

#include <fstream>

#include "docsim/error.hpp"

namespace docsim {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

// Blocks where upper/lower case letters alternate. `upper_even` says whether
// the even code point of each pair is the capital.
char32_t alternating_lower(char32_t c, bool upper_even) {
  const bool even = (c % 2) == 0;
  return even == upper_even ? c + 1 : c;
}

bool is_word_char(char32_t c) {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  }
  if (in(c, 0xC0, 0xFF)) return c != 0xD7 && c != 0xF7;
  if (in(c, 0x100, 0x24F)) return true;   // Latin Extended-A/B
  if (in(c, 0x300, 0x36F)) return true;   // combining diacritics
  if (in(c, 0x370, 0x3FF)) return c != 0x37E && c != 0x387 && c != 0x375 && c != 0x384 && c != 0x385;
  if (in(c, 0x400, 0x4FF)) return !in(c, 0x482, 0x489);
  if (in(c, 0x1E00, 0x1EFF)) return true;  // Latin Extended Additional
  return false;
}

char32_t to_lower(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') ? c + 32 : c;
  if (in(c, 0xC0, 0xDE) && c != 0xD7) return c + 0x20;
  if (c == 0x130) return U'i';
  if (c == 0x178) return 0xFF;
  if (in(c, 0x100, 0x137) || in(c, 0x14A, 0x177)) return alternating_lower(c, true);
  if (in(c, 0x139, 0x148) || in(c, 0x179, 0x17E)) return alternating_lower(c, false);
  if (in(c, 0x1CD, 0x1DC)) return alternating_lower(c, false);
  if (in(c, 0x1DE, 0x1EF) || in(c, 0x1F8, 0x21F) || in(c, 0x222, 0x233)) {
    return alternating_lower(c, true);
  }
  if (c == 0x386) return 0x3AC;
  if (in(c, 0x388, 0x38A)) return c + 0x25;
  if (c == 0x38C) return 0x3CC;
  if (c == 0x38E || c == 0x38F) return c + 0x3F;
  if (in(c, 0x391, 0x3A9) && c != 0x3A2) return c + 0x20;
  if (in(c, 0x400, 0x40F)) return c + 0x50;
  if (in(c, 0x410, 0x42F)) return c + 0x20;
  if (in(c, 0x460, 0x481) || in(c, 0x48A, 0x4BF) || in(c, 0x4D0, 0x4FF)) {
    return alternating_lower(c, true);
  }
  if (in(c, 0x4C1, 0x4CE)) return alternating_lower(c, false);
  if (in(c, 0x1E00, 0x1E95) || in(c, 0x1EA0, 0x1EFF)) return alternating_lower(c, true);
  return c;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      extra = 1, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3, cp = b0 & 0x07, min = 0x10000;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + extra >= text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok || cp < min || cp > 0x10FFFF || in(cp, 0xD800, 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

TokenSequence normalize(std::string_view text) {
  TokenSequence tokens;
  std::u32string current;
  for (char32_t c : decode_utf8(text)) {
    if (is_word_char(c)) {
      current.push_back(to_lower(c));
    } else if (!current.empty()) {
      tokens.push_back(encode_utf8(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(encode_utf8(current));
  return tokens;
}

StopwordSet::StopwordSet(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    auto lowered = normalize(w);
    // Entries like "don't" become two tokens, both of which are stop words.
    for (auto& t : lowered) words_.insert(std::move(t));
  }
}

bool StopwordSet::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordSet& stopwords) {
  TokenSequence out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stopwords.contains(t)) out.push_back(t);
  }
  return out;
}

TokenSequence preprocess(std::string_view text, const StopwordSet& stopwords) {
  return remove_stopwords(normalize(text), stopwords);
}

StopwordSet read_stopwords(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.push_back(line);
  }
  return StopwordSet(words);
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssetError("cannot open stop-word file: " + path);
  return read_stopwords(in);
}

std::string default_stopwords_path() { return std::string(DOCSIM_DATA_DIR) + "/stopwords_en.txt"; }

std::string join(const TokenSequence& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace docsim
