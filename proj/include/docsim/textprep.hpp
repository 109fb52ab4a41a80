#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace docsim {

/// Ordered list of lowercase alphanumeric word tokens (UTF-8).
using TokenSequence = std::vector<std::string>;

/// Set of lowercase words removed before similarity scoring.
class StopwordSet {
 public:
  StopwordSet() = default;
  /// Words are lowercased on insertion; empty entries are ignored.
  explicit StopwordSet(const std::vector<std::string>& words);

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Splits on every maximal run of non-alphanumeric characters and lowercases each piece.
///
/// ASCII letters and digits are word characters. Outside ASCII, letters of the
/// Latin, Greek and Cyrillic blocks are kept and lowercased with their simple case
/// mapping; every other code point (punctuation, symbols, spaces) separates words.
/// Invalid UTF-8 bytes are treated as separators.
TokenSequence normalize(std::string_view text);

/// Removes tokens contained in `stopwords`, preserving the order of the survivors.
TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordSet& stopwords);

/// normalize followed by remove_stopwords.
TokenSequence preprocess(std::string_view text, const StopwordSet& stopwords);

/// Reads one word per line; `#`-prefixed and blank lines are skipped.
StopwordSet read_stopwords(std::istream& in);
StopwordSet load_stopwords(const std::string& path);

/// Path of the English stop-word list shipped with the library.
std::string default_stopwords_path();

/// Decodes UTF-8 into code points; invalid sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

/// Joins tokens with single spaces.
std::string join(const TokenSequence& tokens);

}  // namespace docsim
