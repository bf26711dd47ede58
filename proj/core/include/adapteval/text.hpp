#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace adapteval::text {

using WordSet = std::unordered_set<std::string>;

/// Lowercased word tokens of a UTF-8 string.
///
/// A token is a maximal run of letter/digit codepoints; an apostrophe
/// surrounded by word characters stays inside its token ("don't" is one
/// word). Punctuation and whitespace never form tokens, and tokens made
/// entirely of ASCII digits are dropped. Every component that counts
/// words (vocabulary building, corpus statistics, ROUGE, DVO) goes
/// through this one function so their token streams agree.
std::vector<std::string> segment_words(std::string_view text);

/// Number of tokens segment_words would produce.
std::size_t count_words(std::string_view text);

/// Trim ASCII whitespace from both ends.
std::string_view trim(std::string_view s);

/// Lowercase a single already-segmented word (ASCII + Latin-1 range).
std::string lowercase(std::string_view word);

inline constexpr std::string_view kEnglishStopwordsId = "english-v1";

/// Built-in English stopword list (id "english-v1"). Pinned: the exact
/// contents are part of the vocabulary file contract.
const WordSet& english_stopwords();

}  // namespace adapteval::text
