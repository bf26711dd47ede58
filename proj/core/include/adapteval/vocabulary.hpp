#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "adapteval/corpus.hpp"
#include "adapteval/text.hpp"

namespace adapteval::corpus {

inline constexpr std::size_t kDefaultVocabularySize = 10000;

struct VocabularyEntry {
  std::string word;
  std::uint64_t count = 0;

  bool operator==(const VocabularyEntry&) const = default;
};

/// Top-K most frequent non-stopword words of a domain. Entries are sorted
/// by count descending, ties broken lexicographically ascending; all words
/// are lowercase.
struct DomainVocabulary {
  std::string domain;
  std::size_t size_limit = kDefaultVocabularySize;
  std::string stopword_list_id;
  std::vector<VocabularyEntry> entries;

  bool operator==(const DomainVocabulary&) const = default;
};

/// Counts word occurrences over source+summary text of the training split,
/// drops stopwords, and keeps the size_limit most frequent words. Throws
/// InvalidParameterError when size_limit is 0.
DomainVocabulary build_vocabulary(
    const DomainCorpus& corpus, std::size_t size_limit = kDefaultVocabularySize,
    const text::WordSet& stopwords = text::english_stopwords(),
    std::string stopword_list_id = std::string(text::kEnglishStopwordsId));

/// Membership set over the vocabulary's words.
text::WordSet vocabulary_words(const DomainVocabulary& vocab);

/// File format: a "# domain=... size_limit=... stopwords=..." header line,
/// then one "word<TAB>count" line per entry. Byte-identical for identical
/// inputs.
void write_vocabulary(const DomainVocabulary& vocab,
                      const std::filesystem::path& path);
std::string vocabulary_to_string(const DomainVocabulary& vocab);
DomainVocabulary read_vocabulary(const std::filesystem::path& path);

}  // namespace adapteval::corpus
