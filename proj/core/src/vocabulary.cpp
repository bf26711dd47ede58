#include "adapteval/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "adapteval/errors.hpp"

namespace adapteval::corpus {

DomainVocabulary build_vocabulary(const DomainCorpus& corpus,
                                  std::size_t size_limit,
                                  const text::WordSet& stopwords,
                                  std::string stopword_list_id) {
  if (size_limit == 0) {
    throw InvalidParameterError("build_vocabulary: size_limit must be positive");
  }

  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& record : corpus.records) {
    if (record.split != Split::kTrain) continue;
    for (const std::string_view field : {std::string_view(record.source),
                                         std::string_view(record.summary)}) {
      for (auto& word : text::segment_words(field)) {
        if (stopwords.contains(word)) continue;
        ++counts[std::move(word)];
      }
    }
  }

  std::vector<VocabularyEntry> entries;
  entries.reserve(counts.size());
  for (auto& [word, count] : counts) {
    entries.push_back(VocabularyEntry{word, count});
  }
  std::sort(entries.begin(), entries.end(),
            [](const VocabularyEntry& a, const VocabularyEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.word < b.word;
            });
  if (entries.size() > size_limit) entries.resize(size_limit);

  DomainVocabulary vocab;
  vocab.domain = corpus.domain;
  vocab.size_limit = size_limit;
  vocab.stopword_list_id = std::move(stopword_list_id);
  vocab.entries = std::move(entries);
  return vocab;
}

text::WordSet vocabulary_words(const DomainVocabulary& vocab) {
  text::WordSet words;
  words.reserve(vocab.entries.size());
  for (const auto& entry : vocab.entries) words.insert(entry.word);
  return words;
}

std::string vocabulary_to_string(const DomainVocabulary& vocab) {
  std::ostringstream out;
  out << "# domain=" << vocab.domain << " size_limit=" << vocab.size_limit
      << " stopwords=" << vocab.stopword_list_id << '\n';
  for (const auto& entry : vocab.entries) {
    out << entry.word << '\t' << entry.count << '\n';
  }
  return out.str();
}

void write_vocabulary(const DomainVocabulary& vocab,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write vocabulary file: " + path.string());
  }
  out << vocabulary_to_string(vocab);
}

DomainVocabulary read_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open vocabulary file: " + path.string());
  }

  DomainVocabulary vocab;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream header(line.substr(1));
      std::string item;
      while (header >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "domain") {
          vocab.domain = value;
        } else if (key == "size_limit") {
          vocab.size_limit = std::stoull(value);
        } else if (key == "stopwords") {
          vocab.stopword_list_id = value;
        }
      }
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected word<TAB>count");
    }
    VocabularyEntry entry;
    entry.word = line.substr(0, tab);
    try {
      entry.count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": bad count");
    }
    vocab.entries.push_back(std::move(entry));
  }
  return vocab;
}

}  // namespace adapteval::corpus
