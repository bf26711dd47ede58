#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adapteval::corpus {

enum class Split { kTrain, kVal, kTest };

std::string_view to_string(Split split);
Split split_from_string(std::string_view name);  // throws ParseError

/// One source document paired with its reference summary.
struct DocumentRecord {
  std::string id;
  std::string source;
  std::string summary;
  Split split = Split::kTrain;

  bool operator==(const DocumentRecord&) const = default;
};

/// An ordered, split-labeled collection of documents for one domain.
/// Ordering is stable across loads of the same file; ids are unique.
struct DomainCorpus {
  std::string domain;      // "science", "medical", "government" or custom
  std::string provenance;  // source-dataset identifier (file path on load)
  std::vector<DocumentRecord> records;

  std::size_t split_count(Split split) const;
  const DocumentRecord* find(std::string_view id) const;
};

struct CorpusStats {
  std::size_t n_docs = 0;
  double avg_source_words = 0.0;
  double avg_summary_words = 0.0;
};

/// Removal rules applied by filter_corpus. A word maximum of 0 means no
/// limit on that side.
struct FilterPolicy {
  double extractive_coverage_threshold = 0.90;
  std::size_t max_source_words = 0;
  std::size_t max_summary_words = 0;
};

struct FilterLog {
  std::size_t empty_removed = 0;  // wordless source or summary
  std::size_t extractive_removed = 0;
  std::size_t too_long_source_removed = 0;
  std::size_t too_long_summary_removed = 0;
  std::size_t kept = 0;
};

/// Reads a UTF-8 line-delimited corpus file: one object per line with keys
/// id, source, summary, split. Input order is preserved. Throws ParseError
/// (naming the line) on malformed records and DuplicateIdError on repeated
/// ids.
DomainCorpus load_corpus(const std::filesystem::path& path, std::string domain);

/// Writes the same line-delimited format load_corpus reads.
void save_corpus(const DomainCorpus& corpus, const std::filesystem::path& path);

/// Fraction of summary tokens covered by maximal verbatim source fragments,
/// computed greedily left to right over the shared word segmentation.
/// Returns 0 for an empty summary.
double extractive_coverage(std::string_view source, std::string_view summary);

/// Drops records with a wordless source or summary, records whose summary
/// is extractive (coverage >= threshold), and records whose source/summary
/// exceed the policy's word maxima. A record failing several rules is
/// counted once, in that order. Idempotent.
std::pair<DomainCorpus, FilterLog> filter_corpus(const DomainCorpus& corpus,
                                                 const FilterPolicy& policy);

/// Word-count averages over all records. Throws EmptyCorpusError when there
/// are no records.
CorpusStats compute_stats(const DomainCorpus& corpus);

}  // namespace adapteval::corpus
