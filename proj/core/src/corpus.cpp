#include "adapteval/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "adapteval/errors.hpp"
#include "adapteval/text.hpp"

namespace adapteval::corpus {

using nlohmann::json;

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "train";
}

Split split_from_string(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "val" || name == "validation") return Split::kVal;
  if (name == "test") return Split::kTest;
  throw ParseError("unknown split label: " + std::string(name));
}

std::size_t DomainCorpus::split_count(Split split) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [&](const DocumentRecord& r) { return r.split == split; }));
}

const DocumentRecord* DomainCorpus::find(std::string_view id) const {
  for (const auto& record : records) {
    if (record.id == id) return &record;
  }
  return nullptr;
}

DomainCorpus load_corpus(const std::filesystem::path& path, std::string domain) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open corpus file: " + path.string());
  }

  DomainCorpus corpus;
  corpus.domain = std::move(domain);
  corpus.provenance = path.string();

  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": invalid record: " + e.what());
    }
    for (const char* key : {"id", "source", "summary", "split"}) {
      if (!obj.contains(key) || !obj[key].is_string()) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) +
                         ": missing field '" + key + "'");
      }
    }

    DocumentRecord record;
    record.id = obj["id"].get<std::string>();
    record.source = obj["source"].get<std::string>();
    record.summary = obj["summary"].get<std::string>();
    try {
      record.split = split_from_string(obj["split"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " +
                       e.what());
    }

    if (!seen_ids.insert(record.id).second) {
      throw DuplicateIdError(path.string() + ":" + std::to_string(line_no) +
                             ": duplicate id '" + record.id + "'");
    }
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

void save_corpus(const DomainCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write corpus file: " + path.string());
  }
  for (const auto& record : corpus.records) {
    json obj;
    obj["id"] = record.id;
    obj["source"] = record.source;
    obj["summary"] = record.summary;
    obj["split"] = std::string(to_string(record.split));
    out << obj.dump() << '\n';
  }
}

double extractive_coverage(std::string_view source, std::string_view summary) {
  const std::vector<std::string> src = text::segment_words(source);
  const std::vector<std::string> sum = text::segment_words(summary);
  if (sum.empty()) return 0.0;

  // Greedy maximal fragment matching: at each summary position take the
  // longest run that appears verbatim in the source, count its tokens,
  // and continue after it.
  std::size_t covered = 0;
  std::size_t i = 0;
  while (i < sum.size()) {
    std::size_t best = 0;
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (src[j] != sum[i]) continue;
      std::size_t len = 0;
      while (i + len < sum.size() && j + len < src.size() &&
             src[j + len] == sum[i + len]) {
        ++len;
      }
      best = std::max(best, len);
    }
    if (best > 0) {
      covered += best;
      i += best;
    } else {
      ++i;
    }
  }
  return static_cast<double>(covered) / static_cast<double>(sum.size());
}

std::pair<DomainCorpus, FilterLog> filter_corpus(const DomainCorpus& corpus,
                                                 const FilterPolicy& policy) {
  if (policy.extractive_coverage_threshold < 0.0 ||
      policy.extractive_coverage_threshold > 1.0) {
    throw InvalidParameterError("extractive_coverage_threshold must be in [0,1]");
  }

  DomainCorpus kept;
  kept.domain = corpus.domain;
  kept.provenance = corpus.provenance;
  FilterLog log;

  for (const auto& record : corpus.records) {
    if (text::count_words(record.source) == 0 ||
        text::count_words(record.summary) == 0) {
      ++log.empty_removed;
      continue;
    }
    if (extractive_coverage(record.source, record.summary) >=
        policy.extractive_coverage_threshold) {
      ++log.extractive_removed;
      continue;
    }
    if (policy.max_source_words > 0 &&
        text::count_words(record.source) > policy.max_source_words) {
      ++log.too_long_source_removed;
      continue;
    }
    if (policy.max_summary_words > 0 &&
        text::count_words(record.summary) > policy.max_summary_words) {
      ++log.too_long_summary_removed;
      continue;
    }
    kept.records.push_back(record);
  }
  log.kept = kept.records.size();
  return {std::move(kept), log};
}

CorpusStats compute_stats(const DomainCorpus& corpus) {
  if (corpus.records.empty()) {
    throw EmptyCorpusError("compute_stats: corpus has no records");
  }
  CorpusStats stats;
  stats.n_docs = corpus.records.size();
  double source_words = 0.0;
  double summary_words = 0.0;
  for (const auto& record : corpus.records) {
    source_words += static_cast<double>(text::count_words(record.source));
    summary_words += static_cast<double>(text::count_words(record.summary));
  }
  stats.avg_source_words = source_words / static_cast<double>(stats.n_docs);
  stats.avg_summary_words = summary_words / static_cast<double>(stats.n_docs);
  return stats;
}

}  // namespace adapteval::corpus
