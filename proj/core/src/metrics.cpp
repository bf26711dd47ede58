#include "adapteval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "adapteval/errors.hpp"

namespace adapteval::metrics {
namespace {

double f1(double precision, double recall) {
  const double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

// n-gram multiset keyed by joined tokens. \x1f never occurs inside a word.
std::unordered_map<std::string, std::size_t> ngram_counts(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

double rouge_n(std::string_view candidate, std::string_view reference,
               std::size_t n) {
  if (n == 0) {
    throw InvalidParameterError("rouge_n: n must be >= 1");
  }
  const auto cand_tokens = text::segment_words(candidate);
  const auto ref_tokens = text::segment_words(reference);
  const auto cand = ngram_counts(cand_tokens, n);
  const auto ref = ngram_counts(ref_tokens, n);

  std::size_t cand_total = 0;
  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand) {
    cand_total += count;
    const auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  std::size_t ref_total = 0;
  for (const auto& [gram, count] : ref) ref_total += count;

  if (cand_total == 0 || ref_total == 0) return 0.0;
  const double precision =
      static_cast<double>(overlap) / static_cast<double>(cand_total);
  const double recall =
      static_cast<double>(overlap) / static_cast<double>(ref_total);
  return 100.0 * f1(precision, recall);
}

double rouge_l(std::string_view candidate, std::string_view reference) {
  const auto cand = text::segment_words(candidate);
  const auto ref = text::segment_words(reference);
  if (cand.empty() || ref.empty()) return 0.0;
  const double lcs = static_cast<double>(lcs_length(cand, ref));
  const double precision = lcs / static_cast<double>(cand.size());
  const double recall = lcs / static_cast<double>(ref.size());
  return 100.0 * f1(precision, recall);
}

double rouge_geomean(double r1_f1, double r2_f1, double rl_f1) {
  for (double component : {r1_f1, r2_f1, rl_f1}) {
    if (!(component >= 0.0 && component <= 100.0)) {
      throw InvalidParameterError("rouge_geomean: component outside [0,100]");
    }
  }
  if (r1_f1 == 0.0 || r2_f1 == 0.0 || rl_f1 == 0.0) return 0.0;
  return std::cbrt(r1_f1 * r2_f1 * rl_f1);
}

RougeScores score_rouge(std::string_view candidate, std::string_view reference) {
  RougeScores scores;
  scores.r1_f1 = rouge_n(candidate, reference, 1);
  scores.r2_f1 = rouge_n(candidate, reference, 2);
  scores.rl_f1 = rouge_l(candidate, reference);
  scores.geomean = rouge_geomean(scores.r1_f1, scores.r2_f1, scores.rl_f1);
  return scores;
}

DvoScore dvo(std::string_view output, const corpus::DomainVocabulary& vocab,
             const text::WordSet& stopwords) {
  return dvo(output, corpus::vocabulary_words(vocab), stopwords);
}

DvoScore dvo(std::string_view output, const text::WordSet& vocab_words,
             const text::WordSet& stopwords) {
  std::size_t scoreable = 0;
  std::size_t hits = 0;
  for (const auto& word : text::segment_words(output)) {
    if (stopwords.contains(word)) continue;
    ++scoreable;
    if (vocab_words.contains(word)) ++hits;
  }
  if (scoreable == 0) {
    throw NoScoreableTokensError("dvo: output has no non-stopword words");
  }
  DvoScore score;
  score.scoreable_tokens = scoreable;
  score.value = 100.0 * static_cast<double>(hits) / static_cast<double>(scoreable);
  return score;
}

namespace {

void check_embedding_sequence(const EmbeddingSequence& seq, const char* side) {
  if (seq.tokens.empty() || seq.vectors.empty()) {
    throw EmptyInputError(std::string("greedy_match_f1: empty ") + side);
  }
  if (seq.tokens.size() != seq.vectors.size()) {
    throw DimensionError(std::string("greedy_match_f1: ") + side +
                         " token/vector count mismatch");
  }
  for (const auto& v : seq.vectors) {
    double norm_sq = 0.0;
    for (double x : v) norm_sq += x * x;
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-6) {
      throw InvalidParameterError(
          std::string("greedy_match_f1: ") + side + " vector is not unit length");
    }
  }
}

double directed_mean_best_cosine(const std::vector<std::vector<double>>& from,
                                 const std::vector<std::vector<double>>& to) {
  double total = 0.0;
  for (const auto& f : from) {
    double best = -1.0;
    for (const auto& t : to) {
      double dot = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) dot += f[k] * t[k];
      best = std::max(best, dot);
    }
    total += best;
  }
  return total / static_cast<double>(from.size());
}

}  // namespace

double greedy_match_f1(const EmbeddingSequence& candidate,
                       const EmbeddingSequence& reference) {
  check_embedding_sequence(candidate, "candidate");
  check_embedding_sequence(reference, "reference");
  const std::size_t dim = candidate.vectors.front().size();
  for (const auto* seq : {&candidate, &reference}) {
    for (const auto& v : seq->vectors) {
      if (v.size() != dim) {
        throw DimensionError("greedy_match_f1: embedding dimension mismatch");
      }
    }
  }
  const double precision =
      directed_mean_best_cosine(candidate.vectors, reference.vectors);
  const double recall =
      directed_mean_best_cosine(reference.vectors, candidate.vectors);
  const double denom = precision + recall;
  if (std::abs(denom) < 1e-12) return 0.0;
  return 2.0 * precision * recall / denom;
}

}  // namespace adapteval::metrics
