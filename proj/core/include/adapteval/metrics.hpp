#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adapteval/text.hpp"
#include "adapteval/vocabulary.hpp"

namespace adapteval::metrics {

/// ROUGE F1 components on a 0..100 scale plus their geometric mean.
struct RougeScores {
  double r1_f1 = 0.0;
  double r2_f1 = 0.0;
  double rl_f1 = 0.0;
  double geomean = 0.0;
};

/// F1 over clipped n-gram overlap. Texts run through the shared word
/// segmentation (lowercase, no stemming). 0 when either side has no
/// n-grams; throws InvalidParameterError when n is 0.
double rouge_n(std::string_view candidate, std::string_view reference,
               std::size_t n);

/// F1 from the longest common subsequence over whole-text token sequences.
double rouge_l(std::string_view candidate, std::string_view reference);

/// Cube root of the product; exactly 0 if any component is 0. Components
/// must lie in [0,100].
double rouge_geomean(double r1_f1, double r2_f1, double rl_f1);

/// ROUGE-1/2/L plus geomean in one pass.
RougeScores score_rouge(std::string_view candidate, std::string_view reference);

struct DvoScore {
  double value = 0.0;              // percentage in [0,100]
  std::size_t scoreable_tokens = 0;
};

/// Domain vocabulary overlap: the percentage of the output's non-stopword
/// word occurrences that appear in the domain vocabulary. Throws
/// NoScoreableTokensError when the output has no non-stopword words.
DvoScore dvo(std::string_view output, const corpus::DomainVocabulary& vocab,
             const text::WordSet& stopwords = text::english_stopwords());
DvoScore dvo(std::string_view output, const text::WordSet& vocab_words,
             const text::WordSet& stopwords);

/// Token embeddings for one text: unit-normalized vectors, one per token.
struct EmbeddingSequence {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;
};

/// BERTScore-style matching: precision is the mean over candidate tokens of
/// the best cosine against any reference token, recall the symmetric
/// quantity, F1 their harmonic mean. Only the matching math lives here;
/// embeddings come from an EmbeddingBackend. Throws EmptyInputError /
/// DimensionError / InvalidParameterError (non-unit vectors).
double greedy_match_f1(const EmbeddingSequence& candidate,
                       const EmbeddingSequence& reference);

}  // namespace adapteval::metrics
