#include "adapteval/embedding.hpp"

#include <cmath>

#include "adapteval/hash.hpp"
#include "adapteval/text.hpp"

namespace adapteval::metrics {

StubEmbeddingBackend::StubEmbeddingBackend(std::size_t dimension)
    : dimension_(dimension),
      id_("stub-embed-v1-d" + std::to_string(dimension)) {}

EmbeddingSequence StubEmbeddingBackend::embed(std::string_view input) const {
  EmbeddingSequence seq;
  for (auto& word : text::segment_words(input)) {
    std::vector<double> vec(dimension_);
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < dimension_; ++k) {
      const std::uint64_t h = fnv1a64_mix(fnv1a64(word), k);
      // map to (-1, 1), offset so the all-zero vector cannot occur
      vec[k] = (static_cast<double>(h >> 11) /
                static_cast<double>(1ull << 53)) * 2.0 - 1.0;
      if (vec[k] == 0.0) vec[k] = 0.5;
      norm_sq += vec[k] * vec[k];
    }
    const double norm = std::sqrt(norm_sq);
    for (auto& x : vec) x /= norm;
    seq.vectors.push_back(std::move(vec));
    seq.tokens.push_back(std::move(word));
  }
  return seq;
}

}  // namespace adapteval::metrics
