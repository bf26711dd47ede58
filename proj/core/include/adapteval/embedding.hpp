#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "adapteval/metrics.hpp"

namespace adapteval::metrics {

/// Produces token embeddings for a text. The backend identity is recorded
/// in evaluation reports for provenance.
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual const std::string& backend_id() const = 0;
  virtual EmbeddingSequence embed(std::string_view text) const = 0;
};

/// Deterministic offline embedder: every word maps to a fixed unit vector
/// derived from its hash, so identical texts embed identically on any
/// platform. Equal words match at cosine 1, unrelated words land near 0.
class StubEmbeddingBackend : public EmbeddingBackend {
 public:
  explicit StubEmbeddingBackend(std::size_t dimension = 16);

  const std::string& backend_id() const override { return id_; }
  EmbeddingSequence embed(std::string_view text) const override;

 private:
  std::size_t dimension_;
  std::string id_;
};

}  // namespace adapteval::metrics
