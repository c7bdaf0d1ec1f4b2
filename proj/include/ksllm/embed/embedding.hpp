#pragma once

#include <cstddef>
#include <vector>

namespace ksllm::embed {

// Fixed-dimension real vector produced by an embedder. Components are finite;
// all vectors from one embedder instance share the same dimension.
struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }

  bool operator==(const EmbeddingVector&) const = default;
};

// Euclidean (L2) distance, computed in double precision. Throws InputError on
// dimension mismatch.
double euclidean_distance(const EmbeddingVector& a, const EmbeddingVector& b);

// Squared distance; same contract, saves the sqrt in ranking loops.
double squared_distance(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace ksllm::embed
