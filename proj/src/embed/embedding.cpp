#include "ksllm/embed/embedding.hpp"

#include <cmath>
#include <string>

#include "ksllm/errors.hpp"
#include "ksllm/vecops/vecops.hpp"

namespace ksllm::embed {

double squared_distance(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw InputError("euclidean_distance: dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
  return vecops::squared_l2_distance(a.values, b.values);
}

double euclidean_distance(const EmbeddingVector& a, const EmbeddingVector& b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace ksllm::embed
