#pragma once

#include <string>
#include <vector>

#include "ksllm/embed/embedder.hpp"
#include "ksllm/embed/embedding_cache.hpp"
#include "ksllm/text/sentences.hpp"

namespace ksllm::select {

enum class QueryMode {
  triples,   // query text is the joint rendering of the constructed triples
  question,  // query text is the raw question (KS-Q variant)
};

struct SelectionQuery {
  QueryMode mode = QueryMode::triples;
  std::string text;  // non-empty
};

// The min(k, n) sentences nearest to the query by Euclidean distance.
// Indices are distinct, distances non-decreasing, and sentences aligned with
// indices; equal distances resolve to the lower sentence index.
struct SelectionResult {
  std::vector<int> indices;
  std::vector<double> distances;
  std::vector<text::Sentence> sentences;
  int k_requested = 0;
};

// Embeds the query once and each sentence once (through `cache` when given),
// then ranks by distance. Empty sentence list yields an empty result.
SelectionResult select_evidence(const SelectionQuery& query,
                                const std::vector<text::Sentence>& sentences, int k,
                                embed::Embedder& embedder, embed::EmbeddingCache* cache);

// Same ranking for a query vector the caller already computed (used by the
// averaged-triple-embedding variant).
SelectionResult select_with_query_vector(const embed::EmbeddingVector& query_vector,
                                         const std::vector<text::Sentence>& sentences, int k,
                                         embed::Embedder& embedder,
                                         embed::EmbeddingCache* cache);

}  // namespace ksllm::select
