#include "ksllm/select/select.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ksllm/errors.hpp"

namespace ksllm::select {

namespace {

std::vector<embed::EmbeddingVector> embed_texts(embed::Embedder& embedder,
                                                embed::EmbeddingCache* cache,
                                                const std::vector<std::string>& texts) {
  if (cache) return cache->cached_embed(embedder, texts);
  return embedder.embed(texts);
}

SelectionResult rank(const embed::EmbeddingVector& query_vector,
                     const std::vector<text::Sentence>& sentences,
                     const std::vector<embed::EmbeddingVector>& sentence_vectors, int k) {
  SelectionResult result;
  result.k_requested = k;

  const std::size_t n = sentences.size();
  std::vector<double> squared(n);
  for (std::size_t i = 0; i < n; ++i) {
    squared[i] = embed::squared_distance(sentence_vectors[i], query_vector);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](int a, int b) {
                      const double da = squared[static_cast<std::size_t>(a)];
                      const double db = squared[static_cast<std::size_t>(b)];
                      return da < db || (da == db && a < b);
                    });

  result.indices.reserve(take);
  result.distances.reserve(take);
  result.sentences.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const int idx = order[i];
    result.indices.push_back(idx);
    result.distances.push_back(std::sqrt(squared[static_cast<std::size_t>(idx)]));
    result.sentences.push_back(sentences[static_cast<std::size_t>(idx)]);
  }
  return result;
}

}  // namespace

SelectionResult select_with_query_vector(const embed::EmbeddingVector& query_vector,
                                         const std::vector<text::Sentence>& sentences, int k,
                                         embed::Embedder& embedder,
                                         embed::EmbeddingCache* cache) {
  if (k < 1) throw InputError("select_evidence: k must be >= 1");
  if (sentences.empty()) {
    SelectionResult empty;
    empty.k_requested = k;
    return empty;
  }
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const auto& s : sentences) texts.push_back(s.text);
  const auto vectors = embed_texts(embedder, cache, texts);
  return rank(query_vector, sentences, vectors, k);
}

SelectionResult select_evidence(const SelectionQuery& query,
                                const std::vector<text::Sentence>& sentences, int k,
                                embed::Embedder& embedder, embed::EmbeddingCache* cache) {
  if (k < 1) throw InputError("select_evidence: k must be >= 1");
  if (query.text.empty()) throw InputError("select_evidence: query text is empty");
  if (sentences.empty()) {
    SelectionResult empty;
    empty.k_requested = k;
    return empty;
  }

  // one batch: query first, then every sentence, each embedded exactly once
  std::vector<std::string> texts;
  texts.reserve(sentences.size() + 1);
  texts.push_back(query.text);
  for (const auto& s : sentences) texts.push_back(s.text);

  const auto vectors = embed_texts(embedder, cache, texts);
  const std::vector<embed::EmbeddingVector> sentence_vectors(vectors.begin() + 1, vectors.end());
  return rank(vectors.front(), sentences, sentence_vectors, k);
}

}  // namespace ksllm::select
