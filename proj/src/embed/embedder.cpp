#include "ksllm/embed/embedder.hpp"

#include <cctype>
#include <cmath>

#include "ksllm/embed/remote.hpp"
#include "ksllm/errors.hpp"
#include "ksllm/util/digest.hpp"
#include "ksllm/vecops/vecops.hpp"

namespace ksllm::embed {

void EmbedderConfig::validate() const {
  if (kind == Kind::hash) {
    if (dim < 8) throw InputError("embedder: hash kind requires dim >= 8");
  } else {
    if (endpoint_url.empty()) throw InputError("embedder: remote kind requires endpoint_url");
    if (model_name.empty()) throw InputError("embedder: remote kind requires model_name");
  }
  if (max_batch < 1) throw InputError("embedder: max_batch must be >= 1");
}

std::string EmbedderConfig::identity() const {
  if (kind == Kind::hash) {
    return "hash-fnv1a64:dim=" + std::to_string(dim);
  }
  return "remote:" + model_name + ":" + endpoint_url;
}

std::vector<EmbeddingVector> Embedder::embed(const std::vector<std::string>& texts) {
  if (texts.empty()) throw InputError("embed: texts list is empty");
  for (const auto& t : texts) {
    if (t.empty()) throw InputError("embed: empty text is not embeddable");
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  auto vectors = do_embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProtocolError("embed: backend returned " + std::to_string(vectors.size()) +
                        " vectors for " + std::to_string(texts.size()) + " texts");
  }
  return vectors;
}

namespace {

// Words are maximal runs of alphanumeric bytes (bytes >= 0x80 included, so
// UTF-8 words survive); everything else separates.
std::vector<std::string> feature_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || uc >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

inline void accumulate_feature(std::string_view feature, std::vector<double>& values) {
  const std::uint64_t h = util::fnv1a64(feature);
  const std::size_t bucket = h % values.size();
  values[bucket] += (h >> 63) ? -1.0 : 1.0;
}

}  // namespace

EmbeddingVector hash_embed(std::string_view text, int dim) {
  if (dim < 8) throw InputError("hash_embed: dim must be >= 8");

  EmbeddingVector v;
  v.values.assign(static_cast<std::size_t>(dim), 0.0);

  const auto words = feature_words(text);
  for (const auto& w : words) {
    accumulate_feature(w, v.values);
  }
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    accumulate_feature(words[i] + " " + words[i + 1], v.values);
  }

  const double norm_sq = vecops::sum_of_squares(v.values);
  if (norm_sq == 0.0) {
    v.values[0] = 1.0;
    return v;
  }
  vecops::scale_in_place(v.values, 1.0 / std::sqrt(norm_sq));
  return v;
}

HashEmbedder::HashEmbedder(int dim) : dim_(dim) {
  if (dim_ < 8) throw InputError("HashEmbedder: dim must be >= 8");
}

std::string HashEmbedder::identity() const { return "hash-fnv1a64:dim=" + std::to_string(dim_); }

std::vector<EmbeddingVector> HashEmbedder::do_embed(const std::vector<std::string>& texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(hash_embed(t, dim_));
  }
  return out;
}

std::unique_ptr<Embedder> make_embedder(const EmbedderConfig& config) {
  config.validate();
  if (config.kind == EmbedderConfig::Kind::hash) {
    return std::make_unique<HashEmbedder>(config.dim);
  }
  return std::make_unique<RemoteEmbedder>(config);
}

}  // namespace ksllm::embed
