#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ksllm/embed/embedding.hpp"

namespace ksllm::embed {

struct EmbedderConfig {
  enum class Kind { remote, hash };

  Kind kind = Kind::hash;
  int dim = 64;              // hash kind only; >= 8
  std::string endpoint_url;  // remote kind only
  std::string model_name;    // remote kind only
  std::string api_key_env;   // env var holding the bearer token, may be empty
  std::chrono::milliseconds timeout{30000};
  int max_batch = 64;
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};

  void validate() const;  // throws InputError on inconsistent settings

  // Cache-key component; two embedders with equal identity produce equal
  // vectors for equal texts.
  std::string identity() const;
};

// Common embedder contract. embed() preserves input order and count and
// counts invocations so cache tests can assert "zero backend calls".
class Embedder {
 public:
  virtual ~Embedder() = default;

  std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts);

  virtual std::string identity() const = 0;

  std::uint64_t invocation_count() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) = 0;

 private:
  std::atomic<std::uint64_t> calls_{0};
};

// Deterministic offline embedding: feature hashing over lowercased word
// unigrams and bigrams with FNV-1a 64 (bucket = hash mod dim, sign = bit 63),
// L2-normalized. A text with no features (or exact cancellation) maps to the
// basis vector e_0. Requires dim >= 8.
EmbeddingVector hash_embed(std::string_view text, int dim);

class HashEmbedder : public Embedder {
 public:
  explicit HashEmbedder(int dim);

  std::string identity() const override;
  int dim() const { return dim_; }

 protected:
  std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) override;

 private:
  int dim_;
};

// Builds the embedder named by config (HashEmbedder or RemoteEmbedder).
std::unique_ptr<Embedder> make_embedder(const EmbedderConfig& config);

}  // namespace ksllm::embed
