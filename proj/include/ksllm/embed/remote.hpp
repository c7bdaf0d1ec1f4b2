#pragma once

#include <mutex>
#include <optional>

#include "ksllm/embed/embedder.hpp"

namespace ksllm::embed {

// HTTP embedding backend. POSTs {"model": ..., "input": [...]} to the
// configured endpoint and reads {"data": [{"index": i, "embedding": [...]}]}.
// Transport failures are retried with exponential backoff before surfacing a
// TransportError; inconsistent responses (wrong count, mixed dimensions,
// non-finite values) raise ProtocolError without retry.
class RemoteEmbedder : public Embedder {
 public:
  explicit RemoteEmbedder(EmbedderConfig config);

  std::string identity() const override;

 protected:
  std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) override;

 private:
  std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& batch);
  std::string post_with_retries(const std::string& body);

  EmbedderConfig config_;
  std::mutex dim_mutex_;
  std::optional<std::size_t> dim_;  // learned from the first response
};

}  // namespace ksllm::embed
