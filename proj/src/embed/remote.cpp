#include "ksllm/embed/remote.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"
#include "ksllm/util/http.hpp"

namespace ksllm::embed {

using nlohmann::json;

RemoteEmbedder::RemoteEmbedder(EmbedderConfig config) : config_(std::move(config)) {
  config_.validate();
}

std::string RemoteEmbedder::identity() const { return config_.identity(); }

std::vector<EmbeddingVector> RemoteEmbedder::do_embed(const std::vector<std::string>& texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  const std::size_t batch = static_cast<std::size_t>(config_.max_batch);
  for (std::size_t begin = 0; begin < texts.size(); begin += batch) {
    const std::size_t end = std::min(texts.size(), begin + batch);
    std::vector<std::string> chunk(texts.begin() + static_cast<std::ptrdiff_t>(begin),
                                   texts.begin() + static_cast<std::ptrdiff_t>(end));
    auto vectors = embed_batch(chunk);
    for (auto& v : vectors) out.push_back(std::move(v));
  }
  return out;
}

std::string RemoteEmbedder::post_with_retries(const std::string& body) {
  const util::ParsedUrl url = util::parse_url(config_.endpoint_url);
  const util::RetryPolicy policy{config_.max_retries, config_.backoff_base, 2.0};

  std::string bearer;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str())) bearer = key;
  }

  std::string last_error;
  const int attempts = policy.max_retries + 1;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(util::backoff_delay(policy, attempt - 1));

    httplib::Client client(url.origin);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(config_.timeout));
    client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(config_.timeout));
    httplib::Headers headers;
    if (!bearer.empty()) headers.emplace("Authorization", "Bearer " + bearer);

    auto res = client.Post(url.path, headers, body, "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 408 || res->status == 429 || res->status >= 500) {
      last_error = "http status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw ProtocolError("embedding endpoint returned status " + std::to_string(res->status));
    }
    return res->body;
  }
  throw TransportError("embedding request failed after " + std::to_string(attempts) +
                           " attempts: " + last_error,
                       attempts);
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(const std::vector<std::string>& batch) {
  json body;
  body["model"] = config_.model_name;
  body["input"] = batch;

  const std::string response = post_with_retries(body.dump());

  json parsed;
  try {
    parsed = json::parse(response);
  } catch (const json::exception& e) {
    throw ProtocolError(std::string("embedding response is not JSON: ") + e.what());
  }
  if (!parsed.contains("data") || !parsed["data"].is_array()) {
    throw ProtocolError("embedding response missing 'data' array");
  }
  const auto& data = parsed["data"];
  if (data.size() != batch.size()) {
    throw ProtocolError("embedding response has " + std::to_string(data.size()) +
                        " entries for " + std::to_string(batch.size()) + " inputs");
  }

  std::vector<EmbeddingVector> out(batch.size());
  std::vector<bool> filled(batch.size(), false);
  for (const auto& item : data) {
    if (!item.contains("index") || !item.contains("embedding")) {
      throw ProtocolError("embedding response entry missing 'index' or 'embedding'");
    }
    const auto idx = item["index"].get<std::int64_t>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= batch.size() ||
        filled[static_cast<std::size_t>(idx)]) {
      throw ProtocolError("embedding response has bad or duplicate index " + std::to_string(idx));
    }
    EmbeddingVector v;
    v.values = item["embedding"].get<std::vector<double>>();
    if (v.values.empty()) throw ProtocolError("embedding response entry has empty vector");
    for (double x : v.values) {
      if (!std::isfinite(x)) throw ProtocolError("embedding response contains non-finite value");
    }
    out[static_cast<std::size_t>(idx)] = std::move(v);
    filled[static_cast<std::size_t>(idx)] = true;
  }

  std::lock_guard<std::mutex> lock(dim_mutex_);
  for (const auto& v : out) {
    if (!dim_) dim_ = v.dim();
    if (v.dim() != *dim_) {
      throw ProtocolError("embedding response dimension " + std::to_string(v.dim()) +
                          " does not match established dimension " + std::to_string(*dim_));
    }
  }
  return out;
}

}  // namespace ksllm::embed
