#include "ksllm/embed/embedding_cache.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"
#include "ksllm/util/digest.hpp"

namespace ksllm::embed {

using nlohmann::json;

namespace {

std::string entry_digest(const std::string& identity, const std::string& text) {
  return util::sha256_hex(identity + "\x1f" + text);
}

std::atomic<std::uint64_t> g_temp_counter{0};

}  // namespace

EmbeddingCache::EmbeddingCache(std::filesystem::path cache_dir)
    : root_(std::move(cache_dir)) {
  root_ /= "emb";
  std::filesystem::create_directories(root_);
}

std::filesystem::path EmbeddingCache::entry_path(const std::string& digest) const {
  return root_ / digest.substr(0, 2) / (digest + ".json");
}

std::optional<EmbeddingVector> EmbeddingCache::read_entry(const std::string& digest,
                                                          const std::string& identity) {
  const auto path = entry_path(digest);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  try {
    json entry = json::parse(in);
    EmbeddingVector v;
    v.values = entry.at("values").get<std::vector<double>>();
    const auto dim = entry.at("dim").get<std::size_t>();
    const auto owner = entry.at("embedder").get<std::string>();
    if (dim != v.values.size() || owner != identity || v.values.empty()) {
      throw IoError("inconsistent entry");
    }
    for (double x : v.values) {
      if (!std::isfinite(x)) throw IoError("non-finite value");
    }
    return v;
  } catch (const std::exception&) {
    // unreadable entry: drop it and recompute
    std::error_code ec;
    std::filesystem::remove(path, ec);
    std::lock_guard<std::mutex> lock(stats_mutex_);
    ++stats_.corrupt;
    return std::nullopt;
  }
}

void EmbeddingCache::write_entry(const std::string& digest, const std::string& identity,
                                 const EmbeddingVector& vector) {
  const auto path = entry_path(digest);
  std::filesystem::create_directories(path.parent_path());

  json entry;
  entry["dim"] = vector.dim();
  entry["values"] = vector.values;
  entry["embedder"] = identity;

  const auto tmp = path.parent_path() /
                   (digest + ".tmp" + std::to_string(g_temp_counter.fetch_add(1)));
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("embedding cache: cannot write " + tmp.string());
    out << entry.dump();
  }
  std::filesystem::rename(tmp, path);
}

std::vector<EmbeddingVector> EmbeddingCache::cached_embed(Embedder& embedder,
                                                          const std::vector<std::string>& texts) {
  const std::string identity = embedder.identity();

  std::vector<EmbeddingVector> out(texts.size());
  std::vector<std::size_t> miss_positions;
  std::unordered_map<std::string, std::size_t> first_seen;  // text -> first missing position
  std::vector<std::string> miss_texts;

  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (auto it = first_seen.find(texts[i]); it != first_seen.end()) {
      // duplicate of a pending miss; fill after computation
      miss_positions.push_back(i);
      continue;
    }
    const std::string digest = entry_digest(identity, texts[i]);
    if (auto cached = read_entry(digest, identity)) {
      out[i] = std::move(*cached);
      ++hits;
      continue;
    }
    first_seen.emplace(texts[i], miss_texts.size());
    miss_texts.push_back(texts[i]);
    miss_positions.push_back(i);
  }

  if (!miss_texts.empty()) {
    const auto computed = embedder.embed(miss_texts);
    for (std::size_t i = 0; i < miss_texts.size(); ++i) {
      write_entry(entry_digest(identity, miss_texts[i]), identity, computed[i]);
    }
    for (std::size_t pos : miss_positions) {
      out[pos] = computed[first_seen.at(texts[pos])];
    }
  }

  {
    std::lock_guard<std::mutex> lock(stats_mutex_);
    stats_.hits += hits;
    stats_.misses += miss_texts.size();
  }
  return out;
}

CacheStats EmbeddingCache::stats() const {
  std::lock_guard<std::mutex> lock(stats_mutex_);
  return stats_;
}

}  // namespace ksllm::embed
