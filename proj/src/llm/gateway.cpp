#include "ksllm/llm/gateway.hpp"

#include <atomic>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"
#include "ksllm/util/digest.hpp"

namespace ksllm::llm {

using nlohmann::json;

namespace {

std::atomic<std::uint64_t> g_temp_counter{0};

bool starts_with_icase(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path cache_dir) : root_(std::move(cache_dir)) {
  root_ /= "llm";
  std::filesystem::create_directories(root_);
}

std::filesystem::path ResponseCache::entry_path(const std::string& digest) const {
  return root_ / digest.substr(0, 2) / (digest + ".json");
}

std::optional<std::string> ResponseCache::lookup(const std::string& digest) {
  const auto path = entry_path(digest);
  std::ifstream in(path);
  if (!in) {
    std::lock_guard<std::mutex> lock(stats_mutex_);
    ++stats_.misses;
    return std::nullopt;
  }
  try {
    json entry = json::parse(in);
    if (entry.at("prompt_digest").get<std::string>() != digest) throw IoError("digest mismatch");
    auto response = entry.at("response").get<std::string>();
    std::lock_guard<std::mutex> lock(stats_mutex_);
    ++stats_.hits;
    return response;
  } catch (const std::exception&) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    std::lock_guard<std::mutex> lock(stats_mutex_);
    ++stats_.corrupt;
    ++stats_.misses;
    return std::nullopt;
  }
}

void ResponseCache::store(const std::string& digest, const std::string& model,
                          const GenParams& params, const std::string& response) {
  const auto path = entry_path(digest);
  std::filesystem::create_directories(path.parent_path());

  json entry;
  entry["prompt_digest"] = digest;
  entry["model"] = model;
  entry["params"] = {{"temperature", params.temperature},
                     {"max_tokens", params.max_output_tokens}};
  entry["response"] = response;

  const auto tmp =
      path.parent_path() / (digest + ".tmp" + std::to_string(g_temp_counter.fetch_add(1)));
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("response cache: cannot write " + tmp.string());
    out << entry.dump();
  }
  std::filesystem::rename(tmp, path);
}

ResponseCacheStats ResponseCache::stats() const {
  std::lock_guard<std::mutex> lock(stats_mutex_);
  return stats_;
}

std::string prompt_digest(const Prompt& prompt, std::string_view model) {
  json canonical;
  canonical["model"] = std::string(model);
  canonical["temperature"] = prompt.params.temperature;
  canonical["max_tokens"] = prompt.params.max_output_tokens;
  json messages = json::array();
  for (const auto& m : prompt.messages) {
    messages.push_back({{"role", m.role}, {"content", m.content}});
  }
  canonical["messages"] = std::move(messages);
  return util::sha256_hex(canonical.dump());
}

std::string complete_with_cache(const Prompt& prompt, LlmClient& client, ResponseCache* cache) {
  if (!cache) return client.complete(prompt);
  const std::string digest = prompt_digest(prompt, client.model_name());
  if (auto cached = cache->lookup(digest)) return *cached;
  std::string response = client.complete(prompt);
  cache->store(digest, client.model_name(), prompt.params, response);
  return response;
}

std::string strip_answer_label(std::string_view raw) {
  std::string_view s = trim_view(raw);
  for (std::string_view label : {std::string_view("answer:"), std::string_view("the answer is")}) {
    if (starts_with_icase(s, label)) {
      s.remove_prefix(label.size());
      s = trim_view(s);
      if (!s.empty() && s.front() == ':') {
        s.remove_prefix(1);
        s = trim_view(s);
      }
      break;
    }
  }
  return std::string(s);
}

std::string generate_answer(const Prompt& prompt, LlmClient& client, ResponseCache* cache) {
  return strip_answer_label(complete_with_cache(prompt, client, cache));
}

TripleConstruction construct_triples(const std::string& question, LlmClient& client,
                                     ResponseCache* cache) {
  const Prompt prompt = build_triple_construction_prompt(question);
  const std::string response = complete_with_cache(prompt, client, cache);

  const auto parsed = triples::parse_triples(response);
  TripleConstruction out;
  out.triples = parsed.triples;
  out.malformed = parsed.malformed;
  if (parsed.malformed > 0) {
    out.diagnostics.push_back("triple construction: " + std::to_string(parsed.malformed) +
                              " malformed group(s) skipped");
  }
  if (out.triples.empty()) {
    out.diagnostics.push_back("triple construction: no well-formed triples in model output");
  }
  return out;
}

}  // namespace ksllm::llm
