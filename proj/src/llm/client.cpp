#include "ksllm/llm/client.hpp"

#include <condition_variable>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"
#include "ksllm/util/http.hpp"

namespace ksllm::llm {

using nlohmann::json;

std::string LlmClient::complete(const Prompt& prompt) {
  if (prompt.messages.empty()) throw InputError("complete: prompt has no messages");
  bool has_user = false;
  for (const auto& m : prompt.messages) {
    if (m.content.empty()) throw InputError("complete: empty message content");
    if (m.role == "user") has_user = true;
  }
  if (!has_user) throw InputError("complete: prompt has no user message");
  if (prompt.params.temperature < 0) throw InputError("complete: negative temperature");

  calls_.fetch_add(1, std::memory_order_relaxed);
  return do_complete(prompt);
}

// counting gate limiting concurrent HTTP requests
struct HttpLlmClient::Gate {
  explicit Gate(int limit) : available(limit) {}

  void acquire() {
    std::unique_lock<std::mutex> lock(mutex);
    cv.wait(lock, [this] { return available > 0; });
    --available;
  }

  void release() {
    {
      std::lock_guard<std::mutex> lock(mutex);
      ++available;
    }
    cv.notify_one();
  }

  std::mutex mutex;
  std::condition_variable cv;
  int available;
};

HttpLlmClient::HttpLlmClient(LlmConfig config)
    : config_(std::move(config)), gate_(std::make_unique<Gate>(std::max(1, config_.max_inflight))) {
  if (config_.base_url.empty()) throw InputError("HttpLlmClient: base_url is required");
}

HttpLlmClient::~HttpLlmClient() = default;

std::string HttpLlmClient::do_complete(const Prompt& prompt) {
  json body;
  body["model"] = config_.model;
  json messages = json::array();
  for (const auto& m : prompt.messages) {
    messages.push_back({{"role", m.role}, {"content", m.content}});
  }
  body["messages"] = std::move(messages);
  body["temperature"] = prompt.params.temperature;
  body["max_tokens"] = prompt.params.max_output_tokens;
  const std::string payload = body.dump();

  const util::ParsedUrl url = util::parse_url(config_.base_url);
  const util::RetryPolicy policy{config_.max_retries, config_.backoff_base, 2.0};

  std::string bearer;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str())) bearer = key;
  }

  gate_->acquire();
  struct Release {
    Gate* g;
    ~Release() { g->release(); }
  } release{gate_.get()};

  std::string last_error;
  const int attempts = policy.max_retries + 1;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(util::backoff_delay(policy, attempt - 1));

    httplib::Client client(url.origin);
    client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(config_.timeout));
    client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(config_.timeout));
    httplib::Headers headers;
    if (!bearer.empty()) headers.emplace("Authorization", "Bearer " + bearer);

    auto res = client.Post(url.path, headers, payload, "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 408 || res->status == 429 || res->status >= 500) {
      last_error = "http status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw ProtocolError("chat endpoint returned status " + std::to_string(res->status));
    }

    try {
      json parsed = json::parse(res->body);
      return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
      throw ProtocolError(std::string("chat response malformed: ") + e.what());
    }
  }
  throw TransportError(
      "chat request failed after " + std::to_string(attempts) + " attempts: " + last_error,
      attempts);
}

ScriptedMockClient::ScriptedMockClient(std::vector<Entry> script,
                                       std::optional<std::string> default_response,
                                       std::string model)
    : script_(std::move(script)),
      default_response_(std::move(default_response)),
      model_(std::move(model)) {}

std::string ScriptedMockClient::do_complete(const Prompt& prompt) {
  const std::string text = prompt.text();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    captured_.push_back(text);
  }
  for (const auto& entry : script_) {
    if (text.find(entry.matcher) != std::string::npos) return entry.response;
  }
  if (default_response_) return *default_response_;
  throw MockMissError("scripted mock: no entry matches prompt: " +
                      text.substr(0, std::min<std::size_t>(text.size(), 120)));
}

std::vector<std::string> ScriptedMockClient::captured_prompts() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return captured_;
}

}  // namespace ksllm::llm
