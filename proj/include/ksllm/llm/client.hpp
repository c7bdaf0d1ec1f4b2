#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ksllm/llm/prompts.hpp"

namespace ksllm::llm {

struct LlmConfig {
  std::string base_url;  // full chat-completions endpoint URL
  std::string model = "unknown";
  std::string api_key_env;
  std::chrono::milliseconds timeout{60000};
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};
  int max_inflight = 4;  // concurrent request cap
};

// Text-completion contract shared by the HTTP backend and the scripted mock.
// complete() counts invocations so cache tests can assert zero client calls.
class LlmClient {
 public:
  virtual ~LlmClient() = default;

  std::string complete(const Prompt& prompt);

  virtual std::string model_name() const = 0;

  std::uint64_t invocation_count() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual std::string do_complete(const Prompt& prompt) = 0;

 private:
  std::atomic<std::uint64_t> calls_{0};
};

// POSTs {"model", "messages", "temperature", "max_tokens"} and reads
// choices[0].message.content. Transport failures retry with exponential
// backoff; an in-process semaphore caps in-flight requests.
class HttpLlmClient : public LlmClient {
 public:
  explicit HttpLlmClient(LlmConfig config);
  ~HttpLlmClient() override;

  std::string model_name() const override { return config_.model; }

 protected:
  std::string do_complete(const Prompt& prompt) override;

 private:
  LlmConfig config_;
  struct Gate;
  std::unique_ptr<Gate> gate_;
};

// Test/offline client: answers with the response of the first script entry
// whose matcher is a substring of the prompt text, else the default response,
// else a MockMissError. Records every prompt it sees.
class ScriptedMockClient : public LlmClient {
 public:
  struct Entry {
    std::string matcher;  // substring pattern over the prompt text
    std::string response;
  };

  explicit ScriptedMockClient(std::vector<Entry> script,
                              std::optional<std::string> default_response = std::nullopt,
                              std::string model = "mock");

  std::string model_name() const override { return model_; }

  std::vector<std::string> captured_prompts() const;

 protected:
  std::string do_complete(const Prompt& prompt) override;

 private:
  std::vector<Entry> script_;
  std::optional<std::string> default_response_;
  std::string model_;
  mutable std::mutex mutex_;
  std::vector<std::string> captured_;
};

}  // namespace ksllm::llm
