#pragma once

#include <chrono>
#include <string>

namespace ksllm::util {

// Splits "http://host:port/some/path" into the origin httplib wants and the
// request path. Throws InputError on anything that is not an http(s) URL.
struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // starts with '/'
};

ParsedUrl parse_url(const std::string& url);

struct RetryPolicy {
  int max_retries = 3;  // retries after the first attempt
  std::chrono::milliseconds base_delay{500};
  double multiplier = 2.0;
};

// Delay before retry number `retry` (1-based), exponential with jitter.
std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry);

}  // namespace ksllm::util
