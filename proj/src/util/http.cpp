#include "ksllm/util/http.hpp"

#include <cmath>
#include <random>

#include "ksllm/errors.hpp"

namespace ksllm::util {

ParsedUrl parse_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InputError("parse_url: missing scheme in '" + url + "'");
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw InputError("parse_url: unsupported scheme '" + scheme + "'");
  }
  const std::size_t host_begin = scheme_end + 3;
  if (host_begin >= url.size()) {
    throw InputError("parse_url: missing host in '" + url + "'");
  }
  const std::size_t path_begin = url.find('/', host_begin);
  ParsedUrl out;
  if (path_begin == std::string::npos) {
    out.origin = url;
    out.path = "/";
  } else {
    out.origin = url.substr(0, path_begin);
    out.path = url.substr(path_begin);
  }
  return out;
}

std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry) {
  const double base = static_cast<double>(policy.base_delay.count());
  const double scaled = base * std::pow(policy.multiplier, retry - 1);
  thread_local std::mt19937 rng{std::random_device{}()};
  std::uniform_real_distribution<double> jitter(0.0, base * 0.25 + 1.0);
  return std::chrono::milliseconds(static_cast<long long>(scaled + jitter(rng)));
}

}  // namespace ksllm::util
