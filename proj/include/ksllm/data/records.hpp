#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ksllm/llm/client.hpp"
#include "ksllm/llm/gateway.hpp"

namespace ksllm::data {

// One question with its acceptable answers and optional evidence document.
struct QARecord {
  enum class EvidenceSource { provided, generated, absent };

  std::string id;
  std::string question;
  std::vector<std::string> answers;  // non-empty; each entry non-empty
  std::optional<std::string> evidence;
  EvidenceSource evidence_source = EvidenceSource::absent;
};

struct LoadOptions {
  bool strict = true;  // strict aborts on a malformed line; lenient skips and counts
};

struct LoadResult {
  std::vector<QARecord> records;  // file order
  int skipped_lines = 0;
  std::vector<std::string> diagnostics;
};

// Reads one JSON object per line with keys id, question, answers and optional
// evidence. Duplicate ids and empty answers abort in either mode.
LoadResult load_jsonl(const std::filesystem::path& path, LoadOptions options = {});

// Writes records back in the same schema, omitting the evidence key for
// records without evidence. load_jsonl(save_jsonl(x)) == x for records whose
// evidence_source is provided or absent; generated evidence reloads as
// provided because the wire schema carries no source marker.
void save_jsonl(const std::vector<QARecord>& records, const std::filesystem::path& path);

// Prompts the client for a short background document and returns a copy of
// the record with evidence filled in and evidence_source == generated.
// Precondition: record.evidence_source == absent.
QARecord generate_evidence(const QARecord& record, llm::LlmClient& client,
                           llm::ResponseCache* cache);

}  // namespace ksllm::data
