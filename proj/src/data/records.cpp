#include "ksllm/data/records.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"

namespace ksllm::data {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

LoadResult load_jsonl(const std::filesystem::path& path, LoadOptions options) {
  std::ifstream in(path);
  if (!in) throw IoError("load_jsonl: cannot open " + path.string());

  LoadResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;

    json obj;
    try {
      obj = json::parse(line);
      if (!obj.is_object()) throw InputError("not a JSON object");

      QARecord record;
      record.id = obj.at("id").get<std::string>();
      record.question = obj.at("question").get<std::string>();
      record.answers = obj.at("answers").get<std::vector<std::string>>();
      if (obj.contains("evidence")) {
        record.evidence = obj.at("evidence").get<std::string>();
        record.evidence_source = QARecord::EvidenceSource::provided;
      }

      if (record.question.empty()) {
        throw InputError("record '" + record.id + "' has an empty question");
      }
      if (record.answers.empty()) {
        throw InputError("record '" + record.id + "' has an empty answers list");
      }
      for (const auto& a : record.answers) {
        if (a.empty()) throw InputError("record '" + record.id + "' has an empty answer string");
      }
      if (!seen_ids.insert(record.id).second) {
        throw InputError("duplicate record id '" + record.id + "'");
      }
      result.records.push_back(std::move(record));
    } catch (const InputError&) {
      throw;  // invariant violations abort in either mode
    } catch (const std::exception& e) {
      const std::string message =
          "line " + std::to_string(line_no) + ": malformed record: " + e.what();
      if (options.strict) throw InputError("load_jsonl: " + message);
      ++result.skipped_lines;
      result.diagnostics.push_back(message);
    }
  }
  return result;
}

void save_jsonl(const std::vector<QARecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("save_jsonl: cannot write " + path.string());
  for (const auto& record : records) {
    ordered_json obj;
    obj["id"] = record.id;
    obj["question"] = record.question;
    obj["answers"] = record.answers;
    if (record.evidence) obj["evidence"] = *record.evidence;
    out << obj.dump() << '\n';
  }
}

QARecord generate_evidence(const QARecord& record, llm::LlmClient& client,
                           llm::ResponseCache* cache) {
  if (record.evidence_source != QARecord::EvidenceSource::absent) {
    throw InputError("generate_evidence: record '" + record.id + "' already has evidence");
  }
  const llm::Prompt prompt = llm::build_evidence_generation_prompt(record.question);
  std::string document = llm::complete_with_cache(prompt, client, cache);

  // trim surrounding whitespace
  const auto begin = document.find_first_not_of(" \t\r\n");
  const auto end = document.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    document.clear();
  } else {
    document = document.substr(begin, end - begin + 1);
  }

  QARecord out = record;
  out.evidence = document;
  out.evidence_source = QARecord::EvidenceSource::generated;
  return out;
}

}  // namespace ksllm::data
