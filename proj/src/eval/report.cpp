#include "ksllm/eval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"

namespace ksllm::eval {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string em_percent(const RunReport& report) { return format_fixed(report.em * 100.0, 2); }

std::vector<const RunReport*> sorted_reports(const std::vector<RunReport>& reports) {
  std::vector<const RunReport*> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const RunReport* a, const RunReport* b) {
    if (a->dataset_id != b->dataset_id) return a->dataset_id < b->dataset_id;
    if (a->method != b->method) return static_cast<int>(a->method) < static_cast<int>(b->method);
    if (a->k != b->k) return a->k < b->k;
    return a->max_tokens < b->max_tokens;
  });
  return out;
}

std::string render_csv(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  out << "method,dataset,model,k,max_tokens,n,n_failed,em_percent,wall_time_ms\n";
  for (const RunReport* r : sorted_reports(reports)) {
    out << llm::method_name(r->method) << ',' << r->dataset_id << ',' << r->model << ',' << r->k
        << ',' << r->max_tokens << ',' << r->n << ',' << r->n_failed << ',' << em_percent(*r)
        << ',' << format_fixed(r->wall_time_ms, 3) << '\n';
  }
  return out.str();
}

std::string render_markdown(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  out << "| method | dataset | model | k | max_tokens | n | n_failed | em_percent | "
         "wall_time_ms |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const RunReport* r : sorted_reports(reports)) {
    out << "| " << llm::method_name(r->method) << " | " << r->dataset_id << " | " << r->model
        << " | " << r->k << " | " << r->max_tokens << " | " << r->n << " | " << r->n_failed
        << " | " << em_percent(*r) << " | " << format_fixed(r->wall_time_ms, 3) << " |\n";
  }
  return out.str();
}

std::string render_jsonl(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  for (const RunReport* r : sorted_reports(reports)) {
    for (const auto& rec : r->per_record) {
      ordered_json line;
      line["id"] = rec.id;
      line["method"] = llm::method_name(r->method);
      line["prediction"] = rec.prediction;
      line["em"] = rec.em;
      line["selected_indices"] = rec.selected_indices;
      line["distances"] = rec.distances;
      line["triple_count"] = rec.triple_count;
      line["timings_ms"] = {{"total", rec.timings.total_ms},
                            {"triples", rec.timings.triples_ms},
                            {"selection", rec.timings.selection_ms},
                            {"answer", rec.timings.answer_ms}};
      line["failed"] = rec.failed;
      line["diagnostics"] = rec.diagnostics;
      out << line.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown") return ReportFormat::markdown;
  if (name == "jsonl") return ReportFormat::jsonl;
  throw InputError("unknown report format '" + name + "' (csv|markdown|jsonl)");
}

std::string render_reports(const std::vector<RunReport>& reports, ReportFormat format) {
  if (reports.empty()) throw InputError("render_reports: no reports");
  switch (format) {
    case ReportFormat::csv:
      return render_csv(reports);
    case ReportFormat::markdown:
      return render_markdown(reports);
    case ReportFormat::jsonl:
      return render_jsonl(reports);
  }
  throw InputError("render_reports: bad format");
}

void emit_report(const std::vector<RunReport>& reports, ReportFormat format,
                 const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("emit_report: cannot write " + path.string());
  out << render_reports(reports, format);
}

}  // namespace ksllm::eval
