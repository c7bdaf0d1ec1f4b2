#include "ksllm/eval/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ksllm/errors.hpp"
#include "ksllm/select/select.hpp"
#include "ksllm/text/normalize.hpp"
#include "ksllm/text/sentences.hpp"

namespace ksllm::eval {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

embed::EmbeddingVector average_triple_vectors(const std::vector<triples::Triple>& triple_list,
                                              Pipeline& p) {
  std::vector<std::string> texts;
  texts.reserve(triple_list.size());
  for (const auto& t : triple_list) {
    texts.push_back(triples::render_triples({t}, triples::RenderStyle::query));
  }
  const auto vectors = p.emb_cache ? p.emb_cache->cached_embed(p.embedder, texts)
                                   : p.embedder.embed(texts);
  embed::EmbeddingVector mean;
  mean.values.assign(vectors.front().dim(), 0.0);
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < mean.values.size(); ++i) mean.values[i] += v.values[i];
  }
  const double inv = 1.0 / static_cast<double>(vectors.size());
  for (double& x : mean.values) x *= inv;
  return mean;
}

RecordResult evaluate_record(const RunConfig& cfg, const data::QARecord& record, Pipeline& p) {
  RecordResult out;
  out.id = record.id;
  const auto record_start = Clock::now();

  const llm::MethodId method = cfg.method;

  std::optional<std::string> document;
  if (llm::method_needs_evidence(method)) {
    if (!record.evidence) {
      throw InputError("record '" + record.id + "': method " +
                       std::string(llm::method_name(method)) +
                       " requires an evidence document");
    }
    document = record.evidence;
  }

  std::optional<std::vector<triples::Triple>> triple_list;
  if (llm::method_needs_triples(method)) {
    const auto start = Clock::now();
    auto construction = llm::construct_triples(record.question, p.client, p.llm_cache);
    out.timings.triples_ms = elapsed_ms(start);
    out.triple_count = static_cast<int>(construction.triples.size());
    for (auto& d : construction.diagnostics) out.diagnostics.push_back(std::move(d));
    triple_list = std::move(construction.triples);
  }

  std::optional<std::vector<text::Sentence>> selected;
  const bool selects = method == llm::MethodId::ks_q || method == llm::MethodId::ks_s ||
                       method == llm::MethodId::ks_llm;
  if (selects) {
    const auto sentences = text::split_sentences(*document);
    const auto start = Clock::now();

    select::SelectionResult sel;
    const bool triples_query = method != llm::MethodId::ks_q;
    if (triples_query && triple_list->empty()) {
      out.diagnostics.push_back("selection: no triples available; fell back to question query");
    }
    if (triples_query && !triple_list->empty() && cfg.average_triple_embeddings) {
      const auto query_vector = average_triple_vectors(*triple_list, p);
      sel = select::select_with_query_vector(query_vector, sentences, cfg.k, p.embedder,
                                             p.emb_cache);
    } else {
      select::SelectionQuery query;
      if (triples_query && !triple_list->empty()) {
        query.mode = select::QueryMode::triples;
        query.text = triples::render_triples(*triple_list, triples::RenderStyle::query);
      } else {
        query.mode = select::QueryMode::question;
        query.text = record.question;
      }
      sel = select::select_evidence(query, sentences, cfg.k, p.embedder, p.emb_cache);
    }

    out.timings.selection_ms = elapsed_ms(start);
    out.selected_indices = sel.indices;
    out.distances = sel.distances;
    selected = std::move(sel.sentences);
  }

  // prompt ingredients per method: the full method sees triples and
  // sentences, the ablations see exactly their own ingredient
  std::optional<std::string> prompt_document;
  std::optional<std::vector<triples::Triple>> prompt_triples;
  std::optional<std::vector<text::Sentence>> prompt_sentences;
  switch (method) {
    case llm::MethodId::standard:
      break;
    case llm::MethodId::standard_doc:
    case llm::MethodId::cot_doc:
      prompt_document = document;
      break;
    case llm::MethodId::ks_q:
    case llm::MethodId::ks_s:
      prompt_sentences = selected;
      break;
    case llm::MethodId::ks_t:
      prompt_triples = triple_list;
      break;
    case llm::MethodId::ks_llm:
      prompt_triples = triple_list;
      prompt_sentences = selected;
      break;
  }

  const llm::Prompt prompt = llm::build_prompt(method, record.question, prompt_document,
                                               prompt_triples, prompt_sentences, cfg.max_tokens);
  const auto answer_start = Clock::now();
  out.prediction = llm::generate_answer(prompt, p.client, p.llm_cache);
  out.timings.answer_ms = elapsed_ms(answer_start);

  out.em = exact_match(out.prediction, record.answers);
  out.timings.total_ms = elapsed_ms(record_start);
  return out;
}

}  // namespace

int exact_match(const std::string& prediction, const std::vector<std::string>& answers) {
  if (answers.empty()) throw InputError("exact_match: answers list is empty");
  const std::string normalized = text::normalize_answer(prediction);
  for (const auto& answer : answers) {
    if (normalized == text::normalize_answer(answer)) return 1;
  }
  return 0;
}

RunReport run_method(const RunConfig& config, const std::vector<data::QARecord>& records,
                     Pipeline& pipeline) {
  if (config.k < 1) throw InputError("run_method: k must be >= 1");
  if (config.max_tokens.max_tokens < 1) throw InputError("run_method: max_tokens must be >= 1");

  RunReport report;
  report.method = config.method;
  report.dataset_id = config.effective_dataset_id();
  report.model = pipeline.client.model_name();
  report.k = config.k;
  report.max_tokens = config.max_tokens.max_tokens;
  report.n = static_cast<int>(records.size());

  const auto llm_calls_before = pipeline.client.invocation_count();
  const auto embed_calls_before = pipeline.embedder.invocation_count();
  const auto emb_stats_before =
      pipeline.emb_cache ? pipeline.emb_cache->stats() : embed::CacheStats{};
  const auto llm_stats_before =
      pipeline.llm_cache ? pipeline.llm_cache->stats() : llm::ResponseCacheStats{};

  const auto run_start = Clock::now();

  std::vector<RecordResult> results(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
      try {
        results[i] = evaluate_record(config, records[i], pipeline);
      } catch (const std::exception& e) {
        RecordResult failed;
        failed.id = records[i].id;
        failed.failed = true;
        failed.diagnostics.push_back(e.what());
        results[i] = std::move(failed);
      }
    }
  };

  const int workers = std::max(1, config.concurrency);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.wall_time_ms = elapsed_ms(run_start);

  int correct = 0;
  for (auto& r : results) {
    if (r.failed) {
      ++report.n_failed;
    } else {
      correct += r.em;
    }
  }
  const int scored = report.n - report.n_failed;
  report.em = scored > 0 ? static_cast<double>(correct) / scored : 0.0;
  report.per_record = std::move(results);

  report.stats.llm_calls = pipeline.client.invocation_count() - llm_calls_before;
  report.stats.embed_calls = pipeline.embedder.invocation_count() - embed_calls_before;
  if (pipeline.emb_cache) {
    const auto now = pipeline.emb_cache->stats();
    report.stats.emb_cache_hits = now.hits - emb_stats_before.hits;
    report.stats.emb_cache_misses = now.misses - emb_stats_before.misses;
    report.stats.cache_corrupt += now.corrupt - emb_stats_before.corrupt;
  }
  if (pipeline.llm_cache) {
    const auto now = pipeline.llm_cache->stats();
    report.stats.llm_cache_hits = now.hits - llm_stats_before.hits;
    report.stats.llm_cache_misses = now.misses - llm_stats_before.misses;
    report.stats.cache_corrupt += now.corrupt - llm_stats_before.corrupt;
  }

  if (config.deterministic_timing) {
    report.wall_time_ms = 0.0;
    for (auto& r : report.per_record) r.timings = StageTimings{};
  }
  return report;
}

std::vector<RunReport> sweep_k(const RunConfig& config, const std::vector<int>& ks,
                               const std::vector<data::QARecord>& records, Pipeline& pipeline) {
  if (ks.empty()) throw InputError("sweep_k: no k values");
  for (int k : ks) {
    if (k < 1) throw InputError("sweep_k: k must be >= 1");
  }
  std::vector<RunReport> reports;
  reports.reserve(ks.size());
  for (int k : ks) {
    RunConfig cfg = config;
    cfg.method = llm::MethodId::ks_llm;
    cfg.k = k;
    reports.push_back(run_method(cfg, records, pipeline));
  }
  return reports;
}

std::vector<RunReport> sweep_length(const RunConfig& config,
                                    const std::vector<text::TokenBudget>& budgets,
                                    const std::vector<data::QARecord>& records,
                                    Pipeline& pipeline) {
  if (budgets.empty()) throw InputError("sweep_length: no budgets");
  for (const auto& b : budgets) {
    if (b.max_tokens < 1) throw InputError("sweep_length: budgets must be >= 1");
  }
  if (config.method != llm::MethodId::standard_doc) {
    throw InputError("sweep_length: method must be standard_doc");
  }
  std::vector<RunReport> reports;
  reports.reserve(budgets.size());
  for (const auto& budget : budgets) {
    RunConfig cfg = config;
    cfg.max_tokens = budget;
    reports.push_back(run_method(cfg, records, pipeline));
  }
  return reports;
}

std::vector<ScoreSummary> score_predictions(const std::vector<data::QARecord>& dataset,
                                            const std::filesystem::path& predictions_path) {
  std::unordered_map<std::string, const data::QARecord*> by_id;
  for (const auto& r : dataset) by_id.emplace(r.id, &r);

  std::ifstream in(predictions_path);
  if (!in) throw IoError("score: cannot open " + predictions_path.string());

  struct Bucket {
    int n = 0;
    int n_failed = 0;
    int correct = 0;
  };
  std::map<std::string, Bucket> buckets;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("score: line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string id = obj.at("id").get<std::string>();
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw InputError("score: prediction id '" + id + "' not in dataset");
    }
    const std::string method = obj.value("method", std::string{});
    const bool failed = obj.value("failed", false);
    Bucket& bucket = buckets[method];
    ++bucket.n;
    if (failed) {
      ++bucket.n_failed;
      continue;
    }
    const std::string prediction = obj.value("prediction", std::string{});
    bucket.correct += exact_match(prediction, it->second->answers);
  }

  std::vector<ScoreSummary> out;
  for (const auto& [method, bucket] : buckets) {
    ScoreSummary s;
    s.method = method;
    s.n = bucket.n;
    s.n_failed = bucket.n_failed;
    const int scored = bucket.n - bucket.n_failed;
    s.em = scored > 0 ? static_cast<double>(bucket.correct) / scored : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ksllm::eval
