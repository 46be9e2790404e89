#include "langconf/pipeline/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <map>
#include <set>
#include <mutex>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "langconf/divergence/kl.hpp"
#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/format.hpp"
#include "langconf/lid/distribution_builder.hpp"
#include "langconf/metrics/confusion_matrix.hpp"
#include "langconf/pipeline/analysis.hpp"
#include "langconf/pipeline/distribution_io.hpp"
#include "langconf/typology/loaders.hpp"
#include "langconf/typology/similarity.hpp"

namespace langconf::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

using Artifacts = std::map<std::string, std::string>;

std::string distribution_summary_csv(const std::vector<ScoredRecord>& records) {
  using Key = std::tuple<Setting, LanguageTag, Granularity>;
  std::map<Key, std::vector<LanguageDistribution>> groups;
  for (const auto& s : records) {
    if (s.line.unit_count() == 0) continue;
    groups[{s.record.setting, s.record.target_lang, Granularity::Line}].push_back(s.line);
    groups[{s.record.setting, s.record.target_lang, Granularity::Word}].push_back(s.word);
  }
  std::string out = "setting,target_lang,granularity,records,lang,mass\n";
  for (const auto& [key, ds] : groups) {
    const auto& [setting, target, gran] = key;
    std::vector<double> weights(ds.size(), 1.0);
    auto merged = merge_distributions(ds, weights);
    std::string prefix = std::string(to_string(setting)) + "," + target.str() + "," +
                         std::string(to_string(gran)) + "," + std::to_string(ds.size()) + ",";
    for (const auto& [lang, m] : merged.mass()) out += prefix + lang.str() + "," + format_number(m) + "\n";
    out += prefix + "unidentified," + format_number(merged.unidentified_mass()) + "\n";
  }
  return out;
}

typology::LanguageGraph load_graph(const GraphSpec& spec) {
  std::optional<typology::CodeMapping> mapping;
  if (spec.code_map) mapping = typology::load_code_mapping(*spec.code_map);
  const typology::CodeMapping* m = mapping ? &*mapping : nullptr;
  auto graph = spec.kind == typology::GraphKind::Embedding ? typology::load_embedding_table(spec.path, m)
                                                            : typology::load_feature_table(spec.path, spec.kind, m);
  return graph.with_kernel(typology::default_kernel(spec.kind), spec.transform);
}

std::string generated_at() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_json(const PipelineConfig& config, const RunSummary& summary) {
  ordered_json m = ordered_json::object();
  m["tool"] = "langconf";
  m["version"] = kToolVersion;
  m["config_hash"] = config_hash(config);
  ordered_json conv = ordered_json::object();
  conv["log_base"] = std::string(metrics::to_string(config.log_base));
  conv["zero_probability"] = std::string(metrics::to_string(config.zero_rule));
  if (config.zero_rule == metrics::ZeroProbabilityRule::Clamp) conv["clamp_probability"] = metrics::kClampProbability;
  conv["wpr_mode"] = std::string(metrics::to_string(config.wpr_mode));
  conv["entropy_aggregation"] = "per-record entropy, then mean per group";
  conv["stddev"] = "population";
  conv["unidentified_mass"] = "excluded from entropy; distributions renormalized over identified units";
  conv["kl_epsilon"] = divergence::kKlEpsilon;
  conv["kl_zero_column_rule"] = "all-zero confusion columns are skipped and listed";
  conv["similarity_clip"] = "cosine similarities below 0 are clipped to 0";
  conv["pvalue_method"] = std::string(metrics::to_string(config.pvalue_method));
  conv["significance"] = "* p<0.05, ** p<0.01, *** p<0.001 (conventional thresholds)";
  conv["float_format"] = "6 significant digits in CSV";
  m["conventions"] = conv;
  ordered_json detectors = ordered_json::array();
  for (const auto& d : config.detectors) detectors.push_back(d.name);
  m["detectors"] = detectors;
  m["records"] = summary.records;
  m["excluded_records"] = summary.excluded;
  m["artifacts"] = summary.artifacts;
  m["warnings"] = summary.warnings;
  m["generated_at"] = generated_at();
  return m.dump(2) + "\n";
}

}  // namespace

// Scores records in parallel; each worker writes only its own slots, so the
// output order is the input order regardless of scheduling.
std::vector<ScoredRecord> score_records(std::vector<GenerationRecord> records, const lid::DetectorChain& chain) {
  const std::size_t n = records.size();
  std::vector<std::optional<lid::RecordDistributions>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = lid::build_distributions(records[i], chain);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ScoredRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    records[i].response_text.clear();
    out.push_back(ScoredRecord{std::move(records[i]), std::move(slots[i]->line), std::move(slots[i]->word)});
  }
  return out;
}

RunSummary run_pipeline(const PipelineConfig& config) {
  validate_config(config);

  RunSummary summary;
  std::vector<GenerationRecord> records;
  std::set<std::string> ids;
  for (const auto& in : config.inputs) {
    auto result = ingest(in.path, in.format);
    for (const auto& bad : result.malformed) {
      summary.warnings.push_back(in.path.filename().string() + ":" + std::to_string(bad.line_no) + ": " + bad.reason);
    }
    for (auto& r : result.records) {
      if (!ids.insert(r.id).second) {
        throw Error(ErrorCode::ParseError, "duplicate record id '" + r.id + "' across inputs");
      }
      records.push_back(std::move(r));
    }
  }
  if (records.empty()) throw Error(ErrorCode::EmptyInput, "corpus has no records");
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  const auto chain = build_detector_chain(config.detectors);
  const auto scored = score_records(std::move(records), chain);
  summary.records = scored.size();

  const metrics::EntropyOptions entropy_options{config.log_base, config.zero_rule};
  auto table = compute_entropies(scored, entropy_options);
  summary.warnings.insert(summary.warnings.end(), table.warnings.begin(), table.warnings.end());
  summary.excluded = static_cast<std::size_t>(
      std::count_if(scored.begin(), scored.end(), [](const auto& s) { return s.line.unit_count() == 0; }));
  if (table.observations.empty()) throw Error(ErrorCode::EmptyInput, "no record has an identified language");

  Artifacts out;
  out["distributions.jsonl"] = write_scored_records(scored);
  out["distribution_summary.csv"] = distribution_summary_csv(scored);
  out["entropy_records.csv"] = entropy_records_csv(table.observations);
  const metrics::AggregateKey key(config.aggregation_keys);
  out["entropy_summary.csv"] = aggregate_csv(metrics::aggregate_entropy(table.observations, key), key);

  const auto cells = build_metric_cells(scored, table.observations, config.wpr_mode);
  out["passrate.csv"] = cells_to_csv(cells);
  const metrics::SpearmanOptions spearman_options{config.pvalue_method, config.seed};
  out["correlations.csv"] = correlations_to_csv(correlate(metric_table(cells), spearman_options));

  struct Confusion {
    std::string name;
    Subset subset;
    Granularity granularity;
    LabeledMatrix matrix;
  };
  std::vector<Confusion> confusions;
  std::set<LanguageTag> axis;
  for (auto subset : {Subset::All, Subset::Monolingual, Subset::Crosslingual}) {
    for (auto gran : {Granularity::Line, Granularity::Word}) {
      auto obs = select(table.observations, gran, subset);
      if (obs.empty()) continue;
      std::string name = std::string(to_string(subset)) + "_" + std::string(to_string(gran));
      auto m = metrics::build_confusion_matrix(obs);
      axis.insert(m.row_labels().begin(), m.row_labels().end());
      axis.insert(m.col_labels().begin(), m.col_labels().end());
      out["confusion_" + name + ".csv"] = matrix_to_csv(m);
      confusions.push_back({name, subset, gran, std::move(m)});
    }
  }

  if (!config.graphs.empty()) {
    std::string kl_summary = "graph,subset,granularity,mean_kl,columns,skipped,rows_dropped,cols_dropped\n";
    const std::vector<LanguageTag> langs(axis.begin(), axis.end());
    for (const auto& spec : config.graphs) {
      const auto graph = load_graph(spec);
      for (const auto& w : graph.warnings()) summary.warnings.push_back("graph " + spec.name + ": " + w);
      typology::SimilarityMatrix sim = [&] {
        try {
          return typology::build_similarity_matrix(graph, langs, langs);
        } catch (const Error& e) {
          throw Error(e.code(), "graph " + spec.name + ": " + e.what());
        }
      }();
      if (!sim.dropped.empty()) {
        std::string missing;
        for (const auto& l : sim.dropped) missing += " " + l.str();
        summary.warnings.push_back("graph " + spec.name + ": no entry for" + missing);
      }
      out["similarity_" + spec.name + ".csv"] = matrix_to_csv(sim.matrix);
      if (sim.raw) out["similarity_" + spec.name + "_raw.csv"] = matrix_to_csv(*sim.raw);

      for (const auto& c : confusions) {
        const std::string label = spec.name + "_" + c.name;
        try {
          auto aligned = divergence::align_matrices(c.matrix, sim.matrix);
          auto report = divergence::kl_matrix_divergence(aligned.confusion, aligned.similarity);
          out["kl_" + label + ".json"] = divergence::kl_report_json(report, label);
          kl_summary += csv_escape(spec.name) + "," + std::string(to_string(c.subset)) + "," +
                        std::string(to_string(c.granularity)) + "," + format_number(report.mean_kl) + "," +
                        std::to_string(report.per_column.size()) + "," + std::to_string(report.skipped_columns.size()) +
                        "," + std::to_string(aligned.coverage.rows_only_in_confusion.size()) + "," +
                        std::to_string(aligned.coverage.cols_only_in_confusion.size()) + "\n";
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoOverlap && e.code() != ErrorCode::AllColumnsSkipped) throw;
          summary.warnings.push_back("kl " + label + ": " + e.what());
        }
      }
    }
    out["kl_summary.csv"] = kl_summary;
  }

  for (const auto& [name, _] : out) summary.artifacts.push_back(name);
  summary.artifacts.push_back("manifest.json");

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + config.output_dir.string() + ": " + ec.message());
  for (const auto& [name, contents] : out) write_file_atomic(config.output_dir / name, contents);
  write_file_atomic(config.output_dir / "manifest.json", manifest_json(config, summary));
  return summary;
}

int exit_code_for(const std::exception& e) noexcept {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) return 3;
  switch (err->code()) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidLanguageTag:
    case ErrorCode::FileNotFound:
    case ErrorCode::NoProfiles:
    case ErrorCode::KindMismatch:
      return 1;
    case ErrorCode::IoError:
      return 3;
    default:
      return 2;
  }
}

}  // namespace langconf::pipeline
