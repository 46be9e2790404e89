// langconf: language confusion metrics over model generations.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "langconf/divergence/kl.hpp"
#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/format.hpp"
#include "langconf/language_codes.hpp"
#include "langconf/lid/profile.hpp"
#include "langconf/metrics/confusion_matrix.hpp"
#include "langconf/pipeline/analysis.hpp"
#include "langconf/pipeline/config.hpp"
#include "langconf/pipeline/distribution_io.hpp"
#include "langconf/pipeline/ingest.hpp"
#include "langconf/pipeline/run.hpp"
#include "langconf/typology/loaders.hpp"
#include "langconf/typology/similarity.hpp"

namespace fs = std::filesystem;
using namespace langconf;

namespace {

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

struct EntropyFlags {
  std::string log_base = "natural";
  std::string zero_rule = "support";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--log-base", log_base, "natural or base2")->capture_default_str();
    cmd->add_option("--zero-prob", zero_rule, "support or clamp")->capture_default_str();
  }
  metrics::EntropyOptions options() const {
    return {metrics::parse_log_base(log_base), metrics::parse_zero_probability_rule(zero_rule)};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Language confusion metrics for multilingual generations"};
  app.set_version_flag("--version", std::string(pipeline::kToolVersion));
  app.require_subcommand(1);

  // profiles train
  auto* profiles = app.add_subcommand("profiles", "Manage n-gram detector profiles");
  profiles->require_subcommand(1);
  auto* train = profiles->add_subcommand("train", "Train profiles from <iso639_3>.txt seed corpora");
  std::string seed_dir, profile_out;
  std::size_t holdout = 0;
  train->add_option("--seed-dir", seed_dir, "Directory of seed corpora")->required();
  train->add_option("--out", profile_out, "Output profile directory")->required();
  train->add_option("--holdout", holdout, "Leave out every N-th line (0 keeps all)");

  // detect
  auto* detect = app.add_subcommand("detect", "Per-record line and word language distributions");
  std::string detect_input, detect_format = "generic-jsonl", detect_profiles, detect_seed, detect_out;
  std::string detect_chain = "ngram,script";
  double detect_margin = 0.0;
  bool detect_keep_unseen = false;
  detect->add_option("--input", detect_input, "Generations (JSONL)")->required();
  detect->add_option("--format", detect_format, "lcb-jsonl, mtei-jsonl or generic-jsonl")->capture_default_str();
  auto* p_opt = detect->add_option("--profiles", detect_profiles, "Profile directory");
  detect->add_option("--seed", detect_seed, "Seed corpus directory (profiles trained on the fly)")->excludes(p_opt);
  detect->add_option("--detectors", detect_chain, "Ordered detector chain")->capture_default_str();
  detect->add_option("--margin", detect_margin, "Required n-gram log-score lead");
  detect->add_flag("--identify-unseen", detect_keep_unseen, "Do not abstain on units with no known n-gram");
  detect->add_option("--out", detect_out, "Output distributions JSONL (stdout when omitted)");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Per-record confusion entropy and grouped means");
  std::string ent_in, ent_out, ent_summary, ent_keys = "model,setting,target_lang,granularity";
  EntropyFlags ent_flags;
  entropy->add_option("--distributions", ent_in, "Distributions JSONL")->required();
  ent_flags.add_to(entropy);
  entropy->add_option("--keys", ent_keys, "Aggregation keys")->capture_default_str();
  entropy->add_option("--out", ent_out, "Per-record CSV (stdout when omitted)");
  entropy->add_option("--summary", ent_summary, "Grouped summary CSV");

  // passrate
  auto* passrate = app.add_subcommand("passrate", "Line/word pass rates and mean entropies per cell");
  std::string pr_in, pr_out, pr_mode = "english";
  EntropyFlags pr_flags;
  passrate->add_option("--distributions", pr_in, "Distributions JSONL")->required();
  passrate->add_option("--wpr-mode", pr_mode, "english or strict")->capture_default_str();
  pr_flags.add_to(passrate);
  passrate->add_option("--out", pr_out, "Output CSV (stdout when omitted)");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Language confusion matrix");
  std::string mx_in, mx_out, mx_gran = "line", mx_subset = "all";
  EntropyFlags mx_flags;
  matrix->add_option("--distributions", mx_in, "Distributions JSONL")->required();
  matrix->add_option("--granularity", mx_gran, "line or word")->capture_default_str();
  matrix->add_option("--subset", mx_subset, "all, monolingual or crosslingual")->capture_default_str();
  mx_flags.add_to(matrix);
  matrix->add_option("--out", mx_out, "Output CSV (stdout when omitted)");

  // simgraph
  auto* simgraph = app.add_subcommand("simgraph", "Language similarity matrix from a typology table");
  std::string sg_table, sg_kind, sg_transform = "none", sg_map, sg_langs, sg_like, sg_out, sg_raw;
  simgraph->add_option("--table", sg_table, "Feature or embedding TSV")->required();
  simgraph->add_option("--kind", sg_kind, "multivalued, binary or embedding")->required();
  simgraph->add_option("--transform", sg_transform, "none or arccos (embeddings)")->capture_default_str();
  simgraph->add_option("--code-map", sg_map, "source id -> ISO 639-3 TSV");
  auto* langs_opt = simgraph->add_option("--langs", sg_langs, "Comma-separated axis languages");
  simgraph->add_option("--like", sg_like, "Take axes from a confusion matrix CSV")->excludes(langs_opt);
  simgraph->add_option("--out", sg_out, "Output CSV (stdout when omitted)");
  simgraph->add_option("--raw-out", sg_raw, "Unclipped cosine values CSV");

  // kl
  auto* kl = app.add_subcommand("kl", "Column-wise KL divergence between confusion and similarity matrices");
  std::string kl_conf, kl_sim, kl_name = "kl", kl_json, kl_csv;
  kl->add_option("--confusion", kl_conf, "Confusion matrix CSV")->required();
  kl->add_option("--similarity", kl_sim, "Similarity matrix CSV")->required();
  kl->add_option("--name", kl_name, "Report name")->capture_default_str();
  kl->add_option("--json", kl_json, "JSON report path");
  kl->add_option("--csv", kl_csv, "CSV report path (stdout when neither path is given)");

  // corr
  auto* corr = app.add_subcommand("corr", "Spearman correlations between metric columns");
  std::string cr_table, cr_cols = "hc_line,hc_word,lpr,wpr", cr_split = "setting", cr_method = "t", cr_out;
  std::uint64_t cr_seed = 0;
  corr->add_option("--table", cr_table, "Metric CSV, e.g. passrate output")->required();
  corr->add_option("--columns", cr_cols, "Columns to correlate")->capture_default_str();
  corr->add_option("--split", cr_split, "Column whose values define subsets ('' for none)")->capture_default_str();
  corr->add_option("--pvalue", cr_method, "t, exact or montecarlo")->capture_default_str();
  corr->add_option("--seed", cr_seed, "Monte Carlo seed");
  corr->add_option("--out", cr_out, "Output CSV (stdout when omitted)");

  // run
  auto* run = app.add_subcommand("run", "Full pipeline from a JSON config");
  std::string run_config;
  run->add_option("--config", run_config, "Pipeline config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*train) {
      auto trained = lid::train_profiles_from_seed_dir(seed_dir, holdout);
      lid::save_profiles(trained, profile_out);
      std::cerr << "trained " << trained.size() << " profiles into " << profile_out << "\n";
    } else if (*detect) {
      std::vector<pipeline::DetectorSpec> specs;
      for (const auto& name : split_list(detect_chain)) {
        pipeline::DetectorSpec spec;
        spec.name = name;
        if (name == "ngram") {
          if (!detect_profiles.empty()) spec.profiles = detect_profiles;
          if (!detect_seed.empty()) spec.seed = detect_seed;
          spec.margin = detect_margin;
          spec.abstain_on_unseen = !detect_keep_unseen;
        }
        specs.push_back(std::move(spec));
      }
      auto result = pipeline::ingest(detect_input, pipeline::parse_input_format(detect_format));
      for (const auto& bad : result.malformed) std::cerr << "skipped line " << bad.line_no << ": " << bad.reason << "\n";
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      auto scored = pipeline::score_records(std::move(result.records), pipeline::build_detector_chain(specs));
      emit(detect_out, pipeline::write_scored_records(scored));
    } else if (*entropy) {
      auto scored = pipeline::load_scored_records(ent_in);
      auto table = pipeline::compute_entropies(scored, ent_flags.options());
      for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
      emit(ent_out, pipeline::entropy_records_csv(table.observations));
      if (!ent_summary.empty()) {
        auto key = metrics::AggregateKey::parse(ent_keys);
        write_file_atomic(ent_summary, pipeline::aggregate_csv(metrics::aggregate_entropy(table.observations, key), key));
      }
    } else if (*passrate) {
      auto scored = pipeline::load_scored_records(pr_in);
      auto table = pipeline::compute_entropies(scored, pr_flags.options());
      auto cells = pipeline::build_metric_cells(scored, table.observations, metrics::parse_wpr_mode(pr_mode));
      emit(pr_out, pipeline::cells_to_csv(cells));
    } else if (*matrix) {
      auto scored = pipeline::load_scored_records(mx_in);
      auto table = pipeline::compute_entropies(scored, mx_flags.options());
      auto obs = pipeline::select(table.observations, parse_granularity(mx_gran), pipeline::parse_subset(mx_subset));
      emit(mx_out, matrix_to_csv(metrics::build_confusion_matrix(obs)));
    } else if (*simgraph) {
      const auto kind = typology::parse_graph_kind(sg_kind);
      std::optional<typology::CodeMapping> mapping;
      if (!sg_map.empty()) mapping = typology::load_code_mapping(sg_map);
      const typology::CodeMapping* m = mapping ? &*mapping : nullptr;
      auto graph = kind == typology::GraphKind::Embedding ? typology::load_embedding_table(sg_table, m)
                                                          : typology::load_feature_table(sg_table, kind, m);
      graph = graph.with_kernel(typology::default_kernel(kind), typology::parse_kernel_transform(sg_transform));
      for (const auto& w : graph.warnings()) std::cerr << "warning: " << w << "\n";
      std::vector<LanguageTag> rows, cols;
      if (!sg_like.empty()) {
        auto like = matrix_from_csv(read_text_file(sg_like));
        rows = like.row_labels();
        cols = like.col_labels();
      } else if (!sg_langs.empty()) {
        for (const auto& code : split_list(sg_langs)) {
          auto tag = normalize_language_code(code);
          if (!tag) throw Error(ErrorCode::InvalidLanguageTag, "unrecognized language code '" + code + "'");
          rows.push_back(*tag);
        }
        std::set<LanguageTag> uniq(rows.begin(), rows.end());
        rows.assign(uniq.begin(), uniq.end());
        cols = rows;
      } else {
        for (const auto& [lang, _] : graph.entries()) rows.push_back(lang);
        cols = rows;
      }
      auto sim = typology::build_similarity_matrix(graph, rows, cols);
      for (const auto& l : sim.dropped) std::cerr << "warning: no entry for " << l.str() << "\n";
      emit(sg_out, matrix_to_csv(sim.matrix));
      if (!sg_raw.empty() && sim.raw) write_file_atomic(sg_raw, matrix_to_csv(*sim.raw));
    } else if (*kl) {
      auto aligned = divergence::align_matrices(matrix_from_csv(read_text_file(kl_conf)),
                                                matrix_from_csv(read_text_file(kl_sim)));
      for (const auto& l : aligned.coverage.rows_only_in_confusion)
        std::cerr << "warning: row " << l.str() << " has no similarity entry\n";
      for (const auto& l : aligned.coverage.cols_only_in_confusion)
        std::cerr << "warning: column " << l.str() << " has no similarity entry\n";
      auto report = divergence::kl_matrix_divergence(aligned.confusion, aligned.similarity);
      if (!kl_json.empty()) write_file_atomic(kl_json, divergence::kl_report_json(report, kl_name));
      if (!kl_csv.empty() || kl_json.empty()) emit(kl_csv, divergence::kl_report_csv(report, kl_name));
    } else if (*corr) {
      auto table = pipeline::metric_table_from_csv(read_text_file(cr_table), split_list(cr_cols), cr_split);
      metrics::SpearmanOptions options{metrics::parse_pvalue_method(cr_method), cr_seed};
      emit(cr_out, pipeline::correlations_to_csv(pipeline::correlate(table, options)));
    } else if (*run) {
      auto config = pipeline::load_config(run_config);
      auto summary = pipeline::run_pipeline(config);
      for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
      std::cerr << summary.records << " records, " << summary.artifacts.size() << " artifacts in "
                << config.output_dir.string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "langconf: error: " << e.what() << "\n";
    return pipeline::exit_code_for(e);
  }
  return 0;
}
