#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "langconf/labeled_matrix.hpp"
#include "langconf/metrics/aggregate.hpp"
#include "langconf/metrics/entropy.hpp"
#include "langconf/metrics/pass_rate.hpp"
#include "langconf/metrics/spearman.hpp"
#include "langconf/pipeline/distribution_io.hpp"

namespace langconf::pipeline {

// Corpus-level computations shared by the `run` pipeline and the individual
// CLI subcommands. Inputs are expected in deterministic (record id) order.

enum class Subset { All, Monolingual, Crosslingual };
std::string_view to_string(Subset s) noexcept;
Subset parse_subset(std::string_view text);
bool in_subset(const GenerationRecord& record, Subset subset) noexcept;

struct EntropyTable {
  std::vector<metrics::EntropyObservation> observations;  // points into the scored records
  std::vector<std::string> warnings;                       // excluded records
};

/// Normalizes each distribution and scores it. Records with no units or with
/// nothing identified are skipped for that granularity, with a warning.
EntropyTable compute_entropies(const std::vector<ScoredRecord>& records, const metrics::EntropyOptions& options);

std::vector<metrics::EntropyObservation> select(std::span<const metrics::EntropyObservation> observations,
                                                Granularity granularity, Subset subset);

/// One row per (model, setting, target language).
struct MetricCell {
  std::string model;
  Setting setting = Setting::Monolingual;
  LanguageTag target{"und"};
  std::size_t records = 0;
  std::optional<double> hc_line;
  std::optional<double> hc_word;
  std::optional<double> lpr;
  std::optional<double> wpr;  // absent when no record passes the line level
  std::size_t line_passers = 0;
};

/// Entropy means and pass rates per cell; records with empty responses are left out.
std::vector<MetricCell> build_metric_cells(const std::vector<ScoredRecord>& records,
                                           std::span<const metrics::EntropyObservation> observations,
                                           metrics::WprMode mode);

/// Column-oriented view of a table for correlation: name -> per-row optional values.
struct MetricTable {
  std::vector<std::string> columns;
  std::vector<std::string> split_values;            // per row, e.g. the setting
  std::vector<std::vector<std::optional<double>>> rows;
};

MetricTable metric_table(const std::vector<MetricCell>& cells);

struct CorrelationRow {
  std::string subset;
  std::string x;
  std::string y;
  std::size_t n = 0;
  std::optional<metrics::SpearmanResult> result;
  std::string note;  // why result is absent
};

/// Spearman correlation of every column pair, over all rows and within each
/// distinct split value. Pairs with a missing value are dropped row-wise.
std::vector<CorrelationRow> correlate(const MetricTable& table, const metrics::SpearmanOptions& options);

std::string cells_to_csv(const std::vector<MetricCell>& cells);
/// Reads a cells CSV (or any CSV with numeric columns). Empty or `NA` cells are missing.
MetricTable metric_table_from_csv(std::string_view csv, const std::vector<std::string>& columns,
                                  const std::string& split_column);
std::string correlations_to_csv(const std::vector<CorrelationRow>& rows);

std::string entropy_records_csv(std::span<const metrics::EntropyObservation> observations);
std::string aggregate_csv(const std::vector<metrics::AggregateRow>& rows, const metrics::AggregateKey& key);

}  // namespace langconf::pipeline
