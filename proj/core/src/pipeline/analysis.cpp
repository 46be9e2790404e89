#include "langconf/pipeline/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "langconf/error.hpp"
#include "langconf/format.hpp"

namespace langconf::pipeline {
namespace {

constexpr int kDigits = 6;

std::string na_or(const std::optional<double>& v) { return v ? format_number(*v, kDigits) : "NA"; }

std::string join_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(cells[i]);
  }
  out += '\n';
  return out;
}

std::optional<double> mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

std::optional<double> parse_cell(const std::string& cell, std::size_t line_no, const std::string& column) {
  if (cell.empty() || cell == "NA" || cell == "nan") return std::nullopt;
  try {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": column '" + column + "' is not numeric: '" + cell + "'");
  }
}

}  // namespace

std::string_view to_string(Subset s) noexcept {
  switch (s) {
    case Subset::All: return "all";
    case Subset::Monolingual: return "monolingual";
    case Subset::Crosslingual: return "crosslingual";
  }
  return "";
}

Subset parse_subset(std::string_view text) {
  for (auto s : {Subset::All, Subset::Monolingual, Subset::Crosslingual}) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown subset '" + std::string(text) + "'");
}

bool in_subset(const GenerationRecord& r, Subset subset) noexcept {
  switch (subset) {
    case Subset::All: return true;
    case Subset::Monolingual: return r.setting == Setting::Monolingual;
    case Subset::Crosslingual: return r.setting == Setting::Crosslingual;
  }
  return false;
}

EntropyTable compute_entropies(const std::vector<ScoredRecord>& records, const metrics::EntropyOptions& options) {
  EntropyTable out;
  for (const auto& s : records) {
    if (s.line.unit_count() == 0) {
      out.warnings.push_back("record '" + s.record.id + "': empty response, excluded from aggregation");
      continue;
    }
    const auto expected = ExpectationSet::for_record(s.record);
    for (const LanguageDistribution* d : {&s.line, &s.word}) {
      if (d->unit_count() == 0) continue;
      try {
        auto normalized = normalize_distribution(*d);
        out.observations.push_back(
            {&s.record, d->granularity(), metrics::confusion_entropy(normalized, expected, options)});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AllUnidentified) throw;
        out.warnings.push_back("record '" + s.record.id + "': no " + std::string(to_string(d->granularity())) +
                               " identified, excluded at that granularity");
      }
    }
  }
  return out;
}

std::vector<metrics::EntropyObservation> select(std::span<const metrics::EntropyObservation> observations,
                                                Granularity granularity, Subset subset) {
  std::vector<metrics::EntropyObservation> out;
  for (const auto& o : observations) {
    if (o.granularity == granularity && in_subset(*o.record, subset)) out.push_back(o);
  }
  return out;
}

std::vector<MetricCell> build_metric_cells(const std::vector<ScoredRecord>& records,
                                           std::span<const metrics::EntropyObservation> observations,
                                           metrics::WprMode mode) {
  using Key = std::tuple<std::string, Setting, LanguageTag>;
  auto key_of = [](const GenerationRecord& r) { return Key{r.model, r.setting, r.target_lang}; };

  std::map<Key, std::vector<metrics::PassRateInput>> inputs;
  for (const auto& s : records) {
    if (s.line.unit_count() == 0) continue;
    inputs[key_of(s.record)].push_back({&s.record, &s.line, &s.word});
  }
  std::map<Key, std::vector<double>> line_h, word_h;
  for (const auto& o : observations) {
    auto& target = o.granularity == Granularity::Line ? line_h : word_h;
    target[key_of(*o.record)].push_back(o.entropy.value);
  }

  std::vector<MetricCell> cells;
  for (const auto& [key, ins] : inputs) {
    MetricCell c;
    std::tie(c.model, c.setting, c.target) = key;
    c.records = ins.size();
    c.hc_line = mean_of(line_h[key]);
    c.hc_word = mean_of(word_h[key]);
    c.lpr = metrics::line_pass_rate(ins);
    for (const auto& in : ins) c.line_passers += metrics::has_line_error(*in.record, *in.line) ? 0 : 1;
    if (c.line_passers > 0) c.wpr = metrics::word_pass_rate(ins, mode);
    cells.push_back(std::move(c));
  }
  return cells;
}

MetricTable metric_table(const std::vector<MetricCell>& cells) {
  MetricTable t;
  t.columns = {"hc_line", "hc_word", "lpr", "wpr"};
  for (const auto& c : cells) {
    t.split_values.emplace_back(to_string(c.setting));
    t.rows.push_back({c.hc_line, c.hc_word, c.lpr, c.wpr});
  }
  return t;
}

std::vector<CorrelationRow> correlate(const MetricTable& table, const metrics::SpearmanOptions& options) {
  std::vector<std::string> subsets = {"all"};
  std::set<std::string> splits(table.split_values.begin(), table.split_values.end());
  for (const auto& s : splits) {
    if (!s.empty() && s != "all") subsets.push_back(s);
  }

  std::vector<CorrelationRow> out;
  for (const auto& subset : subsets) {
    for (std::size_t a = 0; a < table.columns.size(); ++a) {
      for (std::size_t b = a + 1; b < table.columns.size(); ++b) {
        CorrelationRow row{subset, table.columns[a], table.columns[b], 0, std::nullopt, ""};
        std::vector<double> xs, ys;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
          if (subset != "all" && table.split_values[r] != subset) continue;
          const auto& x = table.rows[r][a];
          const auto& y = table.rows[r][b];
          if (x && y) {
            xs.push_back(*x);
            ys.push_back(*y);
          }
        }
        row.n = xs.size();
        metrics::SpearmanOptions opts = options;
        if (opts.method == metrics::PValueMethod::ExactPermutation && row.n > 10) {
          opts.method = metrics::PValueMethod::MonteCarloPermutation;
          row.note = "exact permutation limited to n <= 10; Monte Carlo used";
        }
        try {
          row.result = metrics::spearman(xs, ys, opts);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateInput) throw;
          row.note = row.n < 3 ? "fewer than 3 complete rows" : "constant input";
        }
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

std::string cells_to_csv(const std::vector<MetricCell>& cells) {
  std::string out = "model,setting,target_lang,records,line_passers,hc_line,hc_word,lpr,wpr\n";
  for (const auto& c : cells) {
    out += join_row({c.model, std::string(to_string(c.setting)), c.target.str(), std::to_string(c.records),
                     std::to_string(c.line_passers), na_or(c.hc_line), na_or(c.hc_word), na_or(c.lpr), na_or(c.wpr)});
  }
  return out;
}

MetricTable metric_table_from_csv(std::string_view csv, const std::vector<std::string>& columns,
                                  const std::string& split_column) {
  if (columns.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two columns to correlate");
  MetricTable t;
  t.columns = columns;
  std::vector<std::size_t> idx;
  std::optional<std::size_t> split_idx;
  std::size_t header_width = 0;
  std::size_t start = 0, line_no = 0;
  bool header_seen = false;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (!header_seen) {
      header_seen = true;
      header_width = cells.size();
      for (const auto& c : columns) {
        auto it = std::find(cells.begin(), cells.end(), c);
        if (it == cells.end()) throw Error(ErrorCode::ParseError, "column '" + c + "' not in header");
        idx.push_back(static_cast<std::size_t>(it - cells.begin()));
      }
      if (!split_column.empty()) {
        auto it = std::find(cells.begin(), cells.end(), split_column);
        if (it == cells.end()) throw Error(ErrorCode::ParseError, "column '" + split_column + "' not in header");
        split_idx = static_cast<std::size_t>(it - cells.begin());
      }
      continue;
    }
    if (cells.size() != header_width) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(header_width) + " cells, got " +
                                             std::to_string(cells.size()));
    }
    std::vector<std::optional<double>> row;
    for (std::size_t k = 0; k < idx.size(); ++k) row.push_back(parse_cell(cells[idx[k]], line_no, columns[k]));
    t.rows.push_back(std::move(row));
    t.split_values.push_back(split_idx ? cells[*split_idx] : "");
  }
  if (!header_seen) throw Error(ErrorCode::EmptyInput, "table is empty");
  return t;
}

std::string correlations_to_csv(const std::vector<CorrelationRow>& rows) {
  std::string out = "subset,x,y,n,rho,p_value,stars,method,note\n";
  for (const auto& r : rows) {
    if (r.result) {
      out += join_row({r.subset, r.x, r.y, std::to_string(r.n), format_number(r.result->rho, kDigits),
                       format_number(r.result->p_value, kDigits), std::string(metrics::significance_stars(r.result->p_value)),
                       std::string(metrics::to_string(r.result->method)), r.note});
    } else {
      out += join_row({r.subset, r.x, r.y, std::to_string(r.n), "NA", "NA", "", "", r.note});
    }
  }
  return out;
}

std::string entropy_records_csv(std::span<const metrics::EntropyObservation> observations) {
  std::string out = "id,model,dataset,setting,task,target_lang,eval_step,granularity,entropy,missing_expected\n";
  for (const auto& o : observations) {
    const auto& r = *o.record;
    std::string missing;
    for (const auto& l : o.entropy.support_missing_expected) {
      if (!missing.empty()) missing += ' ';
      missing += l.str();
    }
    out += join_row({r.id, r.model, r.dataset, std::string(to_string(r.setting)), std::string(to_string(r.task)),
                     r.target_lang.str(), r.eval_step.value_or(""), std::string(to_string(o.granularity)),
                     format_number(o.entropy.value, kDigits), missing});
  }
  return out;
}

std::string aggregate_csv(const std::vector<metrics::AggregateRow>& rows, const metrics::AggregateKey& key) {
  std::vector<std::string> header;
  for (auto f : key.fields()) header.emplace_back(metrics::to_string(f));
  header.insert(header.end(), {"count", "mean", "stddev"});
  std::string out = join_row(header);
  for (const auto& r : rows) {
    std::vector<std::string> cells = r.key_values;
    cells.push_back(std::to_string(r.count));
    cells.push_back(format_number(r.mean, kDigits));
    cells.push_back(format_number(r.stddev, kDigits));
    out += join_row(cells);
  }
  return out;
}

}  // namespace langconf::pipeline
