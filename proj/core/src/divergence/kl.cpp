#include "langconf/divergence/kl.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>
#include "langconf/error.hpp"
#include "langconf/format.hpp"

namespace langconf::divergence {
namespace {

struct Split {
  std::vector<LanguageTag> common, only_a, only_b;
};

Split split_labels(const std::vector<LanguageTag>& a, const std::vector<LanguageTag>& b) {
  const std::set<LanguageTag> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  Split s;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(s.common));
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(s.only_a));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::back_inserter(s.only_b));
  return s;
}

}  // namespace

AlignedMatrices align_matrices(const LabeledMatrix& confusion, const LabeledMatrix& similarity) {
  const Split rows = split_labels(confusion.row_labels(), similarity.row_labels());
  const Split cols = split_labels(confusion.col_labels(), similarity.col_labels());
  if (rows.common.empty()) throw Error(ErrorCode::NoOverlap, "confusion and similarity matrices share no row labels");
  if (cols.common.empty()) throw Error(ErrorCode::NoOverlap, "confusion and similarity matrices share no column labels");
  return AlignedMatrices{confusion.reindexed(rows.common, cols.common), similarity.reindexed(rows.common, cols.common),
                         CoverageReport{rows.only_a, rows.only_b, cols.only_a, cols.only_b}};
}

double kl_column(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error(ErrorCode::LengthMismatch, "KL columns differ in length");
  std::vector<double> ps, qs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) throw Error(ErrorCode::InvalidArgument, "KL columns must be non-negative");
    if (p[i] != 0.0) {
      ps.push_back(p[i]);
      qs.push_back(q[i]);
    }
  }
  if (ps.empty()) throw Error(ErrorCode::AllZeroColumn, "confusion column has no non-zero entry");

  double sum_p = 0.0, sum_q = 0.0;
  for (double v : ps) sum_p += v;
  for (double v : qs) sum_q += v;
  for (double& v : ps) v = v / sum_p + kKlEpsilon;
  for (double& v : qs) v = (sum_q != 0.0 ? v / sum_q : v) + kKlEpsilon;

  double kl = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) kl += ps[i] * std::log(ps[i] / qs[i]);
  return kl;
}

KLReport kl_matrix_divergence(const LabeledMatrix& confusion, const LabeledMatrix& similarity) {
  if (confusion.row_labels() != similarity.row_labels() || confusion.col_labels() != similarity.col_labels()) {
    throw Error(ErrorCode::DimensionMismatch, "matrices are not aligned; call align_matrices first");
  }
  KLReport report;
  double sum = 0.0;
  for (std::size_t j = 0; j < confusion.cols(); ++j) {
    const auto p = confusion.column(j);
    if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) {
      report.skipped_columns.insert(confusion.col_labels()[j]);
      continue;
    }
    const double kl = kl_column(p, similarity.column(j));
    report.per_column.emplace(confusion.col_labels()[j], kl);
    sum += kl;
  }
  if (report.per_column.empty()) throw Error(ErrorCode::AllColumnsSkipped, "every confusion column is all zero");
  report.mean_kl = sum / static_cast<double>(report.per_column.size());
  return report;
}

std::string kl_report_json(const KLReport& report, const std::string& name) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["mean_kl"] = report.mean_kl;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& [lang, v] : report.per_column) per[lang.str()] = v;
  j["per_column"] = std::move(per);
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& lang : report.skipped_columns) skipped.push_back(lang.str());
  j["skipped_columns"] = std::move(skipped);
  j["skip_rule"] = "all-zero confusion columns are excluded from the mean";
  return j.dump(2) + "\n";
}

std::string kl_report_csv(const KLReport& report, const std::string& name) {
  std::string out = "name,mean_kl,columns,skipped\n";
  out += csv_escape(name) + "," + format_number(report.mean_kl) + "," + std::to_string(report.per_column.size()) + "," +
         std::to_string(report.skipped_columns.size()) + "\n";
  return out;
}

}  // namespace langconf::divergence
