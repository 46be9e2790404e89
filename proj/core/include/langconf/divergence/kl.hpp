#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "langconf/labeled_matrix.hpp"
#include "langconf/record.hpp"

namespace langconf::divergence {

/// Smoothing added to both restricted, normalized columns before the log ratio.
inline constexpr double kKlEpsilon = 1e-10;

struct CoverageReport {
  std::vector<LanguageTag> rows_only_in_confusion;
  std::vector<LanguageTag> rows_only_in_similarity;
  std::vector<LanguageTag> cols_only_in_confusion;
  std::vector<LanguageTag> cols_only_in_similarity;
};

struct AlignedMatrices {
  LabeledMatrix confusion;
  LabeledMatrix similarity;
  CoverageReport coverage;
};

/// Reindexes both matrices onto the sorted intersection of their row labels and
/// of their column labels. Throws NoOverlap when either intersection is empty.
AlignedMatrices align_matrices(const LabeledMatrix& confusion, const LabeledMatrix& similarity);

/// KL divergence of one column pair:
///   1. keep the indices where p is non-zero,
///   2. normalize both restricted columns to sum 1,
///   3. add kKlEpsilon to every entry of both,
///   4. return sum P log(P / Q).
/// A restricted q summing to 0 is left unnormalized (all entries become eps).
/// Throws LengthMismatch, InvalidArgument on negative entries, and
/// AllZeroColumn when p has no non-zero entry.
double kl_column(std::span<const double> p, std::span<const double> q);

struct KLReport {
  double mean_kl = 0.0;
  std::map<LanguageTag, double> per_column;
  LanguageSet skipped_columns;  // all-zero confusion columns
};

/// Column-wise divergence averaged over the computed columns. Both matrices
/// must carry identical labels (see align_matrices). Throws DimensionMismatch
/// or AllColumnsSkipped.
KLReport kl_matrix_divergence(const LabeledMatrix& confusion, const LabeledMatrix& similarity);

std::string kl_report_json(const KLReport& report, const std::string& name);

/// Header and single data row: name,mean_kl,columns,skipped.
std::string kl_report_csv(const KLReport& report, const std::string& name);

}  // namespace langconf::divergence
