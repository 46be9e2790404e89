#include "langconf/typology/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "langconf/error.hpp"

namespace langconf::typology {

double jaccard_similarity(const FeatureVector& a, const FeatureVector& b) {
  std::size_t shared = 0, agree = 0;
  for (const auto& [feature, value] : a.features) {
    const auto it = b.features.find(feature);
    if (it == b.features.end()) continue;
    ++shared;
    if (it->second == value) ++agree;
  }
  return shared == 0 ? 0.0 : static_cast<double>(agree) / static_cast<double>(shared);
}

double jaccard_similarity(const BinaryFeatureSet& a, const BinaryFeatureSet& b) {
  std::size_t intersection = 0;
  for (const auto& f : a.present) {
    if (b.present.contains(f)) ++intersection;
  }
  const std::size_t uni = a.present.size() + b.present.size() - intersection;
  return uni == 0 ? 0.0 : static_cast<double>(intersection) / static_cast<double>(uni);
}

double jaccard_similarity(const Representation& a, const Representation& b) {
  if (const auto* fa = std::get_if<FeatureVector>(&a)) {
    if (const auto* fb = std::get_if<FeatureVector>(&b)) return jaccard_similarity(*fa, *fb);
  } else if (const auto* ba = std::get_if<BinaryFeatureSet>(&a)) {
    if (const auto* bb = std::get_if<BinaryFeatureSet>(&b)) return jaccard_similarity(*ba, *bb);
  }
  throw Error(ErrorCode::KindMismatch, "jaccard needs two feature vectors or two binary feature sets");
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
  if (a.vector.size() != b.vector.size()) {
    throw Error(ErrorCode::DimensionMismatch, "embeddings of " + a.lang.str() + " and " + b.lang.str() + " differ in size");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.vector.size(); ++i) {
    dot += a.vector[i] * b.vector[i];
    na += a.vector[i] * a.vector[i];
    nb += b.vector[i] * b.vector[i];
  }
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::ZeroVector, "cosine similarity of a zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double graph_similarity(const LanguageGraph& graph, const Representation& a, const Representation& b) {
  if (graph.kernel() == Kernel::Jaccard) return jaccard_similarity(a, b);
  const auto* ea = std::get_if<Embedding>(&a);
  const auto* eb = std::get_if<Embedding>(&b);
  if (!ea || !eb) throw Error(ErrorCode::KindMismatch, "cosine needs two embeddings");
  const double c = cosine_similarity(*ea, *eb);
  if (graph.transform() == KernelTransform::Arccos) return 1.0 - std::acos(c) / std::numbers::pi;
  return c;
}

SimilarityMatrix build_similarity_matrix(const LanguageGraph& graph, const std::vector<LanguageTag>& rows,
                                         const std::vector<LanguageTag>& cols) {
  if (graph.entries().empty()) throw Error(ErrorCode::NoCoverage, "graph " + graph.name() + " is empty");
  std::vector<LanguageTag> dropped;
  auto keep = [&](const std::vector<LanguageTag>& requested) {
    std::vector<LanguageTag> kept;
    for (const auto& l : requested) {
      if (graph.contains(l)) kept.push_back(l);
      else if (std::find(dropped.begin(), dropped.end(), l) == dropped.end()) dropped.push_back(l);
    }
    return kept;
  };
  auto kept_rows = keep(rows);
  auto kept_cols = keep(cols);
  if (kept_rows.empty() || kept_cols.empty()) {
    throw Error(ErrorCode::NoCoverage, "graph " + graph.name() + " covers none of the requested languages");
  }

  std::vector<double> raw;
  raw.reserve(kept_rows.size() * kept_cols.size());
  for (const auto& r : kept_rows) {
    for (const auto& c : kept_cols) raw.push_back(graph_similarity(graph, graph.at(r), graph.at(c)));
  }
  std::vector<double> clipped = raw;
  for (double& v : clipped) v = std::max(0.0, v);

  std::optional<LabeledMatrix> raw_matrix;
  if (graph.kernel() == Kernel::Cosine) raw_matrix.emplace(kept_rows, kept_cols, std::move(raw));
  return SimilarityMatrix{LabeledMatrix(std::move(kept_rows), std::move(kept_cols), std::move(clipped)),
                          std::move(raw_matrix), std::move(dropped)};
}

}  // namespace langconf::typology
