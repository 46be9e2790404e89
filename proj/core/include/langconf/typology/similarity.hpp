#pragma once

#include <optional>
#include <vector>

#include "langconf/labeled_matrix.hpp"
#include "langconf/typology/graph.hpp"

namespace langconf::typology {

/// Multivalued: agreeing (feature, value) pairs over features both languages
/// attest. Binary: |A ∩ B| / |A ∪ B|. Both are 0 when nothing is shared.
double jaccard_similarity(const FeatureVector& a, const FeatureVector& b);
double jaccard_similarity(const BinaryFeatureSet& a, const BinaryFeatureSet& b);
/// Throws KindMismatch unless both hold feature vectors or both binary sets.
double jaccard_similarity(const Representation& a, const Representation& b);

/// Throws DimensionMismatch or ZeroVector.
double cosine_similarity(const Embedding& a, const Embedding& b);

/// Kernel value for two entries of the graph, after the graph's transform.
double graph_similarity(const LanguageGraph& graph, const Representation& a, const Representation& b);

struct SimilarityMatrix {
  LabeledMatrix matrix;              // non-negative, ready for divergence
  std::optional<LabeledMatrix> raw;  // unclipped values, cosine kernels only
  std::vector<LanguageTag> dropped;  // requested languages the graph lacks
};

/// Pairwise similarities for the requested axes. Requested languages missing
/// from the graph are dropped and listed; cosine values are clipped at 0.
/// Throws NoCoverage when an axis ends up empty.
SimilarityMatrix build_similarity_matrix(const LanguageGraph& graph, const std::vector<LanguageTag>& rows,
                                         const std::vector<LanguageTag>& cols);

}  // namespace langconf::typology
