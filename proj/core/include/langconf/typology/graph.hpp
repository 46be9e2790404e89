#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "langconf/language_tag.hpp"

namespace langconf::typology {

/// Categorical features (e.g. Grambank, WALS); absent ids are missing values.
struct FeatureVector {
  LanguageTag lang;
  std::map<std::string, std::string> features;
};

/// Attested binary features (e.g. colexification patterns).
struct BinaryFeatureSet {
  LanguageTag lang;
  std::set<std::string> present;
};

/// Dense language embedding.
struct Embedding {
  LanguageTag lang;
  std::vector<double> vector;
};

using Representation = std::variant<FeatureVector, BinaryFeatureSet, Embedding>;

enum class GraphKind { Multivalued, Binary, Embedding };
enum class Kernel { Jaccard, Cosine };
/// Arccos maps a cosine c to 1 - arccos(c) / pi.
enum class KernelTransform { None, Arccos };

std::string_view to_string(GraphKind k) noexcept;
std::string_view to_string(Kernel k) noexcept;
std::string_view to_string(KernelTransform t) noexcept;
GraphKind parse_graph_kind(std::string_view text);
Kernel parse_kernel(std::string_view text);
KernelTransform parse_kernel_transform(std::string_view text);

/// Kernel implied by a representation kind: Jaccard for feature sets, cosine for embeddings.
Kernel default_kernel(GraphKind kind) noexcept;

/// Per-language representations of one kind plus the kernel used to compare them.
class LanguageGraph {
 public:
  using Entries = std::map<LanguageTag, Representation>;

  /// Throws KindMismatch when the kernel does not fit the kind, or when an
  /// entry's representation is of a different kind.
  LanguageGraph(std::string name, GraphKind kind, Entries entries, Kernel kernel,
                KernelTransform transform = KernelTransform::None, std::vector<std::string> warnings = {});

  const std::string& name() const noexcept { return name_; }
  GraphKind kind() const noexcept { return kind_; }
  Kernel kernel() const noexcept { return kernel_; }
  KernelTransform transform() const noexcept { return transform_; }
  const Entries& entries() const noexcept { return entries_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool contains(const LanguageTag& lang) const { return entries_.contains(lang); }
  const Representation& at(const LanguageTag& lang) const;

  LanguageGraph with_kernel(Kernel kernel, KernelTransform transform) const;

 private:
  std::string name_;
  GraphKind kind_;
  Entries entries_;
  Kernel kernel_;
  KernelTransform transform_;
  std::vector<std::string> warnings_;
};

}  // namespace langconf::typology
