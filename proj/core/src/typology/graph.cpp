#include "langconf/typology/graph.hpp"

#include "langconf/error.hpp"

namespace langconf::typology {
namespace {

GraphKind kind_of(const Representation& r) {
  if (std::holds_alternative<FeatureVector>(r)) return GraphKind::Multivalued;
  if (std::holds_alternative<BinaryFeatureSet>(r)) return GraphKind::Binary;
  return GraphKind::Embedding;
}

}  // namespace

std::string_view to_string(GraphKind k) noexcept {
  switch (k) {
    case GraphKind::Multivalued: return "multivalued";
    case GraphKind::Binary: return "binary";
    case GraphKind::Embedding: return "embedding";
  }
  return "";
}

std::string_view to_string(Kernel k) noexcept {
  return k == Kernel::Jaccard ? "jaccard" : "cosine";
}

std::string_view to_string(KernelTransform t) noexcept {
  return t == KernelTransform::None ? "none" : "arccos";
}

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "multivalued") return GraphKind::Multivalued;
  if (text == "binary") return GraphKind::Binary;
  if (text == "embedding") return GraphKind::Embedding;
  throw Error(ErrorCode::InvalidArgument, "unknown graph kind '" + std::string(text) + "'");
}

Kernel parse_kernel(std::string_view text) {
  if (text == "jaccard") return Kernel::Jaccard;
  if (text == "cosine") return Kernel::Cosine;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel '" + std::string(text) + "'");
}

KernelTransform parse_kernel_transform(std::string_view text) {
  if (text == "none") return KernelTransform::None;
  if (text == "arccos") return KernelTransform::Arccos;
  throw Error(ErrorCode::InvalidArgument, "unknown kernel transform '" + std::string(text) + "'");
}

Kernel default_kernel(GraphKind kind) noexcept {
  return kind == GraphKind::Embedding ? Kernel::Cosine : Kernel::Jaccard;
}

LanguageGraph::LanguageGraph(std::string name, GraphKind kind, Entries entries, Kernel kernel,
                             KernelTransform transform, std::vector<std::string> warnings)
    : name_(std::move(name)),
      kind_(kind),
      entries_(std::move(entries)),
      kernel_(kernel),
      transform_(transform),
      warnings_(std::move(warnings)) {
  if ((kernel_ == Kernel::Jaccard) == (kind_ == GraphKind::Embedding)) {
    throw Error(ErrorCode::KindMismatch,
                std::string(to_string(kernel_)) + " kernel cannot compare " + std::string(to_string(kind_)) + " entries");
  }
  if (transform_ == KernelTransform::Arccos && kernel_ != Kernel::Cosine) {
    throw Error(ErrorCode::KindMismatch, "the arccos transform applies to cosine similarities only");
  }
  for (const auto& [lang, rep] : entries_) {
    if (kind_of(rep) != kind_) throw Error(ErrorCode::KindMismatch, "entry for " + lang.str() + " has the wrong kind");
  }
}

const Representation& LanguageGraph::at(const LanguageTag& lang) const {
  const auto it = entries_.find(lang);
  if (it == entries_.end()) throw Error(ErrorCode::NoCoverage, lang.str() + " is not in graph " + name_);
  return it->second;
}

LanguageGraph LanguageGraph::with_kernel(Kernel kernel, KernelTransform transform) const {
  return LanguageGraph(name_, kind_, entries_, kernel, transform, warnings_);
}

}  // namespace langconf::typology
