#include "langconf/pipeline/config.hpp"

#include <cstdlib>
#include <memory>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/lid/ngram_detector.hpp"
#include "langconf/lid/profile.hpp"
#include "langconf/lid/script_detector.hpp"

namespace langconf::pipeline {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, "config: " + msg); }

fs::path resolve(const fs::path& base, const std::string& raw) {
  fs::path p(raw);
  if (p.is_relative()) p = base / p;
  return p.lexically_normal();
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(std::string("missing '") + key + "'");
  return *it;
}

std::string string_of(const json& v, const std::string& what) {
  if (!v.is_string()) invalid(what + " must be a string");
  return v.get<std::string>();
}

template <typename Fn>
auto wrap(Fn&& fn, const std::string& what) {
  try {
    return fn();
  } catch (const Error& e) {
    invalid(what + ": " + e.what());
  }
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) invalid("unknown key '" + it.key() + "' in " + where);
  }
}

}  // namespace

PipelineConfig parse_config(std::string_view text, const fs::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    invalid(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) invalid("top level must be an object");
  check_keys(root,
             {"inputs", "detectors", "log_base", "zero_probability", "wpr_mode", "aggregation_keys", "graphs",
              "output_dir", "seed", "pvalue_method"},
             "config");

  PipelineConfig c;
  const json& inputs = member(root, "inputs");
  if (!inputs.is_array()) invalid("'inputs' must be an array");
  for (const auto& in : inputs) {
    if (!in.is_object()) invalid("each input must be an object");
    check_keys(in, {"path", "format"}, "input");
    InputSpec spec;
    spec.path = resolve(base_dir, string_of(member(in, "path"), "input path"));
    if (in.contains("format")) {
      std::string f = string_of(in["format"], "input format");
      spec.format = wrap([&] { return parse_input_format(f); }, "input format");
    }
    c.inputs.push_back(std::move(spec));
  }

  if (root.contains("detectors")) {
    const json& dets = root["detectors"];
    if (!dets.is_array()) invalid("'detectors' must be an array");
    for (const auto& d : dets) {
      if (!d.is_object()) invalid("each detector must be an object");
      check_keys(d, {"name", "profiles", "seed", "margin", "abstain_on_unseen"}, "detector");
      DetectorSpec spec;
      spec.name = string_of(member(d, "name"), "detector name");
      if (d.contains("profiles")) spec.profiles = resolve(base_dir, string_of(d["profiles"], "profiles"));
      if (d.contains("seed")) spec.seed = resolve(base_dir, string_of(d["seed"], "seed"));
      if (d.contains("margin")) {
        if (!d["margin"].is_number()) invalid("margin must be a number");
        spec.margin = d["margin"].get<double>();
      }
      if (d.contains("abstain_on_unseen")) {
        if (!d["abstain_on_unseen"].is_boolean()) invalid("abstain_on_unseen must be a boolean");
        spec.abstain_on_unseen = d["abstain_on_unseen"].get<bool>();
      }
      c.detectors.push_back(std::move(spec));
    }
  } else {
    DetectorSpec ngram, script;
    ngram.name = "ngram";
    script.name = "script";
    c.detectors = {ngram, script};
  }

  if (root.contains("log_base")) {
    std::string s = string_of(root["log_base"], "log_base");
    c.log_base = wrap([&] { return metrics::parse_log_base(s); }, "log_base");
  }
  if (root.contains("zero_probability")) {
    std::string s = string_of(root["zero_probability"], "zero_probability");
    c.zero_rule = wrap([&] { return metrics::parse_zero_probability_rule(s); }, "zero_probability");
  }
  if (root.contains("wpr_mode")) {
    std::string s = string_of(root["wpr_mode"], "wpr_mode");
    c.wpr_mode = wrap([&] { return metrics::parse_wpr_mode(s); }, "wpr_mode");
  }
  if (root.contains("aggregation_keys")) {
    const json& keys = root["aggregation_keys"];
    if (!keys.is_array() || keys.empty()) invalid("'aggregation_keys' must be a non-empty array");
    c.aggregation_keys.clear();
    for (const auto& k : keys) {
      std::string s = string_of(k, "aggregation key");
      c.aggregation_keys.push_back(wrap([&] { return metrics::parse_key_field(s); }, "aggregation key"));
    }
    c.aggregation_keys = metrics::AggregateKey(c.aggregation_keys).fields();
  }
  if (root.contains("graphs")) {
    const json& graphs = root["graphs"];
    if (!graphs.is_array()) invalid("'graphs' must be an array");
    for (const auto& g : graphs) {
      if (!g.is_object()) invalid("each graph must be an object");
      check_keys(g, {"name", "path", "kind", "transform", "code_map"}, "graph");
      GraphSpec spec;
      spec.path = resolve(base_dir, string_of(member(g, "path"), "graph path"));
      spec.name = g.contains("name") ? string_of(g["name"], "graph name") : spec.path.stem().string();
      std::string kind = string_of(member(g, "kind"), "graph kind");
      spec.kind = wrap([&] { return typology::parse_graph_kind(kind); }, "graph kind");
      if (g.contains("transform")) {
        std::string t = string_of(g["transform"], "transform");
        spec.transform = wrap([&] { return typology::parse_kernel_transform(t); }, "transform");
      }
      if (g.contains("code_map")) spec.code_map = resolve(base_dir, string_of(g["code_map"], "code_map"));
      c.graphs.push_back(std::move(spec));
    }
  }
  c.output_dir = resolve(base_dir, string_of(member(root, "output_dir"), "output_dir"));
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) invalid("seed must be a non-negative integer");
    c.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("pvalue_method")) {
    std::string s = string_of(root["pvalue_method"], "pvalue_method");
    c.pvalue_method = wrap([&] { return metrics::parse_pvalue_method(s); }, "pvalue_method");
  }
  return c;
}

PipelineConfig load_config(const fs::path& path) {
  return parse_config(read_text_file(path), fs::absolute(path).parent_path());
}

std::string config_to_json(const PipelineConfig& c) {
  ordered_json root = ordered_json::object();
  ordered_json inputs = ordered_json::array();
  for (const auto& in : c.inputs) {
    inputs.push_back({{"path", in.path.string()}, {"format", std::string(to_string(in.format))}});
  }
  root["inputs"] = inputs;
  ordered_json dets = ordered_json::array();
  for (const auto& d : c.detectors) {
    ordered_json o = {{"name", d.name}};
    if (d.profiles) o["profiles"] = d.profiles->string();
    if (d.seed) o["seed"] = d.seed->string();
    o["margin"] = d.margin;
    o["abstain_on_unseen"] = d.abstain_on_unseen;
    dets.push_back(o);
  }
  root["detectors"] = dets;
  root["log_base"] = std::string(metrics::to_string(c.log_base));
  root["zero_probability"] = std::string(metrics::to_string(c.zero_rule));
  root["wpr_mode"] = std::string(metrics::to_string(c.wpr_mode));
  ordered_json keys = ordered_json::array();
  for (auto k : c.aggregation_keys) keys.push_back(std::string(metrics::to_string(k)));
  root["aggregation_keys"] = keys;
  ordered_json graphs = ordered_json::array();
  for (const auto& g : c.graphs) {
    ordered_json o = {{"name", g.name},
                      {"path", g.path.string()},
                      {"kind", std::string(typology::to_string(g.kind))},
                      {"transform", std::string(typology::to_string(g.transform))}};
    if (g.code_map) o["code_map"] = g.code_map->string();
    graphs.push_back(o);
  }
  root["graphs"] = graphs;
  root["output_dir"] = c.output_dir.string();
  root["seed"] = c.seed;
  root["pvalue_method"] = std::string(metrics::to_string(c.pvalue_method));
  return root.dump(2) + "\n";
}

// The output location does not change results, so it stays out of the hash.
std::string config_hash(const PipelineConfig& config) {
  PipelineConfig analysis = config;
  analysis.output_dir.clear();
  const std::string text = config_to_json(analysis);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

void validate_config(const PipelineConfig& c) {
  auto need_file = [](const fs::path& p, const std::string& what) {
    if (!fs::is_regular_file(p)) throw Error(ErrorCode::FileNotFound, what + " not found: " + p.string());
  };
  auto need_dir = [](const fs::path& p, const std::string& what) {
    if (!fs::is_directory(p)) throw Error(ErrorCode::FileNotFound, what + " not found: " + p.string());
  };
  if (c.inputs.empty()) invalid("no inputs");
  for (const auto& in : c.inputs) need_file(in.path, "input");
  if (c.detectors.empty()) invalid("no detectors");
  for (const auto& d : c.detectors) {
    if (d.name == "ngram") {
      if (d.profiles && d.seed) invalid("ngram detector takes either 'profiles' or 'seed', not both");
      if (d.profiles) {
        need_dir(*d.profiles, "profile directory");
      } else if (d.seed) {
        need_dir(*d.seed, "seed corpus directory");
      } else {
        const char* env = std::getenv(kProfileDirEnv);
        if (env == nullptr || *env == '\0') {
          invalid(std::string("ngram detector has no profiles; set 'profiles', 'seed' or ") + kProfileDirEnv);
        }
        need_dir(env, std::string("profile directory (") + kProfileDirEnv + ")");
      }
      if (!(d.margin >= 0.0)) invalid("margin must be >= 0");
    } else if (d.name == "script") {
      if (d.profiles || d.seed) invalid("script detector takes no profiles");
    } else {
      invalid("unknown detector '" + d.name + "'");
    }
  }
  for (const auto& g : c.graphs) {
    need_file(g.path, "graph table");
    if (g.code_map) need_file(*g.code_map, "code map");
    if (g.name.empty()) invalid("graph name is empty");
    if (g.transform != typology::KernelTransform::None && g.kind != typology::GraphKind::Embedding) {
      invalid("graph '" + g.name + "': transform applies to embedding graphs only");
    }
  }
  if (c.output_dir.empty()) invalid("output_dir is empty");
}

lid::DetectorChain build_detector_chain(const std::vector<DetectorSpec>& specs) {
  std::vector<std::shared_ptr<const lid::Detector>> detectors;
  for (const auto& d : specs) {
    if (d.name == "script") {
      detectors.push_back(std::make_shared<lid::ScriptDetector>());
      continue;
    }
    if (d.name != "ngram") invalid("unknown detector '" + d.name + "'");
    std::vector<lid::DetectorProfile> profiles;
    if (d.seed) {
      profiles = lid::train_profiles_from_seed_dir(*d.seed);
    } else if (d.profiles) {
      profiles = lid::load_profiles(*d.profiles);
    } else {
      const char* env = std::getenv(kProfileDirEnv);
      if (env == nullptr || *env == '\0') invalid("ngram detector has no profiles");
      profiles = lid::load_profiles(env);
    }
    if (profiles.empty()) throw Error(ErrorCode::NoProfiles, "no profiles found for ngram detector");
    detectors.push_back(std::make_shared<lid::NgramDetector>(profiles, lid::NgramOptions{d.margin, d.abstain_on_unseen}));
  }
  return lid::DetectorChain(std::move(detectors));
}

}  // namespace langconf::pipeline
