#include "langconf/pipeline/ingest.hpp"

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/language_codes.hpp"

namespace langconf::pipeline {
namespace {

using nlohmann::json;

struct BadLine : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const json* find_any(const json& obj, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = obj.find(k);
    if (it != obj.end() && !it->is_null()) return &*it;
  }
  return nullptr;
}

std::string scalar_string(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  throw BadLine(std::string(what) + " must be a string");
}

std::string required_string(const json& obj, std::initializer_list<const char*> keys, const char* what) {
  const json* v = find_any(obj, keys);
  if (v == nullptr) throw BadLine(std::string("missing field ") + what);
  return scalar_string(*v, what);
}

std::optional<std::string> optional_string(const json& obj, std::initializer_list<const char*> keys, const char* what) {
  const json* v = find_any(obj, keys);
  if (v == nullptr) return std::nullopt;
  return scalar_string(*v, what);
}

LanguageTag language(const std::string& raw) {
  auto tag = normalize_language_code(raw);
  if (!tag) throw BadLine("unrecognized language code '" + raw + "'");
  return *tag;
}

LanguageSet language_list(const json& v, const char* what) {
  LanguageSet out;
  if (v.is_array()) {
    for (const auto& item : v) out.insert(language(scalar_string(item, what)));
  } else if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      std::string part = s.substr(start, end - start);
      if (!part.empty()) out.insert(language(part));
      start = end + 1;
    }
  } else {
    throw BadLine(std::string(what) + " must be a list of language codes");
  }
  return out;
}

Setting setting_from(const std::string& raw) {
  if (raw == "mono" || raw == "monolingual") return Setting::Monolingual;
  if (raw == "cross" || raw == "crosslingual" || raw == "cross-lingual") return Setting::Crosslingual;
  throw BadLine("unknown setting '" + raw + "'");
}

GenerationRecord parse_generic(const json& obj) {
  GenerationRecord r;
  r.id = required_string(obj, {"id"}, "id");
  r.model = required_string(obj, {"model"}, "model");
  r.dataset = required_string(obj, {"dataset"}, "dataset");
  r.setting = setting_from(required_string(obj, {"setting"}, "setting"));
  try {
    r.task = parse_task(required_string(obj, {"task"}, "task"));
  } catch (const Error& e) {
    throw BadLine(e.what());
  }
  r.target_lang = language(required_string(obj, {"target_lang"}, "target_lang"));
  const json* ctx = find_any(obj, {"context_langs"});
  if (ctx == nullptr) throw BadLine("missing field context_langs");
  r.context_langs = language_list(*ctx, "context_langs");
  r.response_text = required_string(obj, {"response_text"}, "response_text");
  r.eval_step = optional_string(obj, {"eval_step"}, "eval_step");
  return r;
}

// Prompting benchmark dumps: one completion per prompt, with the target
// language as an ISO 639-1 code. Crosslingual prompts are written in English
// unless the line says otherwise.
GenerationRecord parse_lcb(const json& obj) {
  GenerationRecord r;
  r.id = required_string(obj, {"id", "prompt_id"}, "id");
  r.model = required_string(obj, {"model"}, "model");
  r.dataset = optional_string(obj, {"source", "dataset"}, "source").value_or("lcb");
  r.task = Task::Prompting;
  r.target_lang = language(required_string(obj, {"language", "target_lang", "lang"}, "language"));
  r.setting = setting_from(required_string(obj, {"setting", "task"}, "setting"));
  auto instruction = optional_string(obj, {"instruction_lang", "prompt_lang"}, "instruction_lang");
  if (instruction) {
    r.context_langs.insert(language(*instruction));
  } else {
    r.context_langs.insert(r.setting == Setting::Monolingual ? r.target_lang : LanguageTag("eng"));
  }
  r.response_text = required_string(obj, {"completion", "response", "output", "generation"}, "completion");
  return r;
}

// Inversion evaluation dumps: the setting follows from whether the evaluation
// language was among the training languages.
GenerationRecord parse_mtei(const json& obj) {
  GenerationRecord r;
  r.id = required_string(obj, {"id"}, "id");
  r.model = required_string(obj, {"model"}, "model");
  r.dataset = optional_string(obj, {"dataset", "source"}, "dataset").value_or("mtei");
  r.task = Task::Inversion;
  const json* train = find_any(obj, {"train_langs"});
  if (train == nullptr) throw BadLine("missing field train_langs");
  r.context_langs = language_list(*train, "train_langs");
  if (r.context_langs.empty()) throw BadLine("train_langs is empty");
  r.target_lang = language(required_string(obj, {"eval_lang"}, "eval_lang"));
  r.setting = r.context_langs.contains(r.target_lang) ? Setting::Monolingual : Setting::Crosslingual;
  r.eval_step = optional_string(obj, {"eval_step"}, "eval_step");
  r.response_text = required_string(obj, {"prediction", "pred", "response_text", "output"}, "prediction");
  return r;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::string_view to_string(InputFormat f) noexcept {
  switch (f) {
    case InputFormat::LcbJsonl: return "lcb-jsonl";
    case InputFormat::MteiJsonl: return "mtei-jsonl";
    case InputFormat::GenericJsonl: return "generic-jsonl";
  }
  return "";
}

InputFormat parse_input_format(std::string_view text) {
  if (text == "lcb-jsonl") return InputFormat::LcbJsonl;
  if (text == "mtei-jsonl") return InputFormat::MteiJsonl;
  if (text == "generic-jsonl" || text == "jsonl") return InputFormat::GenericJsonl;
  throw Error(ErrorCode::InvalidArgument, "unknown input format: " + std::string(text));
}

IngestResult ingest_text(std::string_view contents, InputFormat format, const std::string& source) {
  IngestResult out;
  std::set<std::string> seen_ids;
  std::size_t nonblank = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (blank(line)) continue;
    ++nonblank;
    try {
      json obj = json::parse(line);
      if (!obj.is_object()) throw BadLine("not a JSON object");
      GenerationRecord r;
      switch (format) {
        case InputFormat::LcbJsonl: r = parse_lcb(obj); break;
        case InputFormat::MteiJsonl: r = parse_mtei(obj); break;
        case InputFormat::GenericJsonl: r = parse_generic(obj); break;
      }
      try {
        validate_record(r);
      } catch (const Error& e) {
        throw BadLine(e.what());
      }
      if (!seen_ids.insert(r.id).second) throw BadLine("duplicate id '" + r.id + "'");
      if (blank(r.response_text)) out.warnings.push_back(source + ":" + std::to_string(line_no) + ": empty response for '" + r.id + "'");
      out.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      out.malformed.push_back({line_no, std::string("invalid JSON: ") + e.what()});
    } catch (const BadLine& e) {
      out.malformed.push_back({line_no, e.what()});
    } catch (const Error& e) {
      out.malformed.push_back({line_no, e.what()});
    }
  }
  if (nonblank > 0 && static_cast<double>(out.malformed.size()) > kMaxMalformedFraction * static_cast<double>(nonblank)) {
    const auto& first = out.malformed.front();
    throw Error(ErrorCode::TooManyMalformed,
                source + ": " + std::to_string(out.malformed.size()) + " of " + std::to_string(nonblank) +
                    " lines malformed (first at line " + std::to_string(first.line_no) + ": " + first.reason + ")");
  }
  return out;
}

IngestResult ingest(const std::filesystem::path& path, InputFormat format) {
  return ingest_text(read_text_file(path), format, path.string());
}

std::string to_generic_jsonl(const GenerationRecord& r) {
  json obj = json::object();
  obj["id"] = r.id;
  obj["model"] = r.model;
  obj["dataset"] = r.dataset;
  obj["setting"] = std::string(to_string(r.setting));
  obj["task"] = std::string(to_string(r.task));
  obj["target_lang"] = r.target_lang.str();
  json ctx = json::array();
  for (const auto& l : r.context_langs) ctx.push_back(l.str());
  obj["context_langs"] = ctx;
  obj["response_text"] = r.response_text;
  if (r.eval_step) obj["eval_step"] = *r.eval_step;
  return obj.dump();
}

}  // namespace langconf::pipeline
