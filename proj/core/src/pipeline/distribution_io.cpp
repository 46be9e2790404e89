#include "langconf/pipeline/distribution_io.hpp"

#include <nlohmann/json.hpp>

#include "langconf/error.hpp"
#include "langconf/file_io.hpp"

namespace langconf::pipeline {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json distribution_json(const LanguageDistribution& d) {
  ordered_json mass = ordered_json::object();
  for (const auto& [lang, m] : d.mass()) mass[lang.str()] = m;
  return {{"unit_count", d.unit_count()}, {"unidentified_mass", d.unidentified_mass()}, {"mass", mass}};
}

LanguageDistribution distribution_from(const json& obj, Granularity g) {
  LanguageDistribution::MassMap mass;
  for (const auto& [code, m] : obj.at("mass").items()) mass.emplace(LanguageTag::parse(code), m.get<double>());
  return LanguageDistribution(g, std::move(mass), obj.at("unidentified_mass").get<double>(),
                              obj.at("unit_count").get<std::size_t>());
}

}  // namespace

std::string to_jsonl(const ScoredRecord& s) {
  const auto& r = s.record;
  ordered_json o = ordered_json::object();
  o["id"] = r.id;
  o["model"] = r.model;
  o["dataset"] = r.dataset;
  o["setting"] = std::string(to_string(r.setting));
  o["task"] = std::string(to_string(r.task));
  o["target_lang"] = r.target_lang.str();
  ordered_json ctx = ordered_json::array();
  for (const auto& l : r.context_langs) ctx.push_back(l.str());
  o["context_langs"] = ctx;
  o["eval_step"] = r.eval_step ? ordered_json(*r.eval_step) : ordered_json(nullptr);
  o["line"] = distribution_json(s.line);
  o["word"] = distribution_json(s.word);
  return o.dump();
}

std::string write_scored_records(const std::vector<ScoredRecord>& records) {
  std::string out;
  for (const auto& s : records) {
    out += to_jsonl(s);
    out += '\n';
  }
  return out;
}

std::vector<ScoredRecord> read_scored_records(std::string_view jsonl) {
  std::vector<ScoredRecord> out;
  std::size_t start = 0, line_no = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    std::string_view line = jsonl.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      json o = json::parse(line);
      GenerationRecord r;
      r.id = o.at("id").get<std::string>();
      r.model = o.at("model").get<std::string>();
      r.dataset = o.at("dataset").get<std::string>();
      r.setting = parse_setting(o.at("setting").get<std::string>());
      r.task = parse_task(o.at("task").get<std::string>());
      r.target_lang = LanguageTag::parse(o.at("target_lang").get<std::string>());
      for (const auto& c : o.at("context_langs")) r.context_langs.insert(LanguageTag::parse(c.get<std::string>()));
      if (o.contains("eval_step") && !o["eval_step"].is_null()) r.eval_step = o["eval_step"].get<std::string>();
      auto line_d = distribution_from(o.at("line"), Granularity::Line);
      auto word_d = distribution_from(o.at("word"), Granularity::Word);
      out.push_back(ScoredRecord{std::move(r), std::move(line_d), std::move(word_d)});
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, "distributions line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "distributions line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<ScoredRecord> load_scored_records(const std::filesystem::path& path) {
  return read_scored_records(read_text_file(path));
}

}  // namespace langconf::pipeline
