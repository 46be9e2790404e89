#include "langconf/lid/tokenize.hpp"

#include <algorithm>
#include <set>

#include "langconf/language_codes.hpp"
#include "langconf/lid/unicode.hpp"

namespace langconf::lid {
namespace {

bool is_word_char(char32_t c) { return is_letter(c) || is_mark(c); }

bool is_neutral_script(std::string_view s) { return s == "Zyyy" || s == "Zinh" || s == "Zzzz"; }

bool has_letter(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return is_letter(c); });
}

std::vector<std::u32string> whitespace_chunks(std::u32string_view line) {
  std::vector<std::u32string> chunks;
  std::u32string current;
  for (char32_t c : line) {
    if (is_whitespace(c)) {
      if (!current.empty()) chunks.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));
  return chunks;
}

// Trims everything that is neither a letter, a mark nor a digit from both ends.
std::u32string strip_edges(std::u32string_view chunk) {
  auto keep = [](char32_t c) { return is_word_char(c) || (c >= U'0' && c <= U'9'); };
  std::size_t b = 0, e = chunk.size();
  while (b < e && !keep(chunk[b])) ++b;
  while (e > b && !keep(chunk[e - 1])) --e;
  return std::u32string(chunk.substr(b, e - b));
}

// Maximal runs of letters sharing a script. Common and inherited letters/marks
// continue the current run; anything else ends it.
void append_script_runs(std::u32string_view chunk, std::vector<std::string>& out) {
  std::u32string run;
  std::string_view run_script;
  auto flush = [&] {
    if (has_letter(run)) out.push_back(encode_utf8(run));
    run.clear();
    run_script = {};
  };
  for (char32_t c : chunk) {
    if (!is_word_char(c)) {
      flush();
      continue;
    }
    const std::string_view script = script_code(c);
    if (is_neutral_script(script)) {
      run.push_back(c);
      continue;
    }
    if (!run_script.empty() && script != run_script) flush();
    if (run_script.empty()) run_script = script;
    run.push_back(c);
  }
  flush();
}

struct ScriptStats {
  std::size_t letters = 0;
  std::size_t cjk = 0;
  std::set<std::string_view> scripts;
};

ScriptStats script_stats(std::u32string_view line) {
  ScriptStats stats;
  for (char32_t c : line) {
    if (!is_letter(c)) continue;
    const std::string_view script = script_code(c);
    if (is_neutral_script(script)) continue;
    ++stats.letters;
    if (is_cjk_script(script)) ++stats.cjk;
    stats.scripts.insert(script);
  }
  return stats;
}

}  // namespace

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line;
    line.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) {
      if (text[i] != '\r') line.push_back(text[i]);
    }
    const auto decoded = decode_utf8(line);
    if (!std::all_of(decoded.begin(), decoded.end(), [](char32_t c) { return is_whitespace(c); })) {
      lines.push_back(std::move(line));
    }
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> tokenize(std::string_view line, const std::optional<LanguageTag>& lang_hint) {
  const std::u32string decoded = decode_utf8(line);
  const ScriptStats stats = script_stats(decoded);
  // Hiragana, Katakana and Han all count as CJK, so Japanese is never "mixed".
  std::set<std::string_view> non_cjk;
  bool any_cjk = false;
  for (auto s : stats.scripts) {
    if (is_cjk_script(s)) any_cjk = true;
    else non_cjk.insert(s);
  }
  const bool mixed = non_cjk.size() + (any_cjk ? 1 : 0) > 1;
  const bool cjk_mode = (lang_hint && is_cjk_language(*lang_hint)) || 2 * stats.cjk > stats.letters || mixed;

  std::vector<std::string> tokens;
  for (const auto& chunk : whitespace_chunks(decoded)) {
    if (cjk_mode) {
      append_script_runs(chunk, tokens);
    } else {
      std::u32string token = strip_edges(chunk);
      if (has_letter(token)) tokens.push_back(encode_utf8(token));
    }
  }
  return tokens;
}

}  // namespace langconf::lid
