#include <algorithm>
#include <cctype>
#include <sstream>

#include "tamekit/errors.hpp"
#include "tamekit/isokit.hpp"

namespace tamekit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool starts_with_word(const std::string& s, std::string_view word) {
  return s.size() >= word.size() && s.compare(0, word.size(), word) == 0 &&
         (s.size() == word.size() || std::isspace(static_cast<unsigned char>(s[word.size()])));
}

// Splits on commas outside parentheses.
std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

class ScriptParser {
 public:
  Script parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const std::string line = trim(raw);
      if (line.empty()) continue;
      statement(line);
    }
    if (!started_) fail("script has no 'start' line");
    return std::move(script_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("script line " + std::to_string(line_) + ": " + what, line_);
  }

  Polynomial poly(std::string_view text, const VarNames& vars) const {
    try {
      return parse_poly(text, vars);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  std::vector<Polynomial> relation_list(std::string_view text, const VarNames& vars) const {
    std::vector<Polynomial> out;
    for (const auto& part : split_top_level(text)) {
      if (part.empty()) fail("empty relation");
      out.push_back(poly(part, vars));
    }
    return out;
  }

  // "NAME : gens a,b ; rel p, q"
  Presentation presentation(const std::string& body) const {
    const auto colon = body.find(':');
    if (colon == std::string::npos) fail("expected 'NAME : gens ...'");
    const std::string rest = trim(std::string_view(body).substr(colon + 1));
    const auto semi = rest.find(';');
    const std::string gens_part = trim(std::string_view(rest).substr(0, semi));
    if (!starts_with_word(gens_part, "gens")) fail("expected 'gens'");
    Presentation p;
    try {
      p.generators = parse_var_list(gens_part.substr(4));
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (semi != std::string::npos) {
      const std::string rel_part = trim(std::string_view(rest).substr(semi + 1));
      if (!starts_with_word(rel_part, "rel")) fail("expected 'rel'");
      p.relations = relation_list(std::string_view(rel_part).substr(3), p.generators);
    }
    return p;
  }

  // "u := poly"
  std::pair<std::string, std::string> definition(const std::string& body) const {
    const auto pos = body.find(":=");
    if (pos == std::string::npos) fail("expected ':='");
    std::string name = trim(std::string_view(body).substr(0, pos));
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
        !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      fail("bad generator name '" + name + "'");
    }
    return {name, trim(std::string_view(body).substr(pos + 2))};
  }

  void statement(const std::string& line) {
    const auto sp = std::find_if(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    const std::string keyword(line.begin(), sp);
    const std::string body = trim(std::string_view(line).substr(keyword.size()));
    if (keyword == "start") {
      if (started_) fail("second 'start'");
      script_.start = presentation(body);
      gens_ = script_.start.generators;
      started_ = true;
      return;
    }
    if (!started_) fail("'" + keyword + "' before 'start'");
    if (script_.end) fail("statement after 'end'");
    if (keyword == "rewrite") {
      if (!starts_with_word(body, "rel")) fail("expected 'rewrite rel ...'");
      script_.moves.push_back(RewriteRelations{relation_list(std::string_view(body).substr(3), gens_)});
    } else if (keyword == "adjoin") {
      auto [name, text] = definition(body);
      if (std::find(gens_.begin(), gens_.end(), name) != gens_.end()) fail("generator '" + name + "' already exists");
      script_.moves.push_back(Adjoin{name, poly(text, gens_)});
      gens_.push_back(name);
    } else if (keyword == "eliminate") {
      auto [name, text] = definition(body);
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end()) fail("no generator '" + name + "' to eliminate");
      script_.moves.push_back(Eliminate{name, poly(text, gens_)});
      gens_.erase(it);
    } else if (keyword == "end") {
      script_.end = presentation(body);
    } else {
      fail("unknown statement '" + keyword + "'");
    }
  }

  Script script_;
  VarNames gens_;
  bool started_ = false;
  std::size_t line_ = 0;
};

}  // namespace

Script parse_script(std::string_view text) { return ScriptParser().parse(text); }

}  // namespace tamekit
