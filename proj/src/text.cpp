#include "tamekit/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> vars) : text_(text), arity_(vars.size()) {
    for (std::size_t i = 0; i < vars.size(); ++i) index_.emplace(vars[i], i);
  }

  Polynomial parse() {
    Polynomial p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    while (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      if (pos_ >= text_.size() || !digit(text_[pos_])) fail("expected a nonnegative integer exponent");
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (digit(c)) {
      Integer num = integer_literal();
      Integer den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !digit(text_[pos_])) fail("expected a denominator");
        den = integer_literal();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      skip_ws();
      if (pos_ < text_.size() && ident_start(text_[pos_])) fail("missing '*' between factors");
      return Polynomial::constant(arity_, q);
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(arity_, it->second);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t arity_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_index(std::string_view text, std::size_t arity, std::size_t line) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), digit) || t.size() > 9) {
    throw ParseError("expected a variable index, got '" + t + "'", line);
  }
  const std::size_t i = std::stoul(t);
  if (i == 0 || i > arity) throw ParseError("variable index " + t + " out of range", line);
  return i - 1;
}

TameGen parse_generator_line(const std::string& kind, std::string_view rest, std::span<const std::string> vars,
                             std::size_t line) {
  const std::size_t n = vars.size();
  auto split_colon = [&](std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ':'", line);
    return std::make_pair(s.substr(0, colon), s.substr(colon + 1));
  };
  auto wrap = [&](auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(std::string("line ") + std::to_string(line) + ": " + e.what(), line);
    }
  };
  if (kind == "elem") {
    auto [idx, poly] = split_colon(rest);
    const std::size_t target = parse_index(idx, n, line);
    Polynomial addend = wrap([&] { return parse_poly(poly, vars); });
    return Elementary{target, std::move(addend)};
  }
  if (kind == "scale") {
    auto [idx, factor] = split_colon(rest);
    const std::size_t target = parse_index(idx, n, line);
    Rational c = wrap([&] { return parse_rational(trim(factor)); });
    return Scale{target, c};
  }
  if (kind == "perm") {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<bool> used(n, false);
    std::string s = trim(rest);
    std::size_t p = 0;
    while (p < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[p]))) {
        ++p;
        continue;
      }
      if (s[p] != '(') throw ParseError("expected '(' in permutation", line);
      const auto close = s.find(')', p);
      if (close == std::string::npos) throw ParseError("unterminated cycle", line);
      std::istringstream cyc(s.substr(p + 1, close - p - 1));
      std::vector<std::size_t> cycle;
      std::string tok;
      while (cyc >> tok) {
        const std::size_t i = parse_index(tok, n, line);
        if (used[i]) throw ParseError("index repeated in permutation", line);
        used[i] = true;
        cycle.push_back(i);
      }
      // (a b c): x_a -> x_b -> x_c -> x_a.
      for (std::size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
      p = close + 1;
    }
    return Permutation{std::move(perm)};
  }
  if (kind == "linear") {
    std::string s;
    for (char c : rest) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
      throw ParseError("expected a matrix [[..],..]", line);
    }
    RationalMatrix m;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t p = 0;
    while (p < body.size()) {
      if (body[p] == ',') {
        ++p;
        continue;
      }
      if (body[p] != '[') throw ParseError("expected '[' in matrix", line);
      const auto close = body.find(']', p);
      if (close == std::string::npos) throw ParseError("unterminated matrix row", line);
      std::vector<Rational> row;
      std::string cells = body.substr(p + 1, close - p - 1);
      std::size_t q = 0;
      while (q <= cells.size()) {
        auto comma = cells.find(',', q);
        if (comma == std::string::npos) comma = cells.size();
        row.push_back(parse_rational(cells.substr(q, comma - q)));
        q = comma + 1;
      }
      m.push_back(std::move(row));
      p = close + 1;
    }
    return Linear{std::move(m)};
  }
  throw ParseError("unknown generator kind '" + kind + "'", line);
}

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> vars) {
  return PolyParser(text, vars).parse();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string t = trim(text);
  std::size_t p = 0;
  bool neg = false;
  if (p < t.size() && (t[p] == '-' || t[p] == '+')) {
    neg = t[p] == '-';
    ++p;
  }
  auto digits = [&](std::size_t& i) {
    const std::size_t s = i;
    while (i < t.size() && digit(t[i])) ++i;
    if (i == s) throw ParseError("expected a rational number, got '" + t + "'", i);
    return Integer(t.substr(s, i - s));
  };
  Integer num = digits(p);
  Integer den = 1;
  if (p < t.size() && t[p] == '/') {
    ++p;
    den = digits(p);
    if (den == 0) throw ParseError("zero denominator", p);
  }
  if (p != t.size()) throw ParseError("trailing characters in number '" + t + "'", p);
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string format_exponents(const Exponents& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string format_poly(const Polynomial& p, std::span<const std::string> vars) {
  if (vars.size() != p.arity()) throw ArityError("format_poly: variable list does not match arity");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const auto k = t.exponents[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (k > 1) mono += '^' + std::to_string(k);
    }
    if (mono.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_rational(mag) + '*' + mono;
    }
  }
  return out;
}

VarNames identifiers_in(std::string_view text) {
  VarNames out;
  std::size_t p = 0;
  while (p < text.size()) {
    if (ident_start(text[p]) && (p == 0 || !ident_char(text[p - 1]))) {
      const std::size_t s = p;
      while (p < text.size() && ident_char(text[p])) ++p;
      std::string name(text.substr(s, p - s));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    } else {
      ++p;
    }
  }
  return out;
}

VarNames parse_var_list(std::string_view text) {
  VarNames out;
  std::size_t p = 0;
  while (p <= text.size()) {
    auto comma = text.find(',', p);
    if (comma == std::string_view::npos) comma = text.size();
    std::string name = trim(text.substr(p, comma - p));
    if (name.empty() || !ident_start(name[0]) || !std::all_of(name.begin(), name.end(), ident_char)) {
      throw ParseError("bad variable name '" + name + "'", p);
    }
    if (std::find(out.begin(), out.end(), name) != out.end()) {
      throw ParseError("duplicate variable name '" + name + "'", p);
    }
    out.push_back(std::move(name));
    p = comma + 1;
  }
  return out;
}

WordFile parse_word(std::string_view text, std::span<const std::string> default_vars) {
  WordFile wf;
  wf.vars.assign(default_vars.begin(), default_vars.end());
  std::vector<TameGen> gens;
  bool header_allowed = true;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::size_t sp = 0;
    while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp])) && line[sp] != '(' &&
           line[sp] != '[') {
      ++sp;
    }
    const std::string kind = line.substr(0, sp);
    const std::string_view rest = std::string_view(line).substr(sp);
    if (kind == "vars") {
      if (!header_allowed) throw ParseError("'vars' must precede every generator", line_no);
      wf.vars = parse_var_list(rest);
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (wf.vars.empty()) throw ParseError("no variables declared for the word", line_no);
    gens.push_back(parse_generator_line(kind, rest, wf.vars, line_no));
    try {
      validate_generator(gens.back(), wf.vars.size());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("line ") + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  wf.word = TameWord(wf.vars.size(), std::move(gens));
  return wf;
}

std::string format_generator(const TameGen& g, std::span<const std::string> vars) {
  std::ostringstream os;
  if (const auto* e = std::get_if<Elementary>(&g)) {
    os << "elem " << e->target + 1 << " : " << format_poly(e->addend, vars);
  } else if (const auto* l = std::get_if<Linear>(&g)) {
    os << "linear [";
    for (std::size_t i = 0; i < l->matrix.size(); ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < l->matrix[i].size(); ++j) os << (j ? "," : "") << format_rational(l->matrix[i][j]);
      os << ']';
    }
    os << ']';
  } else if (const auto* p = std::get_if<Permutation>(&g)) {
    os << "perm ";
    std::vector<bool> seen(p->perm.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p->perm.size(); ++i) {
      if (seen[i] || p->perm[i] == i) continue;
      any = true;
      os << '(';
      std::size_t k = i;
      bool first = true;
      while (!seen[k]) {
        seen[k] = true;
        os << (first ? "" : " ") << k + 1;
        first = false;
        k = p->perm[k];
      }
      os << ')';
    }
    if (!any) os << "()";
  } else {
    const auto& s = std::get<Scale>(g);
    os << "scale " << s.target + 1 << " : " << format_rational(s.factor);
  }
  return os.str();
}

std::string format_word(const TameWord& w, std::span<const std::string> vars) {
  std::string out = "vars ";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
  out += '\n';
  for (const auto& g : w.gens()) out += format_generator(g, vars) + '\n';
  return out;
}

std::string format_map(const PolyMap& f, std::span<const std::string> target_vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    if (i) out += ", ";
    out += format_poly(f.images()[i], target_vars);
  }
  return out + ")";
}

}  // namespace tamekit
