#include "tamekit/isokit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

std::size_t index_of(const VarNames& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? names.size() : static_cast<std::size_t>(it - names.begin());
}

std::vector<std::size_t> identity_slots(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool fixes_generators(const PolyMap& round_trip, const Ideal& ideal) {
  for (std::size_t i = 0; i < round_trip.source_arity(); ++i) {
    if (!ideal.equivalent(round_trip.image(i), Polynomial::variable(ideal.arity(), i))) return false;
  }
  return true;
}

bool maps_relations(const PolyMap& f, const Presentation& a, const Ideal& target) {
  return std::all_of(a.relations.begin(), a.relations.end(),
                     [&](const Polynomial& r) { return target.contains(substitute(r, f)); });
}

bool verify_with(const IsoWitness& w, const Ideal& src, const Ideal& tgt) {
  const std::size_t ns = w.source.arity();
  const std::size_t nt = w.target.arity();
  if (w.forward.source_arity() != ns || w.forward.target_arity() != nt || w.backward.source_arity() != nt ||
      w.backward.target_arity() != ns) {
    return false;
  }
  return maps_relations(w.forward, w.source, tgt) && maps_relations(w.backward, w.target, src) &&
         fixes_generators(compose_maps(w.forward, w.backward), src) &&
         fixes_generators(compose_maps(w.backward, w.forward), tgt);
}

std::string describe(const Polynomial& p, const VarNames& vars) { return "'" + format_poly(p, vars) + "'"; }

}  // namespace

void Presentation::validate() const {
  std::set<std::string> seen(generators.begin(), generators.end());
  if (seen.size() != generators.size()) throw std::invalid_argument("presentation: repeated generator name");
  for (const auto& r : relations) {
    if (r.arity() != generators.size()) throw ArityError("presentation: relation arity differs from generator count");
  }
}

Ideal Presentation::ideal(const GroebnerOptions& options) const {
  return Ideal(arity(), relations, MonomialOrder::grevlex(), options);
}

bool check_hom(const PolyMap& f, const Presentation& a, const Presentation& b, const GroebnerOptions& options) {
  if (f.source_arity() != a.arity() || f.target_arity() != b.arity()) {
    throw ArityError("check_hom: map does not match the presentations");
  }
  return maps_relations(f, a, b.ideal(options));
}

bool verify_iso(const IsoWitness& w, const GroebnerOptions& options) {
  return verify_with(w, w.source.ideal(options), w.target.ideal(options));
}

MoveResult apply_move(const Presentation& a, const Move& m, const GroebnerOptions& options) {
  a.validate();
  const std::size_t n = a.arity();
  if (const auto* rw = std::get_if<RewriteRelations>(&m)) {
    for (const auto& r : rw->relations) {
      if (r.arity() != n) throw ArityError("rewrite: relation arity mismatch");
    }
    if (!ideal_equal(a.relations, rw->relations, options)) {
      const Ideal old_ideal = a.ideal(options);
      const Ideal new_ideal(n, rw->relations, MonomialOrder::grevlex(), options);
      for (const auto& r : rw->relations) {
        if (!old_ideal.contains(r)) {
          throw MoveRejected("rewrite rejected: new relation " + describe(r, a.generators) +
                                 " is not in the current ideal",
                             0);
        }
      }
      for (const auto& r : a.relations) {
        if (!new_ideal.contains(r)) {
          throw MoveRejected("rewrite rejected: current relation " + describe(r, a.generators) +
                                 " is not in the new ideal",
                             0);
        }
      }
      throw MoveRejected("rewrite rejected: ideals differ", 0);
    }
    return MoveResult{Presentation{a.generators, rw->relations}, PolyMap::identity(n), PolyMap::identity(n)};
  }
  if (const auto* adj = std::get_if<Adjoin>(&m)) {
    if (index_of(a.generators, adj->name) != n) throw MoveRejected("adjoin rejected: '" + adj->name + "' exists", 0);
    if (adj->defining.arity() != n) throw ArityError("adjoin: defining polynomial arity mismatch");
    const auto slots = identity_slots(n);
    Presentation next{a.generators, {}};
    next.generators.push_back(adj->name);
    for (const auto& r : a.relations) next.relations.push_back(rename_extend(r, n + 1, slots));
    const Polynomial defining = rename_extend(adj->defining, n + 1, slots);
    next.relations.push_back(Polynomial::variable(n + 1, n) - defining);
    std::vector<Polynomial> inclusion;
    for (std::size_t i = 0; i < n; ++i) inclusion.push_back(Polynomial::variable(n + 1, i));
    std::vector<Polynomial> back;
    for (std::size_t i = 0; i < n; ++i) back.push_back(Polynomial::variable(n, i));
    back.push_back(adj->defining);
    return MoveResult{std::move(next), PolyMap(n + 1, std::move(inclusion)), PolyMap(n, std::move(back))};
  }
  const auto& el = std::get<Eliminate>(m);
  const std::size_t k = index_of(a.generators, el.generator);
  if (k == n) throw MoveRejected("eliminate rejected: no generator '" + el.generator + "'", 0);
  if (el.replacement.arity() != n) throw ArityError("eliminate: replacement arity mismatch");
  if (el.replacement.involves(k)) {
    throw MoveRejected("eliminate rejected: replacement involves '" + el.generator + "'", 0);
  }
  const Polynomial cited = Polynomial::variable(n, k) - el.replacement;
  if (!a.ideal(options).contains(cited)) {
    throw MoveRejected("eliminate rejected: relation " + describe(cited, a.generators) + " is not in the ideal", 0);
  }
  Presentation next;
  std::vector<Polynomial> into(n, Polynomial(n - 1));
  std::vector<Polynomial> inclusion;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    into[i] = Polynomial::variable(n - 1, next.generators.size());
    inclusion.push_back(Polynomial::variable(n, i));
    next.generators.push_back(a.generators[i]);
  }
  std::vector<Polynomial> without = into;
  without[k] = Polynomial(n - 1);
  into[k] = substitute(el.replacement, PolyMap(n - 1, std::move(without)));
  const PolyMap forward(n - 1, std::move(into));
  for (const auto& r : a.relations) {
    Polynomial s = substitute(r, forward);
    if (!s.is_zero() && std::find(next.relations.begin(), next.relations.end(), s) == next.relations.end()) {
      next.relations.push_back(std::move(s));
    }
  }
  return MoveResult{std::move(next), forward, PolyMap(n, std::move(inclusion))};
}

ScriptResult run_script(const Presentation& start, const std::vector<Move>& moves,
                        const std::optional<Presentation>& end, const GroebnerOptions& options) {
  start.validate();
  ScriptResult out;
  Presentation cur = start;
  PolyMap forward = PolyMap::identity(start.arity());
  PolyMap backward = PolyMap::identity(start.arity());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    MoveResult step;
    try {
      step = apply_move(cur, moves[i], options);
    } catch (const MoveRejected& e) {
      throw MoveRejected("move " + std::to_string(i + 1) + ": " + e.what(), i);
    }
    forward = compose_maps(forward, step.forward);
    backward = compose_maps(step.backward, backward);
    cur = step.next;
    out.steps.push_back(std::move(step));
  }
  if (end) {
    end->validate();
    const std::size_t n = cur.arity();
    if (end->arity() != n) throw MoveRejected("end presentation has a different number of generators", moves.size());
    std::vector<Polynomial> to_end;
    std::vector<Polynomial> from_end(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = index_of(end->generators, cur.generators[i]);
      if (j == n) throw MoveRejected("end presentation lacks generator '" + cur.generators[i] + "'", moves.size());
      to_end.push_back(Polynomial::variable(n, j));
      from_end[j] = Polynomial::variable(n, i);
    }
    const PolyMap rename(n, std::move(to_end));
    std::vector<Polynomial> renamed;
    for (const auto& r : cur.relations) renamed.push_back(substitute(r, rename));
    if (!ideal_equal(renamed, end->relations, options)) {
      throw MoveRejected("end presentation: relations do not generate the reached ideal", moves.size());
    }
    forward = compose_maps(forward, rename);
    backward = compose_maps(PolyMap(n, std::move(from_end)), backward);
    cur = *end;
  }
  out.witness = IsoWitness{start, cur, std::move(forward), std::move(backward), false};
  out.witness.verified = verify_iso(out.witness, options);
  return out;
}

std::optional<PolyMap> try_invert_hom(const PolyMap& f, const Presentation& a, const Presentation& b,
                                      const GroebnerOptions& options) {
  const std::size_t na = a.arity();
  const std::size_t nb = b.arity();
  if (f.source_arity() != na || f.target_arity() != nb) throw ArityError("try_invert_hom: arity mismatch");
  const std::size_t total = nb + na;
  std::vector<std::size_t> b_slots(nb);
  std::iota(b_slots.begin(), b_slots.end(), 0);
  std::vector<std::size_t> a_slots(na);
  std::iota(a_slots.begin(), a_slots.end(), nb);

  std::vector<Polynomial> gens;
  for (const auto& r : b.relations) gens.push_back(rename_extend(r, total, b_slots));
  for (std::size_t i = 0; i < na; ++i) {
    gens.push_back(Polynomial::variable(total, nb + i) - rename_extend(f.image(i), total, b_slots));
  }
  for (const auto& r : a.relations) gens.push_back(rename_extend(r, total, a_slots));
  const GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(nb), options);

  std::vector<Polynomial> to_a(total, Polynomial(na));
  for (std::size_t i = 0; i < na; ++i) to_a[nb + i] = Polynomial::variable(na, i);
  const PolyMap drop(na, std::move(to_a));
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < nb; ++j) {
    const Polynomial nf = gb.normal_form(Polynomial::variable(total, j));
    for (std::size_t i = 0; i < nb; ++i) {
      if (nf.involves(i)) return std::nullopt;
    }
    images.push_back(substitute(nf, drop));
  }
  PolyMap g(na, std::move(images));
  if (!verify_iso(IsoWitness{a, b, f, g, false}, options)) return std::nullopt;
  return g;
}

bool is_gradient_full(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("is_gradient_full: zero polynomial");
  std::vector<bool> used(p.arity(), false);
  for (const auto& d : gradient(p)) {
    if (d.size() != 1) return false;
    const Exponents& e = d.terms().front().exponents;
    if (e.total() != 1) return false;
    const auto var = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1u) - e.begin());
    if (used[var]) return false;
    used[var] = true;
  }
  return true;
}

RussellReport builtin_russell(const GroebnerOptions& options) {
  const VarNames av{"x1", "y1", "z1", "u"};
  const VarNames bv{"x2", "y2", "z2", "v"};
  auto in_a = [&](std::string_view s) { return parse_poly(s, av); };
  auto in_b = [&](std::string_view s) { return parse_poly(s, bv); };
  const Presentation a{av, {in_a("x1*y1 - z1^2 + 1")}};
  const Presentation b{bv, {in_b("x2^2*y2 - z2^2 + 1")}};
  const PolyMap phi(4, {in_b("x2"), in_b("x2*v^2 + 2*z2*v + x2*y2"), in_b("x2*v + z2"),
                        in_b("x2*v^3 + 3*z2*v^2 + 3*x2*y2*v + y2*z2")});

  RussellReport rep;
  rep.witness = IsoWitness{a, b, phi, PolyMap(), false};
  const Ideal ib = b.ideal(options);
  rep.homomorphism = maps_relations(phi, a, ib);

  auto image = [&](const Polynomial& p) { return substitute(p, phi); };
  const Polynomial x2 = in_b("x2");
  // Preimages over the source generators, built up the way the image is
  // shown to contain each target generator.
  const Polynomial v_pre = in_a("1/2*y1*z1 - 1/2*x1*u");
  const Polynomial z_pre = in_a("z1") - in_a("x1") * v_pre;
  const Polynomial xy_pre = in_a("y1") - in_a("x1") * v_pre.pow(2) - Rational(2) * z_pre * v_pre;
  const Polynomial yz_pre = in_a("u") - in_a("x1") * v_pre.pow(3) - Rational(3) * z_pre * v_pre.pow(2) -
                            Rational(3) * xy_pre * v_pre;
  const Polynomial y_pre = yz_pre * z_pre - xy_pre.pow(2);

  rep.surjectivity.push_back({"phi(x1) = x2", image(in_a("x1")) == x2});
  rep.surjectivity.push_back(
      {"phi(y1)*phi(z1) - x2*phi(u) = 2*v mod q",
       ib.contains(image(in_a("y1")) * image(in_a("z1")) - x2 * image(in_a("u")) - in_b("2*v"))});
  rep.surjectivity.push_back({"x2*y2 is in the image mod q", ib.equivalent(image(xy_pre), in_b("x2*y2"))});
  rep.surjectivity.push_back({"y2*z2^2 - x2^2*y2^2 = y2 mod q, and y2 is in the image",
                              ib.contains(in_b("y2*z2^2 - x2^2*y2^2 - y2")) &&
                                  ib.equivalent(image(y_pre), in_b("y2"))});

  if (rep.homomorphism) {
    if (auto g = try_invert_hom(phi, a, b, options)) {
      rep.inverse_found = true;
      rep.witness.backward = std::move(*g);
      rep.witness.verified = verify_iso(rep.witness, options);
    }
  }
  return rep;
}

namespace {

std::string numbered(const std::string& base, std::size_t count, std::size_t i) {
  return count == 1 ? base : base + std::to_string(i + 1);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string fresh_name(std::string base, const VarNames& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

}  // namespace

std::string theorem16_script_text(std::size_t m, std::size_t r) {
  if (m == 0) throw std::invalid_argument("theorem16: m must be at least 1");
  std::vector<std::string> zs;
  std::vector<std::string> ts;
  std::vector<std::string> squares;
  for (std::size_t i = 0; i < m; ++i) {
    zs.push_back(numbered("z", m, i));
    squares.push_back(zs.back() + "^2");
  }
  for (std::size_t i = 0; i < r; ++i) ts.push_back(numbered("t", r, i));
  VarNames gens{"x", "y"};
  gens.insert(gens.end(), zs.begin(), zs.end());
  gens.insert(gens.end(), ts.begin(), ts.end());
  const std::string s = join(squares, " + ");
  const std::string t = ts.empty() ? "" : join(ts, "*") + "*";
  const std::string header = "gens " + join(gens, ",");

  auto expanded = [&](const std::string& text) { return format_poly(parse_poly(text, gens), gens); };
  const std::string rel1 = "x*" + t + "(1 + x*y + " + s + ") - 1";
  const std::string rel2 = "x*y*" + t + "(1 + x*y + " + s + ") - y";

  std::string out;
  out += "start U : " + header + " ; rel " + rel1 + "\n";
  out += "rewrite rel " + rel1 + ", " + rel2 + "\n";
  out += "rewrite rel " + expanded(rel1) + ", " + expanded(rel2) + "\n";
  out += "adjoin u := x*y\n";
  out += "rewrite rel x*" + t + "(1 + u + " + s + ") - 1, y - u*" + t + "(1 + u + " + s + "), u - x*y\n";
  out += "eliminate y := u*" + t + "(1 + u + " + s + ")\n";
  out += "rewrite rel x*" + t + "(1 + u + " + s + ") - 1\n";
  out += "adjoin y := 1 + u + " + s + "\n";
  out += "eliminate u := y - 1 - " + join(squares, " - ") + "\n";
  out += "end W : " + header + " ; rel x*y" + (ts.empty() ? "" : "*" + join(ts, "*")) + " - 1\n";
  return out;
}

ScriptResult builtin_theorem16(std::size_t m, std::size_t r, const GroebnerOptions& options) {
  const Script script = parse_script(theorem16_script_text(m, r));
  return run_script(script.start, script.moves, script.end, options);
}

namespace {

struct Prop32Names {
  std::string start;
  std::vector<std::string> rounds;  // name adjoined in each round
};

Prop32Names prop32_names(const VarNames& vars, unsigned k) {
  Prop32Names n;
  n.start = fresh_name("y", vars);
  VarNames taken = vars;
  taken.push_back(n.start);
  for (unsigned j = 1; j < k; ++j) {
    std::string name = fresh_name(j + 1 == k ? "u" : "u" + std::to_string(j), taken);
    taken.push_back(name);
    n.rounds.push_back(std::move(name));
  }
  return n;
}

std::string power(const std::string& base, unsigned e) {
  if (e == 0) return "1";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

std::string prop32_script_text(const Polynomial& p, const VarNames& vars, unsigned k) {
  if (k == 0) throw std::invalid_argument("prop32: k must be at least 1");
  if (p.is_zero()) throw std::invalid_argument("prop32: p must be nonzero");
  const Prop32Names names = prop32_names(vars, k);
  const std::string pp = "(" + format_poly(p, vars) + ")";
  auto gens = [&](const std::string& lead) { return "gens " + lead + (vars.empty() ? "" : "," + join(vars, ",")); };

  std::string out = "start A : " + gens(names.start) + " ; rel " + names.start + "*" + pp + " - 1\n";
  std::string cur = names.start;
  for (unsigned j = 1; j < k; ++j) {
    const std::string& w = names.rounds[j - 1];
    out += "rewrite rel " + cur + "*" + power(pp, j) + " - 1, " + cur + "^2*" + power(pp, j) + " - " + cur + "\n";
    out += "adjoin " + w + " := " + cur + "^2" + (j > 1 ? "*" + power(pp, j - 1) : "") + "\n";
    out += "rewrite rel " + w + "*" + power(pp, j + 1) + " - 1, " + w + "*" + pp + " - " + cur + ", " + w + " - " +
           w + "^2*" + power(pp, j + 1) + "\n";
    out += "eliminate " + cur + " := " + w + "*" + pp + "\n";
    out += "rewrite rel " + w + "*" + power(pp, j + 1) + " - 1\n";
    cur = w;
  }
  out += "end B : " + gens(cur) + " ; rel " + cur + "*" + power(pp, k) + " - 1\n";
  return out;
}

Prop32Report builtin_prop32(const Polynomial& p, const VarNames& vars, unsigned k, const GroebnerOptions& options) {
  if (p.arity() != vars.size()) throw ArityError("prop32: variable names do not match p");
  const Script script = parse_script(prop32_script_text(p, vars, k));
  Prop32Report rep;
  rep.script = run_script(script.start, script.moves, script.end, options);

  const Presentation& a = script.start;
  const Presentation& b = *script.end;
  const std::size_t n = a.arity();
  const std::vector<std::size_t> tail = [&] {
    std::vector<std::size_t> s(vars.size());
    std::iota(s.begin(), s.end(), 1);
    return s;
  }();
  // Both presentations list the distinguished generator first.
  const Polynomial p_in = rename_extend(p, n, tail);
  std::vector<Polynomial> fwd{Polynomial::variable(n, 0) * p_in.pow(k - 1)};
  std::vector<Polynomial> bwd{Polynomial::variable(n, 0).pow(k)};
  for (std::size_t i = 1; i < n; ++i) {
    fwd.push_back(Polynomial::variable(n, i));
    bwd.push_back(Polynomial::variable(n, i));
  }
  rep.closed_form = IsoWitness{a, b, PolyMap(n, std::move(fwd)), PolyMap(n, std::move(bwd)), false};
  rep.closed_form.verified = verify_iso(rep.closed_form, options);

  const Ideal ia = a.ideal(options);
  const Ideal ib = b.ideal(options);
  bool agree = true;
  for (std::size_t i = 0; i < n && agree; ++i) {
    agree = ib.equivalent(rep.closed_form.forward.image(i), rep.script.witness.forward.image(i)) &&
            ia.equivalent(rep.closed_form.backward.image(i), rep.script.witness.backward.image(i));
  }
  rep.maps_agree = agree;
  return rep;
}

}  // namespace tamekit
