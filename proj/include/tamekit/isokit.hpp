#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tamekit/groebner.hpp"
#include "tamekit/polymap.hpp"
#include "tamekit/text.hpp"

namespace tamekit {

/// Quotient algebra K[generators] / <relations>.
struct Presentation {
  VarNames generators;
  std::vector<Polynomial> relations;

  std::size_t arity() const noexcept { return generators.size(); }
  /// Throws when names repeat or a relation has the wrong arity.
  void validate() const;
  Ideal ideal(const GroebnerOptions& options = {}) const;
};

/// Replace the relations by another generating set of the same ideal.
struct RewriteRelations {
  std::vector<Polynomial> relations;
};
/// New generator `name` with relation name - defining (defining is over the
/// current generators).
struct Adjoin {
  std::string name;
  Polynomial defining;
};
/// Remove `generator`, given that generator - replacement lies in the ideal
/// and the replacement does not involve it.
struct Eliminate {
  std::string generator;
  Polynomial replacement;
};
using Move = std::variant<RewriteRelations, Adjoin, Eliminate>;

/// A move whose gate failed.
class MoveRejected : public std::runtime_error {
 public:
  MoveRejected(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
  /// 0-based position of the move in its script.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// forward: source -> target, backward: target -> source, each given by the
/// images of the domain's generators over the codomain's generators.
struct IsoWitness {
  Presentation source;
  Presentation target;
  PolyMap forward;
  PolyMap backward;
  bool verified = false;
};

/// f maps every relation of a into the ideal of b.
bool check_hom(const PolyMap& f, const Presentation& a, const Presentation& b, const GroebnerOptions& options = {});

/// Both maps are homomorphisms and both composites fix every generator modulo
/// the respective ideal.
bool verify_iso(const IsoWitness& w, const GroebnerOptions& options = {});

struct MoveResult {
  Presentation next;
  PolyMap forward;
  PolyMap backward;
};

/// Applies one gated move; throws MoveRejected (index 0) naming the failing
/// condition.
MoveResult apply_move(const Presentation& a, const Move& m, const GroebnerOptions& options = {});

struct ScriptResult {
  IsoWitness witness;
  std::vector<MoveResult> steps;
};

/// Runs the moves in order and composes the per-move maps. When `end` is
/// given, the final presentation must have the same generator names up to
/// order and an equal ideal after reordering; the witness then targets `end`.
/// The composed witness is verified end to end.
ScriptResult run_script(const Presentation& start, const std::vector<Move>& moves,
                        const std::optional<Presentation>& end = std::nullopt,
                        const GroebnerOptions& options = {});

/// Preimages of b's generators under f, by elimination in the ring with b's
/// generators first and a's after; nullopt when some generator has no
/// polynomial preimage. Requires check_hom(f, a, b).
std::optional<PolyMap> try_invert_hom(const PolyMap& f, const Presentation& a, const Presentation& b,
                                      const GroebnerOptions& options = {});

/// Every partial derivative is a nonzero constant times a variable, and the
/// variables are pairwise distinct.
bool is_gradient_full(const Polynomial& p);

struct NamedCheck {
  std::string name;
  bool passed;
};

struct RussellReport {
  IsoWitness witness;  // verified only when the inverse was found and checked
  bool homomorphism = false;
  std::vector<NamedCheck> surjectivity;
  bool inverse_found = false;
};

/// The isomorphism between K[x1,y1,z1,u]/<x1*y1 - z1^2 + 1> and
/// K[x2,y2,z2,v]/<x2^2*y2 - z2^2 + 1>, with the surjectivity identities.
RussellReport builtin_russell(const GroebnerOptions& options = {});

/// Script from <x, y, z.., t.. | x*T*(1 + x*y + S) - 1> to <x, y, z.., t.. | x*y*T - 1>
/// where S = z_1^2 + ... + z_m^2 and T = t_1*...*t_r.
std::string theorem16_script_text(std::size_t m, std::size_t r);
ScriptResult builtin_theorem16(std::size_t m, std::size_t r, const GroebnerOptions& options = {});

struct Prop32Report {
  IsoWitness closed_form;  // y -> u*p^(k-1), u -> y^k
  ScriptResult script;
  bool maps_agree = false;  // closed form and script maps agree modulo the ideals
};

/// <y, xs | y*p - 1> versus <u, xs | u*p^k - 1>. `p` is over `vars`; the
/// distinguished generators get fresh names. For k = 1 both sides are the
/// same presentation and the witness is the identity.
Prop32Report builtin_prop32(const Polynomial& p, const VarNames& vars, unsigned k, const GroebnerOptions& options = {});
/// The move script replaying the k = 2 chain k - 1 times.
std::string prop32_script_text(const Polynomial& p, const VarNames& vars, unsigned k);

/// Script file (one statement per line, '#' comments):
///   start NAME : gens x,y,z ; rel P [, P...]
///   rewrite rel P [, P...]
///   adjoin u := P
///   eliminate y := P
///   end NAME : gens ... ; rel ...     (optional)
struct Script {
  Presentation start;
  std::vector<Move> moves;
  std::optional<Presentation> end;
};
Script parse_script(std::string_view text);

}  // namespace tamekit
