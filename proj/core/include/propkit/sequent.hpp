#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "propkit/formula.hpp"
#include "propkit/natded.hpp"

namespace propkit {

struct Sequent {
  Context gamma;
  Context delta;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string to_string(const Sequent& s);  // "A, B => C, D"

enum class GcRule { Gax, GBot, AndL, AndR, OrL, OrR, ImpL, ImpR, Cut };

// Sequent-calculus node. Rules act at an explicit position because the
// same formula may occur several times in a list; the stored index makes
// checking deterministic.
//
//   Gax   pos: index in gamma, pos2: index in delta (same formula)
//   GBot  pos: index of bot in gamma
//   AndL  pos: gamma index of A&B; premise has A, B at pos, pos+1
//   AndR  pos: delta index of A&B; premises have A resp. B at pos
//   OrL   pos: gamma index of A|B; premises have A resp. B at pos
//   OrR   pos: delta index of A|B; premise has A, B at pos, pos+1
//   ImpL  pos: gamma index of A->B; premise 1 has B at pos, premise 2
//         drops the formula and gains A at the head of delta
//   ImpR  pos: delta index of A->B; premise has B at pos and A at the
//         head of gamma
//   Cut   cut_formula A; premises (G => A::D) and (A::G => D)
struct GcDerivation {
  GcRule rule = GcRule::GBot;
  std::size_t pos = 0;
  std::size_t pos2 = 0;
  std::optional<Formula> cut_formula;
  std::vector<std::shared_ptr<const GcDerivation>> premises;
  Sequent sequent;
};

Sequent check_gc(const GcDerivation& d);

bool equal(const GcDerivation& a, const GcDerivation& b);

// Builders, eager-checked.
GcDerivation gax(Sequent s, std::size_t gamma_pos, std::size_t delta_pos);
GcDerivation gbot(Sequent s, std::size_t gamma_pos);
GcDerivation and_l(GcDerivation premise, std::size_t pos);
GcDerivation and_r(GcDerivation left, GcDerivation right, std::size_t pos);
GcDerivation or_l(GcDerivation left, GcDerivation right, std::size_t pos);
GcDerivation or_r(GcDerivation premise, std::size_t pos);
GcDerivation imp_l(GcDerivation minor, GcDerivation major, std::size_t pos);
GcDerivation imp_r(GcDerivation premise, std::size_t pos);
GcDerivation cut(GcDerivation left, GcDerivation right);

enum class Side { Left, Right };

// Inserts formula a at `position` of the chosen side of the endsequent and
// rebuilds the whole tree, shifting stored rule indices as needed.
GcDerivation gc_weaken(const GcDerivation& d, Side side, std::size_t position,
                       const Formula& a);

// Right-nested disjunction of delta ending in bot.
Formula big_or(const Context& delta);
// Element-wise negation.
Context neg_list(const Context& delta);

// (G => D) to an Nc derivation of (G ++ ~D |- bot).
NcDerivation g_to_nc_neg(const GcDerivation& d);
// (G => D) to an Nc derivation of (G |- big_or(D)).
NcDerivation g_to_nc(const GcDerivation& d);
// (G |- A) to a Gc derivation of (G => [A]). Introduction rules map to
// right rules; each elimination spends one Cut.
GcDerivation nc_to_g(const NcDerivation& d);

}  // namespace propkit
