#pragma once

#include <cstddef>
#include <optional>

#include "propkit/formula.hpp"
#include "propkit/semantics.hpp"
#include "propkit/sequent.hpp"

namespace propkit {

// Cut-free derivation: the Gc node shape restricted to trees with no Cut
// node and axiom leaves on variables only. The restriction is enforced by
// check_gcf, not by the type; as_gc() is the inclusion into Gc.
struct GcfDerivation {
  GcDerivation tree;

  const GcDerivation& as_gc() const { return tree; }
};

// Number of binary connectives.
std::size_t size(const Formula& f);
std::size_t sizel(const Context& ctx);
std::size_t sizes(const Context& gamma, const Context& delta);

// check_gc plus the two cut-free invariants.
Sequent check_gcf(const GcfDerivation& d);

bool equal(const GcfDerivation& a, const GcfDerivation& b);

struct DecisionResult {
  std::optional<GcfDerivation> proof;
  Valuation countervaluation;  // meaningful when no proof

  bool proved() const { return proof.has_value(); }
};

// Backward proof search, total and deterministic: decompose the leftmost
// compound formula in gamma, else in delta; at the atomic base close with
// GBot, then Gax, else report the countervaluation reading gamma as true.
// Every backward step strictly shrinks sizes, which bounds the search.
DecisionResult gcf_prove(const Sequent& s);

// Semantic cut elimination: re-proves the endsequent of a checked Gc
// derivation in the cut-free calculus. PreconditionError if d does not
// check; SoundnessBreachError if the search refutes the endsequent (which
// soundness of Gc rules out).
GcfDerivation cut_elimination(const GcDerivation& d);

}  // namespace propkit
