#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "propkit/formula.hpp"
#include "propkit/semantics.hpp"

namespace propkit {

enum class NcRule { Nax, ImpI, ImpE, BotC, AndI, AndE1, AndE2, OrI1, OrI2, OrE };

// One node of a natural-deduction proof tree. Every node records its full
// conclusion (context, formula); check_nc re-verifies each node against its
// rule, so a tree is never trusted, only checked.
//
// Rule payload:
//   Nax          index: position of the conclusion formula in the context
//   ImpE         rule_formulas = {A}: the premise formulas are A->B and A
//   AndE1/AndE2  rule_formulas = {other conjunct dropped from the premise}
//   OrE          rule_formulas = {A, B}: the case-split disjuncts
struct NcDerivation {
  NcRule rule = NcRule::Nax;
  std::size_t index = 0;
  std::vector<Formula> rule_formulas;
  std::vector<std::shared_ptr<const NcDerivation>> premises;
  Context context;
  Formula formula;
};

struct Judgement {
  Context context;
  Formula formula;

  friend bool operator==(const Judgement&, const Judgement&) = default;
};

// Verifies every node of d against its rule and returns the root
// conclusion. Rejection is total: the first violating node aborts the
// check with a CheckError naming the node path.
Judgement check_nc(const NcDerivation& d);

bool equal(const NcDerivation& a, const NcDerivation& b);

// Builders. Each validates its inputs against the rule shape eagerly and
// throws CheckError on mismatch, so any tree assembled from these passes
// check_nc by construction.
NcDerivation nax(Context ctx, std::size_t index);
// (A::G |- B)  =>  (G |- A -> B)
NcDerivation imp_i(NcDerivation body);
// (G |- A -> B), (G |- A)  =>  (G |- B)
NcDerivation imp_e(NcDerivation fun, NcDerivation arg);
// (~A::G |- bot)  =>  (G |- A)
NcDerivation bot_c(NcDerivation body);
NcDerivation and_i(NcDerivation lhs, NcDerivation rhs);
NcDerivation and_e1(NcDerivation both);
NcDerivation and_e2(NcDerivation both);
NcDerivation or_i1(NcDerivation lhs, Formula rhs);
NcDerivation or_i2(Formula lhs, NcDerivation rhs);
// (G |- A | B), (A::G |- C), (B::G |- C)  =>  (G |- C)
NcDerivation or_e(NcDerivation disj, NcDerivation left, NcDerivation right);

// Transports d into `target`. embedding[i] gives the position in target of
// the i-th formula of d's context; it must be injective and
// formula-preserving (target[embedding[i]] == d.context[i]) but need not be
// monotone, so this subsumes weakening, exchange and renumbering. Nax
// indices are rewritten and the embedding is extended under ImpI/BotC/OrE
// binders. Throws EmbeddingError on an invalid map.
NcDerivation nc_weaken(const NcDerivation& d, const Context& target,
                       const std::vector<std::size_t>& embedding);

}  // namespace propkit
