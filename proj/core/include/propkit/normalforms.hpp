#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "propkit/formula.hpp"
#include "propkit/natded.hpp"
#include "propkit/semantics.hpp"

namespace propkit {

// g(f(x0), g(f(x1), ... g(f(xn), base) ...)); base on the empty list.
template <typename T, typename Elem, typename F, typename G>
T map_fold_right(F&& f, G&& g, T base, const std::vector<Elem>& xs) {
  T acc = std::move(base);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = g(f(*it), std::move(acc));
  return acc;
}

// Negation-normal-form tree: negation only on variables, by construction.
class NnfFormula {
 public:
  enum class Kind : unsigned char { Pos, Neg, Bot, Top, Conj, Disj };

  NnfFormula();  // NBot

  static NnfFormula pos(VarName v);
  static NnfFormula neg(VarName v);
  static NnfFormula bot();
  static NnfFormula top();
  static NnfFormula conj(NnfFormula lhs, NnfFormula rhs);
  static NnfFormula disj(NnfFormula lhs, NnfFormula rhs);

  Kind kind() const;
  const VarName& var() const;  // Pos/Neg only
  NnfFormula lhs() const;      // Conj/Disj only
  NnfFormula rhs() const;

  friend bool operator==(const NnfFormula& a, const NnfFormula& b);
  friend bool operator!=(const NnfFormula& a, const NnfFormula& b) { return !(a == b); }

 private:
  struct Node;
  explicit NnfFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Literal {
  enum class Kind : unsigned char { Pos, Neg, Bot, Top };

  Kind kind = Kind::Bot;
  VarName var;  // Pos/Neg only

  static Literal pos(VarName v) { return {Kind::Pos, std::move(v)}; }
  static Literal neg(VarName v) { return {Kind::Neg, std::move(v)}; }
  static Literal bot() { return {Kind::Bot, {}}; }
  static Literal top() { return {Kind::Top, {}}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;
using CnfFormula = std::vector<Clause>;

enum class Polarity { Pos, Neg };

// Mutually recursive NNF transforms: Pos preserves truth, Neg computes the
// normal form of the negation.
NnfFormula make_nnf(const Formula& a, Polarity p);

Formula literal_to_formula(const Literal& l);
Formula nnf_to_formula(const NnfFormula& n);
// Right-nested disjunction ending in bot; [] |-> bot.
Formula clause_to_formula(const Clause& c);
// Right-nested conjunction of clause embeddings ending in top; [] |-> top.
Formula cnf_to_formula(const CnfFormula& c);

// Prepends l to every clause of ll.
CnfFormula add_clause(const Clause& l, const CnfFormula& ll);
// All pairwise clause concatenations, ll-major order.
CnfFormula disjunct(const CnfFormula& ll, const CnfFormula& ll2);
CnfFormula make_cnf(const NnfFormula& n);

struct ClauseVerdict {
  std::optional<Valuation> countervaluation;  // empty means valid

  bool valid() const { return !countervaluation.has_value(); }
};

struct CnfVerdict {
  std::optional<std::size_t> refuted_clause;  // empty means valid
  Valuation countervaluation;                 // meaningful when refuted

  bool valid() const { return !refuted_clause.has_value(); }
};

// A clause is valid iff it contains top or a complementary pos/neg pair on
// the same variable. Otherwise the countervaluation assigns true to x iff
// ~x occurs in the clause (variables of the clause only), which falsifies
// the clause's formula.
ClauseVerdict clause_decide(const Clause& c);

// Valid iff every clause is; otherwise the first refuted clause (by index)
// and its countervaluation, which falsifies cnf_to_formula(c).
CnfVerdict cnf_decide(const CnfFormula& c);

// Derivation of ([] |- cnf_to_formula(c)) for a CNF decided valid. The
// verdict is re-checked; EvidenceError if it no longer holds.
NcDerivation cnf_provable(const CnfFormula& c, const CnfVerdict& evidence);

// Derivation of ([] |- cnf_to_formula(make_cnf(n)) -> nnf_to_formula(n)).
NcDerivation cnf_impl_prov(const NnfFormula& n);

// Pos: ([] |- nnf_to_formula(make_nnf(a, Pos)) -> a)
// Neg: ([] |- nnf_to_formula(make_nnf(a, Neg)) -> ~a)
NcDerivation nnf_impl_prov(const Formula& a, Polarity p);

struct CompletenessResult {
  std::optional<NcDerivation> proof;  // derivation of ([] |- a)
  Valuation countervaluation;         // meaningful when no proof

  bool provable() const { return proof.has_value(); }
};

// Total decision procedure: either a checked derivation of ([] |- a) or a
// valuation falsifying a, via the NNF -> CNF -> syntactic validity route.
CompletenessResult complete(const Formula& a);

}  // namespace propkit
