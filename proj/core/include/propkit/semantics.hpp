#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propkit/formula.hpp"

namespace propkit {

// Hypothesis list. Order and multiplicity matter; derivation rules index
// into it positionally.
using Context = std::vector<Formula>;

// Finite truth assignment. Variables absent from the map read as false, so
// lookup is total.
class Valuation {
 public:
  Valuation() = default;

  bool value(const VarName& v) const;
  void set(VarName v, bool b);
  bool defines(const VarName& v) const { return entries_.count(v) != 0; }
  std::size_t size() const { return entries_.size(); }
  const std::map<VarName, bool>& entries() const { return entries_; }

  // "p=false,q=true" with names sorted; empty string for the empty map.
  std::string to_string() const;
  static Valuation parse(std::string_view text);

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<VarName, bool> entries_;
};

// Refusal threshold for exhaustive valuation enumeration.
inline constexpr std::size_t kDefaultVariableCap = 24;

struct ModelsVerdict {
  std::optional<Valuation> countervaluation;  // empty means entailed

  bool entailed() const { return !countervaluation.has_value(); }
};

// Truth of f under v: Var reads the valuation, bot is false, | and & are
// boolean or/and, Impl(B, C) is (not B) or C.
bool eval(const Valuation& v, const Formula& f);

// True iff every formula in ctx evaluates true under v.
bool satisfies(const Valuation& v, const Context& ctx);

// True iff some formula in delta evaluates true under v (false for empty
// delta).
bool validates(const Valuation& v, const Context& delta);

// Variables of all formulas in ctx, first-occurrence order.
std::vector<VarName> variables_of(const Context& ctx);

// Decides ctx |= f by enumerating every valuation over the variables of
// ctx and f. Variables are ordered by first occurrence and valuations
// visited in binary counting order (first variable most significant,
// false before true); the first countervaluation found is returned.
// Throws ResourceLimitError when more than max_vars variables occur.
ModelsVerdict models(const Context& ctx, const Formula& f,
                     std::size_t max_vars = kDefaultVariableCap);

// Decides gamma =|= delta: every valuation satisfying gamma must validate
// delta. Same enumeration order and resource guard as models.
ModelsVerdict sequent_models(const Context& gamma, const Context& delta,
                             std::size_t max_vars = kDefaultVariableCap);

}  // namespace propkit
