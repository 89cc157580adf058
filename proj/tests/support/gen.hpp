#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "propkit/cutfree.hpp"
#include "propkit/formula.hpp"
#include "propkit/natded.hpp"
#include "propkit/semantics.hpp"
#include "propkit/sequent.hpp"

namespace propkit::test {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  bool flip() { return below(2) == 1; }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

std::vector<VarName> var_pool(std::size_t count);

// Random formula of height <= max_height (atoms have height 1).
Formula random_formula(Rng& rng, int max_height, const std::vector<VarName>& vars);

Context random_context(Rng& rng, std::size_t max_len, int max_height,
                       const std::vector<VarName>& vars);

// Random checker-accepted Nc derivation over ctx, grown bottom-up from Nax
// leaves through every rule.
NcDerivation random_nc(Rng& rng, const Context& ctx, int depth,
                       const std::vector<VarName>& vars, int formula_height = 2);

// Random checked Gc derivation. force_cut guarantees at least one Cut
// node; max_sizes caps the endsequent's connective count so downstream
// backward search stays cheap.
GcDerivation random_gc(Rng& rng, int depth, const std::vector<VarName>& vars, bool force_cut,
                       std::size_t max_sizes = 12);

// Independent truth-table oracle: bit r of the result is the truth of f
// under valuation number r, where vars[0] takes the most significant bit of
// r. Variables outside `vars` read false. Requires vars.size() <= 6.
std::uint64_t truth_mask(const Formula& f, const std::vector<VarName>& vars);
std::uint64_t full_mask(std::size_t var_count);
Valuation valuation_from_row(const std::vector<VarName>& vars, std::uint64_t row);

// All formulas of height <= height over the given atoms, every binary
// connective allowed.
std::vector<Formula> enumerate_formulas(const std::vector<Formula>& atoms, int height);

}  // namespace propkit::test
