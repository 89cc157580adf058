#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "propkit/formula.hpp"
#include "propkit/natded.hpp"

namespace propkit {

enum class HcAxiomSchema { HOrI1, HOrI2, HAndI, HOrE, HAndE1, HAndE2, HS, HK, HClas };

// Number of metavariables of a schema (1 for HClas, 3 for HOrE/HS, else 2).
std::size_t schema_arity(HcAxiomSchema s);

// An axiom schema together with the formulas instantiating its
// metavariables, in schema order.
struct HcAxiom {
  HcAxiomSchema schema = HcAxiomSchema::HK;
  std::vector<Formula> instances;

  // The instantiated axiom, e.g. HK{A, B} -> A -> (B -> A).
  Formula formula() const;

  friend bool operator==(const HcAxiom&, const HcAxiom&) = default;
};

enum class HcRule { Hass, Hax, HImpE };

// Hilbert-calculus proof node: assumption, axiom instance, or modus ponens.
struct HcDerivation {
  HcRule rule = HcRule::Hass;
  std::size_t index = 0;              // Hass: position in context
  std::optional<HcAxiom> axiom;       // Hax
  std::optional<Formula> cut_formula; // HImpE: the A of A -> B
  std::vector<std::shared_ptr<const HcDerivation>> premises;
  Context context;
  Formula formula;
};

Judgement check_hc(const HcDerivation& d);

bool equal(const HcDerivation& a, const HcDerivation& b);

// Builders, eager-checked like the Nc ones.
NcDerivation hc_axiom_nc_proof(const HcAxiom& axiom);  // closed Nc proof of the axiom
HcDerivation hass(Context ctx, std::size_t index);
HcDerivation hax(Context ctx, HcAxiom axiom);
HcDerivation himp_e(HcDerivation fun, HcDerivation arg);

// Deduction theorem, constructive direction: from a checked derivation of
// (A::G |-H B) builds one of (G |-H A -> B). Hass(0) becomes the S/K
// identity, other leaves lift through HK, applications route through HS.
HcDerivation hc_deduction(const HcDerivation& d);

// Calculus translations. Both require the input to check
// (PreconditionError otherwise) and preserve the conclusion exactly.
HcDerivation nc_to_hc(const NcDerivation& d);
NcDerivation hc_to_nc(const HcDerivation& d);

}  // namespace propkit
