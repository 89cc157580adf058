#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "propkit/cutfree.hpp"
#include "propkit/hilbert.hpp"
#include "propkit/natded.hpp"
#include "propkit/normalforms.hpp"
#include "propkit/sequent.hpp"

namespace propkit {

inline constexpr const char* kDerivationFormatVersion = "propkit-derivation/1";

enum class Calculus { Nc, Hc, Gc, Gcf };

const char* calculus_name(Calculus c);

using AnyDerivation = std::variant<NcDerivation, HcDerivation, GcDerivation, GcfDerivation>;

Calculus calculus_of(const AnyDerivation& d);

// One JSON envelope for the four calculi: the top-level object carries
// "version" and "calculus" next to the root node's fields; premises are
// nested node objects; formulas are grammar strings. Output is byte
// deterministic, so serialize(deserialize(s)) == s for documents produced
// here.
std::string to_json(const NcDerivation& d);
std::string to_json(const HcDerivation& d);
std::string to_json(const GcDerivation& d);
std::string to_json(const GcfDerivation& d);
std::string to_json(const AnyDerivation& d);

// Throws FormatError on malformed documents. The result is decoded, not
// checked; run the calculus checker on it before trusting it.
AnyDerivation derivation_from_json(std::string_view text);

// Clauses serialize as JSON arrays of literal tokens "p" / "~p" / "bot" /
// "top"; a CNF is an array of clauses.
std::string literal_to_token(const Literal& l);
Literal literal_from_token(std::string_view token);
std::string to_json(const CnfFormula& c);
CnfFormula cnf_from_json(std::string_view text);

}  // namespace propkit
