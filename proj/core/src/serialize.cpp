#include "propkit/serialize.hpp"

#include <json.hpp>
#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

using Json = nlohmann::ordered_json;

const char* calculus_name(Calculus c) {
  switch (c) {
    case Calculus::Nc: return "nc";
    case Calculus::Hc: return "hc";
    case Calculus::Gc: return "gc";
    case Calculus::Gcf: return "gcf";
  }
  return "?";
}

Calculus calculus_of(const AnyDerivation& d) {
  return static_cast<Calculus>(d.index());
}

namespace {

Json context_to_json(const Context& ctx) {
  Json arr = Json::array();
  for (const Formula& f : ctx) arr.push_back(to_string(f));
  return arr;
}

const char* nc_rule_name(NcRule r) {
  switch (r) {
    case NcRule::Nax: return "Nax";
    case NcRule::ImpI: return "ImpI";
    case NcRule::ImpE: return "ImpE";
    case NcRule::BotC: return "BotC";
    case NcRule::AndI: return "AndI";
    case NcRule::AndE1: return "AndE1";
    case NcRule::AndE2: return "AndE2";
    case NcRule::OrI1: return "OrI1";
    case NcRule::OrI2: return "OrI2";
    case NcRule::OrE: return "OrE";
  }
  return "?";
}

const char* hc_rule_name(HcRule r) {
  switch (r) {
    case HcRule::Hass: return "Hass";
    case HcRule::Hax: return "Hax";
    case HcRule::HImpE: return "HImpE";
  }
  return "?";
}

const char* gc_rule_name(GcRule r) {
  switch (r) {
    case GcRule::Gax: return "Gax";
    case GcRule::GBot: return "GBot";
    case GcRule::AndL: return "AndL";
    case GcRule::AndR: return "AndR";
    case GcRule::OrL: return "OrL";
    case GcRule::OrR: return "OrR";
    case GcRule::ImpL: return "ImpL";
    case GcRule::ImpR: return "ImpR";
    case GcRule::Cut: return "Cut";
  }
  return "?";
}

const char* schema_name(HcAxiomSchema s) {
  switch (s) {
    case HcAxiomSchema::HOrI1: return "HOrI1";
    case HcAxiomSchema::HOrI2: return "HOrI2";
    case HcAxiomSchema::HAndI: return "HAndI";
    case HcAxiomSchema::HOrE: return "HOrE";
    case HcAxiomSchema::HAndE1: return "HAndE1";
    case HcAxiomSchema::HAndE2: return "HAndE2";
    case HcAxiomSchema::HS: return "HS";
    case HcAxiomSchema::HK: return "HK";
    case HcAxiomSchema::HClas: return "HClas";
  }
  return "?";
}

Json nc_node(const NcDerivation& d) {
  Json j;
  j["rule"] = nc_rule_name(d.rule);
  switch (d.rule) {
    case NcRule::Nax: j["index"] = d.index; break;
    case NcRule::ImpE: j["cut"] = to_string(d.rule_formulas[0]); break;
    case NcRule::AndE1:
    case NcRule::AndE2: j["other"] = to_string(d.rule_formulas[0]); break;
    case NcRule::OrE:
      j["lhs"] = to_string(d.rule_formulas[0]);
      j["rhs"] = to_string(d.rule_formulas[1]);
      break;
    default: break;
  }
  j["context"] = context_to_json(d.context);
  j["formula"] = to_string(d.formula);
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(nc_node(*p));
  j["premises"] = std::move(premises);
  return j;
}

Json hc_node(const HcDerivation& d) {
  Json j;
  j["rule"] = hc_rule_name(d.rule);
  switch (d.rule) {
    case HcRule::Hass: j["index"] = d.index; break;
    case HcRule::Hax: {
      j["schema"] = schema_name(d.axiom->schema);
      Json inst = Json::array();
      for (const Formula& f : d.axiom->instances) inst.push_back(to_string(f));
      j["instances"] = std::move(inst);
      break;
    }
    case HcRule::HImpE: j["cut"] = to_string(*d.cut_formula); break;
  }
  j["context"] = context_to_json(d.context);
  j["formula"] = to_string(d.formula);
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(hc_node(*p));
  j["premises"] = std::move(premises);
  return j;
}

Json gc_node(const GcDerivation& d) {
  Json j;
  j["rule"] = gc_rule_name(d.rule);
  switch (d.rule) {
    case GcRule::Gax:
      j["gamma_pos"] = d.pos;
      j["delta_pos"] = d.pos2;
      break;
    case GcRule::GBot: j["gamma_pos"] = d.pos; break;
    case GcRule::Cut: j["cut"] = to_string(*d.cut_formula); break;
    default: j["index"] = d.pos; break;
  }
  j["gamma"] = context_to_json(d.sequent.gamma);
  j["delta"] = context_to_json(d.sequent.delta);
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(gc_node(*p));
  j["premises"] = std::move(premises);
  return j;
}

std::string finish(Json root, const char* calculus) {
  Json j;
  j["version"] = kDerivationFormatVersion;
  j["calculus"] = calculus;
  for (auto& [key, value] : root.items()) j[key] = std::move(value);
  return j.dump(2) + "\n";
}

// --- decoding ---------------------------------------------------------------

[[noreturn]] void bad(const std::string& msg) { throw FormatError(msg); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be an index");
  return v.get<std::size_t>();
}

Formula formula_field(const Json& j, const char* key) {
  try {
    return parse(str_field(j, key));
  } catch (const ParseError& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

Context context_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  Context ctx;
  ctx.reserve(v.size());
  for (const Json& item : v) {
    if (!item.is_string()) bad(std::string("field '") + key + "' must hold formula strings");
    try {
      ctx.push_back(parse(item.get<std::string>()));
    } catch (const ParseError& e) {
      bad(std::string("field '") + key + "': " + e.what());
    }
  }
  return ctx;
}

const Json& premises_field(const Json& j) {
  const Json& v = field(j, "premises");
  if (!v.is_array()) bad("field 'premises' must be an array");
  return v;
}

NcDerivation decode_nc(const Json& j) {
  NcDerivation d;
  const std::string rule = str_field(j, "rule");
  if (rule == "Nax") {
    d.rule = NcRule::Nax;
    d.index = index_field(j, "index");
  } else if (rule == "ImpI") {
    d.rule = NcRule::ImpI;
  } else if (rule == "ImpE") {
    d.rule = NcRule::ImpE;
    d.rule_formulas.push_back(formula_field(j, "cut"));
  } else if (rule == "BotC") {
    d.rule = NcRule::BotC;
  } else if (rule == "AndI") {
    d.rule = NcRule::AndI;
  } else if (rule == "AndE1") {
    d.rule = NcRule::AndE1;
    d.rule_formulas.push_back(formula_field(j, "other"));
  } else if (rule == "AndE2") {
    d.rule = NcRule::AndE2;
    d.rule_formulas.push_back(formula_field(j, "other"));
  } else if (rule == "OrI1") {
    d.rule = NcRule::OrI1;
  } else if (rule == "OrI2") {
    d.rule = NcRule::OrI2;
  } else if (rule == "OrE") {
    d.rule = NcRule::OrE;
    d.rule_formulas.push_back(formula_field(j, "lhs"));
    d.rule_formulas.push_back(formula_field(j, "rhs"));
  } else {
    bad("unknown nc rule '" + rule + "'");
  }
  d.context = context_field(j, "context");
  d.formula = formula_field(j, "formula");
  for (const Json& p : premises_field(j))
    d.premises.push_back(std::make_shared<const NcDerivation>(decode_nc(p)));
  return d;
}

HcAxiomSchema decode_schema(const std::string& s) {
  if (s == "HOrI1") return HcAxiomSchema::HOrI1;
  if (s == "HOrI2") return HcAxiomSchema::HOrI2;
  if (s == "HAndI") return HcAxiomSchema::HAndI;
  if (s == "HOrE") return HcAxiomSchema::HOrE;
  if (s == "HAndE1") return HcAxiomSchema::HAndE1;
  if (s == "HAndE2") return HcAxiomSchema::HAndE2;
  if (s == "HS") return HcAxiomSchema::HS;
  if (s == "HK") return HcAxiomSchema::HK;
  if (s == "HClas") return HcAxiomSchema::HClas;
  bad("unknown axiom schema '" + s + "'");
}

HcDerivation decode_hc(const Json& j) {
  HcDerivation d;
  const std::string rule = str_field(j, "rule");
  if (rule == "Hass") {
    d.rule = HcRule::Hass;
    d.index = index_field(j, "index");
  } else if (rule == "Hax") {
    d.rule = HcRule::Hax;
    HcAxiom axiom;
    axiom.schema = decode_schema(str_field(j, "schema"));
    const Json& inst = field(j, "instances");
    if (!inst.is_array()) bad("field 'instances' must be an array");
    for (const Json& item : inst) {
      if (!item.is_string()) bad("field 'instances' must hold formula strings");
      try {
        axiom.instances.push_back(parse(item.get<std::string>()));
      } catch (const ParseError& e) {
        bad(std::string("field 'instances': ") + e.what());
      }
    }
    d.axiom = std::move(axiom);
  } else if (rule == "HImpE") {
    d.rule = HcRule::HImpE;
    d.cut_formula = formula_field(j, "cut");
  } else {
    bad("unknown hc rule '" + rule + "'");
  }
  d.context = context_field(j, "context");
  d.formula = formula_field(j, "formula");
  for (const Json& p : premises_field(j))
    d.premises.push_back(std::make_shared<const HcDerivation>(decode_hc(p)));
  return d;
}

GcDerivation decode_gc(const Json& j) {
  GcDerivation d;
  const std::string rule = str_field(j, "rule");
  if (rule == "Gax") {
    d.rule = GcRule::Gax;
    d.pos = index_field(j, "gamma_pos");
    d.pos2 = index_field(j, "delta_pos");
  } else if (rule == "GBot") {
    d.rule = GcRule::GBot;
    d.pos = index_field(j, "gamma_pos");
  } else if (rule == "Cut") {
    d.rule = GcRule::Cut;
    d.cut_formula = formula_field(j, "cut");
  } else {
    if (rule == "AndL") d.rule = GcRule::AndL;
    else if (rule == "AndR") d.rule = GcRule::AndR;
    else if (rule == "OrL") d.rule = GcRule::OrL;
    else if (rule == "OrR") d.rule = GcRule::OrR;
    else if (rule == "ImpL") d.rule = GcRule::ImpL;
    else if (rule == "ImpR") d.rule = GcRule::ImpR;
    else bad("unknown gc rule '" + rule + "'");
    d.pos = index_field(j, "index");
  }
  d.sequent.gamma = context_field(j, "gamma");
  d.sequent.delta = context_field(j, "delta");
  for (const Json& p : premises_field(j))
    d.premises.push_back(std::make_shared<const GcDerivation>(decode_gc(p)));
  return d;
}

}  // namespace

std::string to_json(const NcDerivation& d) { return finish(nc_node(d), "nc"); }

std::string to_json(const HcDerivation& d) { return finish(hc_node(d), "hc"); }

std::string to_json(const GcDerivation& d) { return finish(gc_node(d), "gc"); }

std::string to_json(const GcfDerivation& d) { return finish(gc_node(d.tree), "gcf"); }

std::string to_json(const AnyDerivation& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

AnyDerivation derivation_from_json(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("not valid JSON");
  if (!j.is_object()) bad("top-level value must be an object");
  if (str_field(j, "version") != kDerivationFormatVersion)
    bad("unsupported version '" + str_field(j, "version") + "'");
  const std::string calculus = str_field(j, "calculus");
  if (calculus == "nc") return decode_nc(j);
  if (calculus == "hc") return decode_hc(j);
  if (calculus == "gc") return decode_gc(j);
  if (calculus == "gcf") return GcfDerivation{decode_gc(j)};
  bad("unknown calculus '" + calculus + "'");
}

std::string literal_to_token(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::Pos: return l.var.name;
    case Literal::Kind::Neg: return "~" + l.var.name;
    case Literal::Kind::Bot: return "bot";
    case Literal::Kind::Top: return "top";
  }
  return "?";
}

Literal literal_from_token(std::string_view token) {
  if (token == "bot") return Literal::bot();
  if (token == "top") return Literal::top();
  if (!token.empty() && token[0] == '~') {
    std::string_view name = token.substr(1);
    if (!is_valid_var_name(name)) bad("bad literal token '" + std::string(token) + "'");
    return Literal::neg(VarName{std::string(name)});
  }
  if (!is_valid_var_name(token)) bad("bad literal token '" + std::string(token) + "'");
  return Literal::pos(VarName{std::string(token)});
}

std::string to_json(const CnfFormula& c) {
  Json arr = Json::array();
  for (const Clause& clause : c) {
    Json cj = Json::array();
    for (const Literal& l : clause) cj.push_back(literal_to_token(l));
    arr.push_back(std::move(cj));
  }
  return arr.dump() + "\n";
}

CnfFormula cnf_from_json(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("not valid JSON");
  if (!j.is_array()) bad("a CNF document is an array of clauses");
  CnfFormula out;
  for (const Json& cj : j) {
    if (!cj.is_array()) bad("a clause is an array of literal tokens");
    Clause clause;
    for (const Json& l : cj) {
      if (!l.is_string()) bad("literals are strings");
      clause.push_back(literal_from_token(l.get<std::string>()));
    }
    out.push_back(std::move(clause));
  }
  return out;
}

}  // namespace propkit
