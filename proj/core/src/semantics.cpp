#include "propkit/semantics.hpp"

#include <cstdint>

#include "propkit/errors.hpp"

namespace propkit {

bool Valuation::value(const VarName& v) const {
  auto it = entries_.find(v);
  return it != entries_.end() && it->second;
}

void Valuation::set(VarName v, bool b) { entries_[std::move(v)] = b; }

std::string Valuation::to_string() const {
  std::string out;
  for (const auto& [var, val] : entries_) {
    if (!out.empty()) out += ',';
    out += var.name;
    out += '=';
    out += val ? "true" : "false";
  }
  return out;
}

Valuation Valuation::parse(std::string_view text) {
  Valuation v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(pos, "expected name=true|false");
    std::string_view name = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    if (!is_valid_var_name(name))
      throw ParseError(pos, "bad variable name '" + std::string(name) + "'");
    bool b;
    if (val == "true")
      b = true;
    else if (val == "false")
      b = false;
    else
      throw ParseError(pos + eq + 1, "expected 'true' or 'false'");
    v.set(VarName{std::string(name)}, b);
    pos = end + (end < text.size() ? 1 : 0);
  }
  return v;
}

bool eval(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var: return v.value(f.var_name());
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Disj: return eval(v, f.lhs()) || eval(v, f.rhs());
    case Formula::Kind::Conj: return eval(v, f.lhs()) && eval(v, f.rhs());
    case Formula::Kind::Impl: return !eval(v, f.lhs()) || eval(v, f.rhs());
  }
  return false;
}

bool satisfies(const Valuation& v, const Context& ctx) {
  for (const Formula& f : ctx)
    if (!eval(v, f)) return false;
  return true;
}

bool validates(const Valuation& v, const Context& delta) {
  for (const Formula& f : delta)
    if (eval(v, f)) return true;
  return false;
}

std::vector<VarName> variables_of(const Context& ctx) {
  std::vector<VarName> out;
  for (const Formula& f : ctx) {
    for (VarName& v : variables_of(f)) {
      bool seen = false;
      for (const VarName& u : out)
        if (u == v) { seen = true; break; }
      if (!seen) out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

std::vector<VarName> merge_vars(std::vector<VarName> a, const std::vector<VarName>& b) {
  for (const VarName& v : b) {
    bool seen = false;
    for (const VarName& u : a)
      if (u == v) { seen = true; break; }
    if (!seen) a.push_back(v);
  }
  return a;
}

// Valuation number `row` over `vars`: the first variable takes the most
// significant bit, false sorts before true.
Valuation nth_valuation(const std::vector<VarName>& vars, std::uint64_t row) {
  Valuation v;
  const std::size_t k = vars.size();
  for (std::size_t j = 0; j < k; ++j)
    v.set(vars[j], (row >> (k - 1 - j)) & 1u);
  return v;
}

template <typename Refutes>
ModelsVerdict enumerate(const std::vector<VarName>& vars, std::size_t max_vars,
                        Refutes&& refutes) {
  if (vars.size() > max_vars)
    throw ResourceLimitError("refusing to enumerate " + std::to_string(vars.size()) +
                             " variables (cap " + std::to_string(max_vars) + ")");
  const std::uint64_t count = std::uint64_t{1} << vars.size();
  for (std::uint64_t row = 0; row < count; ++row) {
    Valuation v = nth_valuation(vars, row);
    if (refutes(v)) return ModelsVerdict{std::move(v)};
  }
  return ModelsVerdict{};
}

}  // namespace

ModelsVerdict models(const Context& ctx, const Formula& f, std::size_t max_vars) {
  auto vars = merge_vars(variables_of(ctx), variables_of(f));
  return enumerate(vars, max_vars,
                   [&](const Valuation& v) { return satisfies(v, ctx) && !eval(v, f); });
}

ModelsVerdict sequent_models(const Context& gamma, const Context& delta,
                             std::size_t max_vars) {
  auto vars = merge_vars(variables_of(gamma), variables_of(delta));
  return enumerate(vars, max_vars,
                   [&](const Valuation& v) { return satisfies(v, gamma) && !validates(v, delta); });
}

}  // namespace propkit
