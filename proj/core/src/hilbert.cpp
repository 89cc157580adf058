#include "propkit/hilbert.hpp"

#include <unordered_map>
#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

std::size_t schema_arity(HcAxiomSchema s) {
  switch (s) {
    case HcAxiomSchema::HClas: return 1;
    case HcAxiomSchema::HOrE:
    case HcAxiomSchema::HS: return 3;
    default: return 2;
  }
}

Formula HcAxiom::formula() const {
  if (instances.size() != schema_arity(schema))
    throw CheckError(CheckError::Kind::BadArity, {},
                     "axiom schema instantiated with " + std::to_string(instances.size()) +
                         " formulas");
  auto in = [&](std::size_t i) { return instances[i]; };
  switch (schema) {
    case HcAxiomSchema::HOrI1: return Formula::impl(in(0), Formula::disj(in(0), in(1)));
    case HcAxiomSchema::HOrI2: return Formula::impl(in(1), Formula::disj(in(0), in(1)));
    case HcAxiomSchema::HAndI:
      return Formula::impl(in(0), Formula::impl(in(1), Formula::conj(in(0), in(1))));
    case HcAxiomSchema::HOrE:
      return Formula::impl(
          Formula::disj(in(0), in(1)),
          Formula::impl(Formula::impl(in(0), in(2)),
                        Formula::impl(Formula::impl(in(1), in(2)), in(2))));
    case HcAxiomSchema::HAndE1: return Formula::impl(Formula::conj(in(0), in(1)), in(0));
    case HcAxiomSchema::HAndE2: return Formula::impl(Formula::conj(in(0), in(1)), in(1));
    case HcAxiomSchema::HS:
      return Formula::impl(
          Formula::impl(in(0), Formula::impl(in(1), in(2))),
          Formula::impl(Formula::impl(in(0), in(1)), Formula::impl(in(0), in(2))));
    case HcAxiomSchema::HK: return Formula::impl(in(0), Formula::impl(in(1), in(0)));
    case HcAxiomSchema::HClas:
      return Formula::impl(Formula::neg(Formula::neg(in(0))), in(0));
  }
  return Formula::bot();
}

namespace {

using Path = std::vector<std::size_t>;

[[noreturn]] void fail(CheckError::Kind kind, const Path& path, const std::string& msg) {
  throw CheckError(kind, path, msg);
}

void expect(bool ok, const Path& path, const std::string& msg) {
  if (!ok) fail(CheckError::Kind::RuleMismatch, path, msg);
}

void check_node(const HcDerivation& d, const Path& path) {
  switch (d.rule) {
    case HcRule::Hass: {
      if (!d.premises.empty()) fail(CheckError::Kind::BadArity, path, "Hass takes no premises");
      if (d.index >= d.context.size())
        fail(CheckError::Kind::BadIndex, path,
             "Hass index " + std::to_string(d.index) + " out of range");
      expect(d.context[d.index] == d.formula, path, "Hass: context formula differs");
      return;
    }
    case HcRule::Hax: {
      if (!d.premises.empty()) fail(CheckError::Kind::BadArity, path, "Hax takes no premises");
      if (!d.axiom) fail(CheckError::Kind::BadArity, path, "Hax node carries no axiom");
      if (d.axiom->instances.size() != schema_arity(d.axiom->schema))
        fail(CheckError::Kind::BadArity, path, "axiom schema arity mismatch");
      expect(d.axiom->formula() == d.formula, path,
             "Hax: conclusion is not the instantiated schema");
      return;
    }
    case HcRule::HImpE: {
      if (d.premises.size() != 2) fail(CheckError::Kind::BadArity, path, "HImpE takes two premises");
      for (const auto& p : d.premises)
        if (!p) fail(CheckError::Kind::BadArity, path, "null premise");
      if (!d.cut_formula) fail(CheckError::Kind::BadArity, path, "HImpE carries no cut formula");
      const HcDerivation& fun = *d.premises[0];
      const HcDerivation& arg = *d.premises[1];
      expect(fun.formula == Formula::impl(*d.cut_formula, d.formula), path,
             "HImpE: first premise does not prove A -> B for the stored A");
      expect(arg.formula == *d.cut_formula, path,
             "HImpE: second premise does not prove the stored A");
      expect(fun.context == d.context && arg.context == d.context, path,
             "HImpE: premise contexts differ from conclusion context");
      return;
    }
  }
}

void check_rec(const HcDerivation& d, Path& path) {
  check_node(d, path);
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_rec(*d.premises[i], path);
    path.pop_back();
  }
}

}  // namespace

Judgement check_hc(const HcDerivation& d) {
  Path path;
  check_rec(d, path);
  return Judgement{d.context, d.formula};
}

bool equal(const HcDerivation& a, const HcDerivation& b) {
  if (a.rule != b.rule || a.index != b.index || a.axiom != b.axiom ||
      a.cut_formula != b.cut_formula || a.context != b.context || a.formula != b.formula ||
      a.premises.size() != b.premises.size())
    return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(*a.premises[i], *b.premises[i])) return false;
  return true;
}

HcDerivation hass(Context ctx, std::size_t index) {
  if (index >= ctx.size())
    throw CheckError(CheckError::Kind::BadIndex, {}, "Hass index out of range");
  HcDerivation d;
  d.rule = HcRule::Hass;
  d.index = index;
  d.formula = ctx[index];
  d.context = std::move(ctx);
  return d;
}

HcDerivation hax(Context ctx, HcAxiom axiom) {
  HcDerivation d;
  d.rule = HcRule::Hax;
  d.formula = axiom.formula();
  d.axiom = std::move(axiom);
  d.context = std::move(ctx);
  return d;
}

HcDerivation himp_e(HcDerivation fun, HcDerivation arg) {
  if (fun.formula.kind() != Formula::Kind::Impl || !(fun.formula.lhs() == arg.formula) ||
      fun.context != arg.context)
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "himp_e: premises do not fit modus ponens");
  HcDerivation d;
  d.rule = HcRule::HImpE;
  d.cut_formula = arg.formula;
  d.formula = fun.formula.rhs();
  d.context = fun.context;
  d.premises.push_back(std::make_shared<const HcDerivation>(std::move(fun)));
  d.premises.push_back(std::make_shared<const HcDerivation>(std::move(arg)));
  return d;
}

namespace {

HcAxiom ax(HcAxiomSchema s, std::vector<Formula> inst) { return HcAxiom{s, std::move(inst)}; }

// (G |-H A -> A) from S and K.
HcDerivation identity_proof(const Context& ctx, const Formula& a) {
  const Formula a_imp_a = Formula::impl(a, a);
  HcDerivation s = hax(ctx, ax(HcAxiomSchema::HS, {a, a_imp_a, a}));
  HcDerivation k1 = hax(ctx, ax(HcAxiomSchema::HK, {a, a_imp_a}));
  HcDerivation k2 = hax(ctx, ax(HcAxiomSchema::HK, {a, a}));
  return himp_e(himp_e(std::move(s), std::move(k1)), std::move(k2));
}

// Discharges the context head. Hc has no binders, so every node of a
// derivation shares one context and assumption index 0 always means the
// discharged hypothesis. Subtrees that never touch it lift in a single HK
// step (the K-optimization of bracket abstraction), which keeps nested
// discharges from going exponential; all memos are keyed by node identity,
// so shared subtrees are translated once.
class Deducer {
 public:
  Deducer(Formula hyp, Context tail) : hyp_(std::move(hyp)), tail_(std::move(tail)) {}

  HcDerivation run(const HcDerivation& d) {
    if (!uses_head(d))
      return himp_e(hax(tail_, ax(HcAxiomSchema::HK, {d.formula, hyp_})), drop_head(d));

    switch (d.rule) {
      case HcRule::Hass:
        return identity_proof(tail_, hyp_);  // uses_head, so index == 0
      case HcRule::Hax:
        throw PreconditionError("unreachable");  // axioms never use the head
      case HcRule::HImpE: {
        const HcDerivation& f = *d.premises[0];
        const HcDerivation& x = *d.premises[1];
        // eta: (f hyp) with hyp-free f is just f.
        if (x.rule == HcRule::Hass && x.index == 0 && !uses_head(f)) return drop_head(f);
        HcDerivation fun = run(f);  // hyp -> (cut -> B)
        HcDerivation arg = run(x);  // hyp -> cut
        HcDerivation s = hax(tail_, ax(HcAxiomSchema::HS, {hyp_, *d.cut_formula, d.formula}));
        return himp_e(himp_e(std::move(s), std::move(fun)), std::move(arg));
      }
    }
    throw PreconditionError("unreachable");
  }

 private:
  bool uses_head(const HcDerivation& d) {
    if (d.rule == HcRule::Hass) return d.index == 0;
    auto it = uses_.find(&d);
    if (it != uses_.end()) return it->second;
    bool result = false;
    for (const auto& p : d.premises)
      if (uses_head(*p)) { result = true; break; }
    uses_.emplace(&d, result);
    return result;
  }

  // Rebuilds a head-free subtree in the tail context, assumption indices
  // shifted down by one.
  HcDerivation drop_head(const HcDerivation& d) {
    auto it = dropped_.find(&d);
    if (it != dropped_.end()) return it->second;
    HcDerivation result = [&] {
      switch (d.rule) {
        case HcRule::Hass: return hass(tail_, d.index - 1);
        case HcRule::Hax: return hax(tail_, *d.axiom);
        case HcRule::HImpE: return himp_e(drop_head(*d.premises[0]), drop_head(*d.premises[1]));
      }
      throw PreconditionError("unreachable");
    }();
    dropped_.emplace(&d, result);
    return result;
  }

  Formula hyp_;
  Context tail_;
  std::unordered_map<const HcDerivation*, bool> uses_;
  std::unordered_map<const HcDerivation*, HcDerivation> dropped_;
};

HcDerivation deduce(const HcDerivation& d, const Formula& hyp, const Context& tail) {
  return Deducer(hyp, tail).run(d);
}

// Deduction step without the public precondition re-check; callers must
// pass derivations that already check and have a nonempty context.
HcDerivation ded(const HcDerivation& d) {
  const Formula hyp = d.context.front();
  const Context tail(d.context.begin() + 1, d.context.end());
  return deduce(d, hyp, tail);
}

}  // namespace

HcDerivation hc_deduction(const HcDerivation& d) {
  try {
    check_hc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("hc_deduction input does not check: ") + e.what());
  }
  if (d.context.empty())
    throw PreconditionError("hc_deduction requires a nonempty context");
  return ded(d);
}

namespace {

HcDerivation nc_to_hc_rec(const NcDerivation& d) {
  switch (d.rule) {
    case NcRule::Nax: return hass(d.context, d.index);
    case NcRule::ImpI: return ded(nc_to_hc_rec(*d.premises[0]));
    case NcRule::ImpE:
      return himp_e(nc_to_hc_rec(*d.premises[0]), nc_to_hc_rec(*d.premises[1]));
    case NcRule::BotC: {
      // ~A::G |- bot  ~~>  G |-H ~~A, then HClas.
      HcDerivation nn = ded(nc_to_hc_rec(*d.premises[0]));
      return himp_e(hax(d.context, ax(HcAxiomSchema::HClas, {d.formula})), std::move(nn));
    }
    case NcRule::AndI: {
      const NcDerivation& l = *d.premises[0];
      const NcDerivation& r = *d.premises[1];
      HcDerivation a = hax(d.context, ax(HcAxiomSchema::HAndI, {l.formula, r.formula}));
      return himp_e(himp_e(std::move(a), nc_to_hc_rec(l)), nc_to_hc_rec(r));
    }
    case NcRule::AndE1: {
      HcDerivation a =
          hax(d.context, ax(HcAxiomSchema::HAndE1, {d.formula, d.rule_formulas[0]}));
      return himp_e(std::move(a), nc_to_hc_rec(*d.premises[0]));
    }
    case NcRule::AndE2: {
      HcDerivation a =
          hax(d.context, ax(HcAxiomSchema::HAndE2, {d.rule_formulas[0], d.formula}));
      return himp_e(std::move(a), nc_to_hc_rec(*d.premises[0]));
    }
    case NcRule::OrI1: {
      HcDerivation a =
          hax(d.context, ax(HcAxiomSchema::HOrI1, {d.formula.lhs(), d.formula.rhs()}));
      return himp_e(std::move(a), nc_to_hc_rec(*d.premises[0]));
    }
    case NcRule::OrI2: {
      HcDerivation a =
          hax(d.context, ax(HcAxiomSchema::HOrI2, {d.formula.lhs(), d.formula.rhs()}));
      return himp_e(std::move(a), nc_to_hc_rec(*d.premises[0]));
    }
    case NcRule::OrE: {
      HcDerivation a = hax(d.context, ax(HcAxiomSchema::HOrE,
                                         {d.rule_formulas[0], d.rule_formulas[1], d.formula}));
      HcDerivation major = nc_to_hc_rec(*d.premises[0]);
      HcDerivation left = ded(nc_to_hc_rec(*d.premises[1]));
      HcDerivation right = ded(nc_to_hc_rec(*d.premises[2]));
      return himp_e(himp_e(himp_e(std::move(a), std::move(major)), std::move(left)),
                    std::move(right));
    }
  }
  throw PreconditionError("unreachable");
}

}  // namespace

HcDerivation nc_to_hc(const NcDerivation& d) {
  try {
    check_nc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("nc_to_hc input does not check: ") + e.what());
  }
  return nc_to_hc_rec(d);
}

NcDerivation hc_axiom_nc_proof(const HcAxiom& axiom) {
  const std::vector<Formula>& in = axiom.instances;
  if (in.size() != schema_arity(axiom.schema))
    throw CheckError(CheckError::Kind::BadArity, {}, "axiom schema arity mismatch");
  switch (axiom.schema) {
    case HcAxiomSchema::HOrI1:
      return imp_i(or_i1(nax({in[0]}, 0), in[1]));
    case HcAxiomSchema::HOrI2:
      return imp_i(or_i2(in[0], nax({in[1]}, 0)));
    case HcAxiomSchema::HAndI: {
      const Context ctx{in[1], in[0]};
      return imp_i(imp_i(and_i(nax(ctx, 1), nax(ctx, 0))));
    }
    case HcAxiomSchema::HOrE: {
      const Formula imp_ac = Formula::impl(in[0], in[2]);
      const Formula imp_bc = Formula::impl(in[1], in[2]);
      const Context ctx{imp_bc, imp_ac, Formula::disj(in[0], in[1])};
      const Context lctx = [&] { Context c{in[0]}; c.insert(c.end(), ctx.begin(), ctx.end()); return c; }();
      const Context rctx = [&] { Context c{in[1]}; c.insert(c.end(), ctx.begin(), ctx.end()); return c; }();
      NcDerivation body = or_e(nax(ctx, 2), imp_e(nax(lctx, 2), nax(lctx, 0)),
                               imp_e(nax(rctx, 1), nax(rctx, 0)));
      return imp_i(imp_i(imp_i(std::move(body))));
    }
    case HcAxiomSchema::HAndE1:
      return imp_i(and_e1(nax({Formula::conj(in[0], in[1])}, 0)));
    case HcAxiomSchema::HAndE2:
      return imp_i(and_e2(nax({Formula::conj(in[0], in[1])}, 0)));
    case HcAxiomSchema::HS: {
      const Context ctx{in[0], Formula::impl(in[0], in[1]),
                        Formula::impl(in[0], Formula::impl(in[1], in[2]))};
      NcDerivation b = imp_e(nax(ctx, 1), nax(ctx, 0));
      NcDerivation bc = imp_e(nax(ctx, 2), nax(ctx, 0));
      return imp_i(imp_i(imp_i(imp_e(std::move(bc), std::move(b)))));
    }
    case HcAxiomSchema::HK: {
      const Context ctx{in[1], in[0]};
      return imp_i(imp_i(nax(ctx, 1)));
    }
    case HcAxiomSchema::HClas: {
      const Context ctx{Formula::neg(in[0]), Formula::neg(Formula::neg(in[0]))};
      return imp_i(bot_c(imp_e(nax(ctx, 1), nax(ctx, 0))));
    }
  }
  throw PreconditionError("unreachable");
}

namespace {

NcDerivation hc_to_nc_rec(const HcDerivation& d) {
  switch (d.rule) {
    case HcRule::Hass: return nax(d.context, d.index);
    case HcRule::HImpE:
      return imp_e(hc_to_nc_rec(*d.premises[0]), hc_to_nc_rec(*d.premises[1]));
    case HcRule::Hax:
      return nc_weaken(hc_axiom_nc_proof(*d.axiom), d.context, {});
  }
  throw PreconditionError("unreachable");
}

}  // namespace

NcDerivation hc_to_nc(const HcDerivation& d) {
  try {
    check_hc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("hc_to_nc input does not check: ") + e.what());
  }
  return hc_to_nc_rec(d);
}

}  // namespace propkit
