#include "propkit/natded.hpp"

#include <utility>

#include "propkit/errors.hpp"

namespace propkit {

namespace {

using Path = std::vector<std::size_t>;

std::size_t rule_arity(NcRule r) {
  switch (r) {
    case NcRule::Nax: return 0;
    case NcRule::ImpE:
    case NcRule::AndI: return 2;
    case NcRule::OrE: return 3;
    default: return 1;
  }
}

std::size_t payload_arity(NcRule r) {
  switch (r) {
    case NcRule::ImpE:
    case NcRule::AndE1:
    case NcRule::AndE2: return 1;
    case NcRule::OrE: return 2;
    default: return 0;
  }
}

[[noreturn]] void fail(CheckError::Kind kind, const Path& path, const std::string& msg) {
  throw CheckError(kind, path, msg);
}

void expect(bool ok, const Path& path, const std::string& msg) {
  if (!ok) fail(CheckError::Kind::RuleMismatch, path, msg);
}

Context cons(const Formula& a, const Context& ctx) {
  Context out;
  out.reserve(ctx.size() + 1);
  out.push_back(a);
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

// Verifies one node against its rule, assuming premises already verified.
void check_node(const NcDerivation& d, const Path& path) {
  if (d.premises.size() != rule_arity(d.rule))
    fail(CheckError::Kind::BadArity, path,
         "rule expects " + std::to_string(rule_arity(d.rule)) + " premises, found " +
             std::to_string(d.premises.size()));
  if (d.rule_formulas.size() != payload_arity(d.rule))
    fail(CheckError::Kind::BadArity, path,
         "rule expects " + std::to_string(payload_arity(d.rule)) +
             " rule formulas, found " + std::to_string(d.rule_formulas.size()));
  for (const auto& p : d.premises)
    if (!p) fail(CheckError::Kind::BadArity, path, "null premise");

  switch (d.rule) {
    case NcRule::Nax: {
      if (d.index >= d.context.size())
        fail(CheckError::Kind::BadIndex, path,
             "Nax index " + std::to_string(d.index) + " out of range for context of size " +
                 std::to_string(d.context.size()));
      expect(d.context[d.index] == d.formula, path,
             "Nax: context[" + std::to_string(d.index) + "] is " +
                 to_string(d.context[d.index]) + ", conclusion is " + to_string(d.formula));
      return;
    }
    case NcRule::ImpI: {
      const NcDerivation& p = *d.premises[0];
      expect(d.formula.kind() == Formula::Kind::Impl, path,
             "ImpI: conclusion " + to_string(d.formula) + " is not an implication");
      expect(p.formula == d.formula.rhs(), path, "ImpI: premise proves the wrong formula");
      expect(p.context == cons(d.formula.lhs(), d.context), path,
             "ImpI: premise context is not A::G");
      return;
    }
    case NcRule::ImpE: {
      const Formula& a = d.rule_formulas[0];
      const NcDerivation& fun = *d.premises[0];
      const NcDerivation& arg = *d.premises[1];
      expect(fun.formula == Formula::impl(a, d.formula), path,
             "ImpE: first premise does not prove A -> B for the stored A");
      expect(arg.formula == a, path, "ImpE: second premise does not prove the stored A");
      expect(fun.context == d.context && arg.context == d.context, path,
             "ImpE: premise contexts differ from conclusion context");
      return;
    }
    case NcRule::BotC: {
      const NcDerivation& p = *d.premises[0];
      expect(p.formula.is_bot(), path, "BotC: premise must prove bot");
      expect(p.context == cons(Formula::neg(d.formula), d.context), path,
             "BotC: premise context is not ~A::G");
      return;
    }
    case NcRule::AndI: {
      const NcDerivation& l = *d.premises[0];
      const NcDerivation& r = *d.premises[1];
      expect(d.formula == Formula::conj(l.formula, r.formula), path,
             "AndI: conclusion is not the conjunction of the premises");
      expect(l.context == d.context && r.context == d.context, path,
             "AndI: premise contexts differ from conclusion context");
      return;
    }
    case NcRule::AndE1: {
      const NcDerivation& p = *d.premises[0];
      expect(p.formula == Formula::conj(d.formula, d.rule_formulas[0]), path,
             "AndE1: premise does not prove A /\\ B for the stored B");
      expect(p.context == d.context, path, "AndE1: premise context differs");
      return;
    }
    case NcRule::AndE2: {
      const NcDerivation& p = *d.premises[0];
      expect(p.formula == Formula::conj(d.rule_formulas[0], d.formula), path,
             "AndE2: premise does not prove A /\\ B for the stored A");
      expect(p.context == d.context, path, "AndE2: premise context differs");
      return;
    }
    case NcRule::OrI1: {
      const NcDerivation& p = *d.premises[0];
      expect(d.formula.kind() == Formula::Kind::Disj, path,
             "OrI1: conclusion is not a disjunction");
      expect(p.formula == d.formula.lhs(), path, "OrI1: premise proves the wrong disjunct");
      expect(p.context == d.context, path, "OrI1: premise context differs");
      return;
    }
    case NcRule::OrI2: {
      const NcDerivation& p = *d.premises[0];
      expect(d.formula.kind() == Formula::Kind::Disj, path,
             "OrI2: conclusion is not a disjunction");
      expect(p.formula == d.formula.rhs(), path, "OrI2: premise proves the wrong disjunct");
      expect(p.context == d.context, path, "OrI2: premise context differs");
      return;
    }
    case NcRule::OrE: {
      const Formula& a = d.rule_formulas[0];
      const Formula& b = d.rule_formulas[1];
      const NcDerivation& disj = *d.premises[0];
      const NcDerivation& left = *d.premises[1];
      const NcDerivation& right = *d.premises[2];
      expect(disj.formula == Formula::disj(a, b), path,
             "OrE: major premise does not prove A | B for the stored disjuncts");
      expect(disj.context == d.context, path, "OrE: major premise context differs");
      expect(left.formula == d.formula && right.formula == d.formula, path,
             "OrE: branch conclusions differ from the node conclusion");
      expect(left.context == cons(a, d.context), path, "OrE: left branch context is not A::G");
      expect(right.context == cons(b, d.context), path,
             "OrE: right branch context is not B::G");
      return;
    }
  }
}

void check_rec(const NcDerivation& d, Path& path) {
  check_node(d, path);
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_rec(*d.premises[i], path);
    path.pop_back();
  }
}

std::shared_ptr<const NcDerivation> share(NcDerivation d) {
  return std::make_shared<const NcDerivation>(std::move(d));
}

// Builds a node and validates it locally; premises are taken as already
// checked (builders only ever receive builder output).
NcDerivation make_node(NcRule rule, std::size_t index, std::vector<Formula> rule_formulas,
                       std::vector<NcDerivation> premises, Context ctx, Formula formula) {
  NcDerivation d;
  d.rule = rule;
  d.index = index;
  d.rule_formulas = std::move(rule_formulas);
  d.premises.reserve(premises.size());
  for (NcDerivation& p : premises) d.premises.push_back(share(std::move(p)));
  d.context = std::move(ctx);
  d.formula = std::move(formula);
  check_node(d, Path{});
  return d;
}

}  // namespace

Judgement check_nc(const NcDerivation& d) {
  Path path;
  check_rec(d, path);
  return Judgement{d.context, d.formula};
}

bool equal(const NcDerivation& a, const NcDerivation& b) {
  if (a.rule != b.rule || a.index != b.index || a.rule_formulas != b.rule_formulas ||
      a.context != b.context || a.formula != b.formula ||
      a.premises.size() != b.premises.size())
    return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(*a.premises[i], *b.premises[i])) return false;
  return true;
}

NcDerivation nax(Context ctx, std::size_t index) {
  if (index >= ctx.size())
    throw CheckError(CheckError::Kind::BadIndex, {},
                     "Nax index " + std::to_string(index) + " out of range");
  Formula f = ctx[index];
  return make_node(NcRule::Nax, index, {}, {}, std::move(ctx), std::move(f));
}

NcDerivation imp_i(NcDerivation body) {
  if (body.context.empty())
    throw CheckError(CheckError::Kind::RuleMismatch, {}, "imp_i: body context is empty");
  Formula hyp = body.context.front();
  Context ctx(body.context.begin() + 1, body.context.end());
  Formula conclusion = Formula::impl(hyp, body.formula);
  return make_node(NcRule::ImpI, 0, {}, {std::move(body)}, std::move(ctx),
                   std::move(conclusion));
}

NcDerivation imp_e(NcDerivation fun, NcDerivation arg) {
  if (fun.formula.kind() != Formula::Kind::Impl)
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "imp_e: major premise proves " + to_string(fun.formula) +
                         ", not an implication");
  Formula a = fun.formula.lhs();
  Formula b = fun.formula.rhs();
  Context ctx = fun.context;
  return make_node(NcRule::ImpE, 0, {std::move(a)}, {std::move(fun), std::move(arg)},
                   std::move(ctx), std::move(b));
}

NcDerivation bot_c(NcDerivation body) {
  if (body.context.empty() || !body.context.front().is_neg())
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "bot_c: body context must start with a negation");
  Formula a = body.context.front().lhs();
  Context ctx(body.context.begin() + 1, body.context.end());
  return make_node(NcRule::BotC, 0, {}, {std::move(body)}, std::move(ctx), std::move(a));
}

NcDerivation and_i(NcDerivation lhs, NcDerivation rhs) {
  Formula f = Formula::conj(lhs.formula, rhs.formula);
  Context ctx = lhs.context;
  return make_node(NcRule::AndI, 0, {}, {std::move(lhs), std::move(rhs)}, std::move(ctx),
                   std::move(f));
}

NcDerivation and_e1(NcDerivation both) {
  if (both.formula.kind() != Formula::Kind::Conj)
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "and_e1: premise proves " + to_string(both.formula) +
                         ", not a conjunction");
  Formula a = both.formula.lhs();
  Formula b = both.formula.rhs();
  Context ctx = both.context;
  return make_node(NcRule::AndE1, 0, {std::move(b)}, {std::move(both)}, std::move(ctx),
                   std::move(a));
}

NcDerivation and_e2(NcDerivation both) {
  if (both.formula.kind() != Formula::Kind::Conj)
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "and_e2: premise proves " + to_string(both.formula) +
                         ", not a conjunction");
  Formula a = both.formula.lhs();
  Formula b = both.formula.rhs();
  Context ctx = both.context;
  return make_node(NcRule::AndE2, 0, {std::move(a)}, {std::move(both)}, std::move(ctx),
                   std::move(b));
}

NcDerivation or_i1(NcDerivation lhs, Formula rhs) {
  Formula f = Formula::disj(lhs.formula, std::move(rhs));
  Context ctx = lhs.context;
  return make_node(NcRule::OrI1, 0, {}, {std::move(lhs)}, std::move(ctx), std::move(f));
}

NcDerivation or_i2(Formula lhs, NcDerivation rhs) {
  Formula f = Formula::disj(std::move(lhs), rhs.formula);
  Context ctx = rhs.context;
  return make_node(NcRule::OrI2, 0, {}, {std::move(rhs)}, std::move(ctx), std::move(f));
}

NcDerivation or_e(NcDerivation disj, NcDerivation left, NcDerivation right) {
  if (disj.formula.kind() != Formula::Kind::Disj)
    throw CheckError(CheckError::Kind::RuleMismatch, {},
                     "or_e: major premise proves " + to_string(disj.formula) +
                         ", not a disjunction");
  Formula a = disj.formula.lhs();
  Formula b = disj.formula.rhs();
  Formula f = left.formula;
  Context ctx = disj.context;
  return make_node(NcRule::OrE, 0, {std::move(a), std::move(b)},
                   {std::move(disj), std::move(left), std::move(right)}, std::move(ctx),
                   std::move(f));
}

namespace {

NcDerivation weaken_rec(const NcDerivation& d, const Context& target,
                        const std::vector<std::size_t>& emb) {
  auto extend = [&](const Formula& bound) {
    // Bound hypothesis goes to slot 0 of the extended target.
    Context new_target = cons(bound, target);
    std::vector<std::size_t> new_emb;
    new_emb.reserve(emb.size() + 1);
    new_emb.push_back(0);
    for (std::size_t e : emb) new_emb.push_back(e + 1);
    return std::pair(std::move(new_target), std::move(new_emb));
  };

  switch (d.rule) {
    case NcRule::Nax:
      return nax(target, emb[d.index]);
    case NcRule::ImpI: {
      auto [t, e] = extend(d.formula.lhs());
      return imp_i(weaken_rec(*d.premises[0], t, e));
    }
    case NcRule::BotC: {
      auto [t, e] = extend(Formula::neg(d.formula));
      return bot_c(weaken_rec(*d.premises[0], t, e));
    }
    case NcRule::ImpE:
      return imp_e(weaken_rec(*d.premises[0], target, emb),
                   weaken_rec(*d.premises[1], target, emb));
    case NcRule::AndI:
      return and_i(weaken_rec(*d.premises[0], target, emb),
                   weaken_rec(*d.premises[1], target, emb));
    case NcRule::AndE1:
      return and_e1(weaken_rec(*d.premises[0], target, emb));
    case NcRule::AndE2:
      return and_e2(weaken_rec(*d.premises[0], target, emb));
    case NcRule::OrI1:
      return or_i1(weaken_rec(*d.premises[0], target, emb), d.formula.rhs());
    case NcRule::OrI2:
      return or_i2(d.formula.lhs(), weaken_rec(*d.premises[0], target, emb));
    case NcRule::OrE: {
      auto [tl, el] = extend(d.rule_formulas[0]);
      auto [tr, er] = extend(d.rule_formulas[1]);
      return or_e(weaken_rec(*d.premises[0], target, emb),
                  weaken_rec(*d.premises[1], tl, el), weaken_rec(*d.premises[2], tr, er));
    }
  }
  throw EmbeddingError("unreachable");
}

}  // namespace

NcDerivation nc_weaken(const NcDerivation& d, const Context& target,
                       const std::vector<std::size_t>& embedding) {
  if (embedding.size() != d.context.size())
    throw EmbeddingError("embedding covers " + std::to_string(embedding.size()) +
                         " positions, context has " + std::to_string(d.context.size()));
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    if (embedding[i] >= target.size())
      throw EmbeddingError("position " + std::to_string(embedding[i]) + " out of range");
    if (!(target[embedding[i]] == d.context[i]))
      throw EmbeddingError("embedding does not preserve formula at source position " +
                           std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (embedding[j] == embedding[i])
        throw EmbeddingError("embedding is not injective");
  }
  return weaken_rec(d, target, embedding);
}

}  // namespace propkit
