#include "propkit/cutfree.hpp"

#include <utility>

#include "propkit/errors.hpp"
#include "propkit/normalforms.hpp"

namespace propkit {

std::size_t size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Var:
    case Formula::Kind::Bot: return 0;
    default: return 1 + size(f.lhs()) + size(f.rhs());
  }
}

std::size_t sizel(const Context& ctx) {
  return map_fold_right([](const Formula& f) { return size(f); },
                        [](std::size_t a, std::size_t b) { return a + b; }, std::size_t{0},
                        ctx);
}

std::size_t sizes(const Context& gamma, const Context& delta) {
  return sizel(gamma) + sizel(delta);
}

namespace {

void check_cutfree_invariants(const GcDerivation& d, std::vector<std::size_t>& path) {
  if (d.rule == GcRule::Cut)
    throw CheckError(CheckError::Kind::RuleMismatch, path,
                     "Cut is not a cut-free rule");
  if (d.rule == GcRule::Gax && !d.sequent.gamma[d.pos].is_var())
    throw CheckError(CheckError::Kind::RuleMismatch, path,
                     "cut-free axiom must be atomic, found " +
                         to_string(d.sequent.gamma[d.pos]));
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_cutfree_invariants(*d.premises[i], path);
    path.pop_back();
  }
}

}  // namespace

Sequent check_gcf(const GcfDerivation& d) {
  Sequent s = check_gc(d.tree);
  std::vector<std::size_t> path;
  check_cutfree_invariants(d.tree, path);
  return s;
}

bool equal(const GcfDerivation& a, const GcfDerivation& b) { return equal(a.tree, b.tree); }

namespace {

Context cons(Formula a, const Context& ctx) {
  Context out;
  out.reserve(ctx.size() + 1);
  out.push_back(std::move(a));
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

Context replace1(const Context& ctx, std::size_t pos, const Formula& a) {
  Context out = ctx;
  out[pos] = a;
  return out;
}

Context replace2(const Context& ctx, std::size_t pos, const Formula& a, const Formula& b) {
  Context out = ctx;
  out[pos] = a;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos) + 1, b);
  return out;
}

Context erase_at(const Context& ctx, std::size_t pos) {
  Context out = ctx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

bool is_compound(const Formula& f) { return !f.is_var() && !f.is_bot(); }

struct SearchResult {
  std::optional<GcDerivation> proof;
  Valuation countervaluation;
};

// The size of every premise a backward step produces must drop strictly;
// this is the induction measure, so a violation is a library bug.
void assert_decreases(const Sequent& premise, std::size_t bound) {
  if (sizes(premise.gamma, premise.delta) >= bound)
    throw Error("gcf_prove: backward step failed to decrease the size measure");
}

SearchResult search(const Sequent& s) {
  const std::size_t bound = sizes(s.gamma, s.delta);

  auto recurse = [&](const Sequent& premise) {
    assert_decreases(premise, bound);
    return search(premise);
  };

  for (std::size_t i = 0; i < s.gamma.size(); ++i) {
    const Formula& f = s.gamma[i];
    if (!is_compound(f)) continue;
    switch (f.kind()) {
      case Formula::Kind::Conj: {
        SearchResult r = recurse({replace2(s.gamma, i, f.lhs(), f.rhs()), s.delta});
        if (!r.proof) return r;
        return {and_l(std::move(*r.proof), i), {}};
      }
      case Formula::Kind::Disj: {
        SearchResult r1 = recurse({replace1(s.gamma, i, f.lhs()), s.delta});
        if (!r1.proof) return r1;
        SearchResult r2 = recurse({replace1(s.gamma, i, f.rhs()), s.delta});
        if (!r2.proof) return r2;
        return {or_l(std::move(*r1.proof), std::move(*r2.proof), i), {}};
      }
      default: {  // Impl
        SearchResult r1 = recurse({replace1(s.gamma, i, f.rhs()), s.delta});
        if (!r1.proof) return r1;
        SearchResult r2 = recurse({erase_at(s.gamma, i), cons(f.lhs(), s.delta)});
        if (!r2.proof) return r2;
        return {imp_l(std::move(*r1.proof), std::move(*r2.proof), i), {}};
      }
    }
  }

  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    const Formula& f = s.delta[i];
    if (!is_compound(f)) continue;
    switch (f.kind()) {
      case Formula::Kind::Conj: {
        SearchResult r1 = recurse({s.gamma, replace1(s.delta, i, f.lhs())});
        if (!r1.proof) return r1;
        SearchResult r2 = recurse({s.gamma, replace1(s.delta, i, f.rhs())});
        if (!r2.proof) return r2;
        return {and_r(std::move(*r1.proof), std::move(*r2.proof), i), {}};
      }
      case Formula::Kind::Disj: {
        SearchResult r = recurse({s.gamma, replace2(s.delta, i, f.lhs(), f.rhs())});
        if (!r.proof) return r;
        return {or_r(std::move(*r.proof), i), {}};
      }
      default: {  // Impl
        SearchResult r = recurse({cons(f.lhs(), s.gamma), replace1(s.delta, i, f.rhs())});
        if (!r.proof) return r;
        return {imp_r(std::move(*r.proof), i), {}};
      }
    }
  }

  // Atomic base: falsum rule first, then the axiom rule.
  for (std::size_t i = 0; i < s.gamma.size(); ++i)
    if (s.gamma[i].is_bot()) return {gbot(s, i), {}};

  for (std::size_t gi = 0; gi < s.gamma.size(); ++gi)
    for (std::size_t di = 0; di < s.delta.size(); ++di)
      if (s.gamma[gi] == s.delta[di]) return {gax(s, gi, di), {}};

  Valuation v;
  for (const Formula& f : s.gamma) v.set(f.var_name(), true);
  for (const Formula& f : s.delta)
    if (f.is_var() && !v.defines(f.var_name())) v.set(f.var_name(), false);
  return {std::nullopt, std::move(v)};
}

}  // namespace

DecisionResult gcf_prove(const Sequent& s) {
  SearchResult r = search(s);
  if (!r.proof) return {std::nullopt, std::move(r.countervaluation)};
  return {GcfDerivation{std::move(*r.proof)}, {}};
}

GcfDerivation cut_elimination(const GcDerivation& d) {
  Sequent s;
  try {
    s = check_gc(d);
  } catch (const CheckError& e) {
    throw PreconditionError(std::string("cut_elimination input does not check: ") + e.what());
  }
  DecisionResult r = gcf_prove(s);
  if (!r.proved())
    throw SoundnessBreachError("gcf_prove refuted the endsequent of a checked derivation: " +
                               to_string(s) + " under " + r.countervaluation.to_string());
  return std::move(*r.proof);
}

}  // namespace propkit
