#include <doctest.h>

#include <algorithm>

#include "propkit/errors.hpp"
#include "propkit/natded.hpp"
#include "propkit/semantics.hpp"
#include "support/gen.hpp"

using namespace propkit;

namespace {

Formula v(const char* name) { return Formula::var(name); }

std::shared_ptr<const NcDerivation> share(NcDerivation d) {
  return std::make_shared<const NcDerivation>(std::move(d));
}

}  // namespace

TEST_CASE("check_nc: axiom leaves") {
  NcDerivation d = nax(Context{v("p")}, 0);
  Judgement j = check_nc(d);
  CHECK(j.context == Context{v("p")});
  CHECK(j.formula == v("p"));
}

TEST_CASE("check_nc: identity proof by ImpI") {
  NcDerivation d = imp_i(nax(Context{v("p")}, 0));
  Judgement j = check_nc(d);
  CHECK(j.context.empty());
  CHECK(j.formula == Formula::impl(v("p"), v("p")));
}

TEST_CASE("check_nc: BotC premise must assume the negation") {
  // Premise context is [p] instead of [~p].
  NcDerivation premise;
  premise.rule = NcRule::Nax;
  premise.index = 0;
  premise.context = Context{v("p")};
  premise.formula = v("p");

  NcDerivation node;
  node.rule = NcRule::BotC;
  node.premises.push_back(share(premise));
  node.context = Context{};
  node.formula = v("p");

  try {
    check_nc(node);
    FAIL("expected CheckError");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckError::Kind::RuleMismatch);
  }
}

TEST_CASE("check_nc: arity and index violations") {
  NcDerivation no_premise;
  no_premise.rule = NcRule::ImpI;
  no_premise.context = Context{};
  no_premise.formula = Formula::impl(v("p"), v("p"));
  try {
    check_nc(no_premise);
    FAIL("expected CheckError");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckError::Kind::BadArity);
  }

  NcDerivation bad_index;
  bad_index.rule = NcRule::Nax;
  bad_index.index = 3;
  bad_index.context = Context{v("p")};
  bad_index.formula = v("p");
  try {
    check_nc(bad_index);
    FAIL("expected CheckError");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckError::Kind::BadIndex);
  }
}

TEST_CASE("check_nc reports the path of the offending node") {
  NcDerivation good = nax(Context{v("p")}, 0);
  NcDerivation bad = good;
  bad.index = 7;
  NcDerivation parent;
  parent.rule = NcRule::AndI;
  parent.premises.push_back(share(good));
  parent.premises.push_back(share(bad));
  parent.context = Context{v("p")};
  parent.formula = Formula::conj(v("p"), v("p"));
  try {
    check_nc(parent);
    FAIL("expected CheckError");
  } catch (const CheckError& e) {
    CHECK(e.path() == std::vector<std::size_t>{1});
  }
}

TEST_CASE("builders: rule shapes") {
  // and_i over two tautology proofs
  NcDerivation top1 = imp_i(nax(Context{Formula::bot()}, 0));
  NcDerivation both = and_i(top1, top1);
  CHECK(both.formula == Formula::conj(Formula::top(), Formula::top()));
  CHECK_NOTHROW(check_nc(both));

  // or_e matches the case-split shape
  NcDerivation major = or_i1(nax(Context{v("p")}, 0), v("q"));
  NcDerivation left = nax(Context{v("p"), v("p")}, 0);
  NcDerivation right = nax(Context{v("q"), v("p")}, 1);
  NcDerivation split = or_e(major, left, right);
  CHECK(split.formula == v("p"));
  CHECK(split.context == Context{v("p")});
  CHECK_NOTHROW(check_nc(split));

  // builders reject mismatched premises eagerly
  CHECK_THROWS_AS(imp_e(nax(Context{v("p")}, 0), nax(Context{v("p")}, 0)), CheckError);
  CHECK_THROWS_AS(imp_i(imp_i(nax(Context{v("p")}, 0))), CheckError);  // empty body context
  CHECK_THROWS_AS(bot_c(nax(Context{v("p")}, 0)), CheckError);
}

TEST_CASE("nc_weaken: worked examples") {
  // [p] |- p into [q, p]
  NcDerivation d = nax(Context{v("p")}, 0);
  NcDerivation w = nc_weaken(d, Context{v("q"), v("p")}, {1});
  Judgement j = check_nc(w);
  CHECK(j.context == Context{v("q"), v("p")});
  CHECK(j.formula == v("p"));
  CHECK(w.index == 1);

  // closed derivation into [q]
  NcDerivation id = imp_i(nax(Context{v("p")}, 0));
  NcDerivation w2 = nc_weaken(id, Context{v("q")}, {});
  Judgement j2 = check_nc(w2);
  CHECK(j2.context == Context{v("q")});
  CHECK(j2.formula == Formula::impl(v("p"), v("p")));
}

TEST_CASE("nc_weaken: invalid embeddings") {
  NcDerivation d = nax(Context{v("p"), v("p")}, 0);
  CHECK_THROWS_AS(nc_weaken(d, Context{v("p")}, {0}), EmbeddingError);  // wrong size
  CHECK_THROWS_AS(nc_weaken(d, Context{v("p"), v("p")}, {0, 0}),
                  EmbeddingError);  // not injective
  CHECK_THROWS_AS(nc_weaken(d, Context{v("p"), v("q")}, {0, 1}),
                  EmbeddingError);  // not formula-preserving
  CHECK_THROWS_AS(nc_weaken(d, Context{v("p"), v("p")}, {0, 5}),
                  EmbeddingError);  // out of range
}

TEST_CASE("property: weakening with random embeddings preserves checking") {
  test::Rng rng(2024);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 150; ++i) {
    Context ctx = test::random_context(rng, 3, 3, vars);
    NcDerivation d = test::random_nc(rng, ctx, 6, vars);
    REQUIRE_NOTHROW(check_nc(d));

    // Build a shuffled superset of ctx and the matching embedding.
    std::vector<int> tags;
    Context pool = ctx;
    for (std::size_t k = 0; k < ctx.size(); ++k) tags.push_back(static_cast<int>(k));
    std::size_t extras = rng.below(3);
    for (std::size_t k = 0; k < extras; ++k) {
      pool.push_back(test::random_formula(rng, 3, vars));
      tags.push_back(-1);
    }
    for (std::size_t k = pool.size(); k > 1; --k) {
      std::size_t j = rng.below(k);
      std::swap(pool[k - 1], pool[j]);
      std::swap(tags[k - 1], tags[j]);
    }
    std::vector<std::size_t> emb(ctx.size());
    for (std::size_t pos = 0; pos < pool.size(); ++pos)
      if (tags[pos] >= 0) emb[static_cast<std::size_t>(tags[pos])] = pos;

    NcDerivation w = nc_weaken(d, pool, emb);
    Judgement j = check_nc(w);
    CHECK(j.context == pool);
    CHECK(j.formula == d.formula);
  }
}

TEST_CASE("property: random checked derivations are sound") {
  test::Rng rng(555);
  auto vars = test::var_pool(4);
  for (int i = 0; i < 100; ++i) {
    Context ctx = test::random_context(rng, 2, 2, vars);
    NcDerivation d = test::random_nc(rng, ctx, 6, vars);
    Judgement j = check_nc(d);
    CHECK(models(j.context, j.formula).entailed());
  }
}

TEST_CASE("checking is deterministic and effect-free") {
  test::Rng rng(777);
  auto vars = test::var_pool(3);
  NcDerivation d = test::random_nc(rng, Context{v("p")}, 5, vars);
  Judgement a = check_nc(d);
  Judgement b = check_nc(d);
  CHECK(a == b);
  CHECK(equal(d, d));
}
