#include <doctest.h>

#include "propkit/errors.hpp"
#include "propkit/semantics.hpp"
#include "support/gen.hpp"

using namespace propkit;

namespace {

Formula v(const char* name) { return Formula::var(name); }

Valuation val(std::initializer_list<std::pair<const char*, bool>> items) {
  Valuation out;
  for (const auto& [name, b] : items) out.set(VarName{name}, b);
  return out;
}

}  // namespace

TEST_CASE("eval follows the truth tables") {
  CHECK_FALSE(eval(Valuation{}, Formula::bot()));
  CHECK_FALSE(eval(val({{"p", true}}), Formula::bot()));
  CHECK(eval(val({{"p", false}}), Formula::impl(v("p"), Formula::bot())));
  // (p | q) & ~p under p=false, q=true
  Formula f = Formula::conj(Formula::disj(v("p"), v("q")),
                            Formula::impl(v("p"), Formula::bot()));
  CHECK(eval(val({{"p", false}, {"q", true}}), f));
  // absent variables default to false
  CHECK_FALSE(eval(Valuation{}, v("p")));
}

TEST_CASE("satisfies quantifies over the whole context") {
  CHECK(satisfies(Valuation{}, Context{}));
  CHECK(satisfies(val({{"p", true}}), Context{v("p"), v("p")}));
  CHECK_FALSE(satisfies(val({{"p", true}, {"q", false}}), Context{v("p"), v("q")}));
}

TEST_CASE("models: tautologies, countervaluations, entailment") {
  CHECK(models(Context{}, Formula::disj(v("p"), Formula::neg(v("p")))).entailed());

  ModelsVerdict refuted = models(Context{}, v("p"));
  REQUIRE_FALSE(refuted.entailed());
  CHECK(refuted.countervaluation->to_string() == "p=false");

  CHECK(models(Context{v("p")}, Formula::disj(v("p"), v("q"))).entailed());
}

TEST_CASE("models returns the first countervaluation in counting order") {
  // p & q fails already at the all-false row.
  ModelsVerdict r = models(Context{}, Formula::conj(v("p"), v("q")));
  REQUIRE_FALSE(r.entailed());
  CHECK(r.countervaluation->to_string() == "p=false,q=false");
  // p fails first at p=false,q=false when q is also in play via the context.
  ModelsVerdict r2 = models(Context{Formula::disj(v("p"), v("q"))}, v("p"));
  REQUIRE_FALSE(r2.entailed());
  CHECK(r2.countervaluation->to_string() == "p=false,q=true");
}

TEST_CASE("sequent_models") {
  CHECK(sequent_models(Context{v("p")}, Context{v("p")}).entailed());

  ModelsVerdict empty = sequent_models(Context{}, Context{});
  REQUIRE_FALSE(empty.entailed());
  CHECK(empty.countervaluation->size() == 0);

  CHECK(sequent_models(Context{Formula::bot()}, Context{}).entailed());
}

TEST_CASE("resource guard refuses huge enumerations") {
  Context ctx;
  for (int i = 0; i < 25; ++i) ctx.push_back(Formula::var("x" + std::to_string(i)));
  CHECK_THROWS_AS(models(ctx, Formula::bot()), ResourceLimitError);
  CHECK_THROWS_AS(sequent_models(ctx, Context{}), ResourceLimitError);
  // The cap is configurable in both directions.
  Context small{v("p"), v("q"), v("r")};
  CHECK_THROWS_AS(models(small, Formula::bot(), 2), ResourceLimitError);
  CHECK_NOTHROW(models(small, Formula::bot(), 3));
}

TEST_CASE("valuation text form") {
  Valuation w = val({{"q", true}, {"p", false}});
  CHECK(w.to_string() == "p=false,q=true");
  CHECK(Valuation::parse("p=false,q=true") == w);
  CHECK(Valuation::parse("").size() == 0);
  CHECK_THROWS_AS(Valuation::parse("p"), ParseError);
  CHECK_THROWS_AS(Valuation::parse("p=maybe"), ParseError);
  CHECK_THROWS_AS(Valuation::parse("2x=true"), ParseError);
}

TEST_CASE("property: relevance — eval only reads occurring variables") {
  test::Rng rng(99);
  auto vars = test::var_pool(4);
  for (int i = 0; i < 300; ++i) {
    Formula f = test::random_formula(rng, 6, vars);
    auto occurring = variables_of(f);
    Valuation v1, v2;
    for (const VarName& x : occurring) {
      bool b = rng.flip();
      v1.set(x, b);
      v2.set(x, b);
    }
    // Diverge on fresh variables only.
    v1.set(VarName{"z1"}, rng.flip());
    v2.set(VarName{"z1"}, rng.flip());
    v2.set(VarName{"z2"}, true);
    CHECK(eval(v1, f) == eval(v2, f));
  }
}

TEST_CASE("property: models agrees with an independent truth-table oracle") {
  test::Rng rng(123);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 300; ++i) {
    Formula f = test::random_formula(rng, 5, vars);
    auto fvars = variables_of(f);
    std::uint64_t mask = test::truth_mask(f, fvars);
    bool oracle_valid = mask == test::full_mask(fvars.size());
    CHECK(models(Context{}, f).entailed() == oracle_valid);
  }
}

TEST_CASE("property: sequent_models with a singleton succedent is models") {
  test::Rng rng(321);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 200; ++i) {
    Context ctx = test::random_context(rng, 3, 4, vars);
    Formula f = test::random_formula(rng, 4, vars);
    ModelsVerdict a = models(ctx, f);
    ModelsVerdict b = sequent_models(ctx, Context{f});
    CHECK(a.entailed() == b.entailed());
    if (!a.entailed()) CHECK(*a.countervaluation == *b.countervaluation);
  }
}
