#include <doctest.h>

#include "propkit/errors.hpp"
#include "propkit/semantics.hpp"
#include "propkit/sequent.hpp"
#include "support/gen.hpp"

using namespace propkit;

namespace {

Formula v(const char* name) { return Formula::var(name); }

Context neg_each(const Context& ctx) { return neg_list(ctx); }

}  // namespace

TEST_CASE("check_gc: axioms may be non-atomic; GBot anywhere in gamma") {
  Formula pq = parse("p -> q");
  CHECK(check_gc(gax(Sequent{{pq}, {pq}}, 0, 0)) == Sequent{{pq}, {pq}});
  CHECK(check_gc(gbot(Sequent{{v("p"), Formula::bot()}, {}}, 1)) ==
        Sequent{{v("p"), Formula::bot()}, {}});
}

TEST_CASE("check_gc: AndR premises must agree outside the split position") {
  GcDerivation p1 = gax(Sequent{{v("p")}, {v("p")}}, 0, 0);
  GcDerivation p2 = gax(Sequent{{v("q")}, {v("q")}}, 0, 0);  // gamma differs
  GcDerivation node;
  node.rule = GcRule::AndR;
  node.pos = 0;
  node.premises.push_back(std::make_shared<const GcDerivation>(p1));
  node.premises.push_back(std::make_shared<const GcDerivation>(p2));
  node.sequent = Sequent{{v("p")}, {Formula::conj(v("p"), v("q"))}};
  try {
    check_gc(node);
    FAIL("expected CheckError");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckError::Kind::RuleMismatch);
  }
}

TEST_CASE("builders construct every rule at explicit positions") {
  // AndL merges two adjacent gamma slots
  GcDerivation base = gax(Sequent{{v("a"), v("p"), v("q")}, {v("p")}}, 1, 0);
  GcDerivation al = and_l(base, 1);
  CHECK(al.sequent == Sequent{{v("a"), Formula::conj(v("p"), v("q"))}, {v("p")}});
  CHECK_NOTHROW(check_gc(al));

  // axiom leaves need the shared formula on both sides
  CHECK_THROWS_AS(gax(Sequent{{}, {v("a"), v("b")}}, 0, 0), CheckError);

  // ImpL drops the implication in its major premise
  GcDerivation major2 = gbot(Sequent{{Formula::bot()}, {v("a"), v("b")}}, 0);
  GcDerivation minor2 = gax(Sequent{{v("b"), Formula::bot()}, {v("b")}}, 0, 0);
  GcDerivation il = imp_l(minor2, major2, 0);
  CHECK(il.sequent == Sequent{{parse("a -> b"), Formula::bot()}, {v("b")}});
  CHECK_NOTHROW(check_gc(il));

  // ImpR pops the head of gamma into the implication
  GcDerivation ir = imp_r(gax(Sequent{{v("p")}, {v("q"), v("p")}}, 0, 1), 0);
  CHECK(ir.sequent == Sequent{{}, {parse("p -> q"), v("p")}});
  CHECK_NOTHROW(check_gc(ir));

  // Cut composes G => A::D with A::G => D
  GcDerivation c = cut(gax(Sequent{{v("p")}, {v("q"), v("p")}}, 0, 1),
                       gax(Sequent{{v("q"), v("p")}, {v("p")}}, 1, 0));
  CHECK(c.sequent == Sequent{{v("p")}, {v("p")}});
  CHECK(*c.cut_formula == v("q"));
  CHECK_NOTHROW(check_gc(c));
}

TEST_CASE("gc_weaken: worked examples") {
  GcDerivation d = gax(Sequent{{v("p")}, {v("p")}}, 0, 0);

  GcDerivation wl = gc_weaken(d, Side::Left, 0, v("q"));
  CHECK(wl.sequent == Sequent{{v("q"), v("p")}, {v("p")}});
  CHECK(wl.pos == 1);  // axiom position shifted
  CHECK_NOTHROW(check_gc(wl));

  GcDerivation wr = gc_weaken(d, Side::Right, 1, v("q"));
  CHECK(wr.sequent == Sequent{{v("p")}, {v("p"), v("q")}});
  CHECK(wr.pos2 == 0);  // axiom position unchanged
  CHECK_NOTHROW(check_gc(wr));

  CHECK_THROWS_AS(gc_weaken(d, Side::Left, 5, v("q")), PreconditionError);
}

TEST_CASE("property: weakening anywhere preserves checking") {
  test::Rng rng(616);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 120; ++i) {
    GcDerivation d = test::random_gc(rng, 5, vars, false);
    Sequent s = check_gc(d);
    Side side = rng.flip() ? Side::Left : Side::Right;
    const Context& target = side == Side::Left ? s.gamma : s.delta;
    std::size_t pos = rng.below(target.size() + 1);
    Formula a = test::random_formula(rng, 3, vars);

    GcDerivation w = gc_weaken(d, side, pos, a);
    Sequent ws = check_gc(w);
    Sequent expected = s;
    Context& mutated = side == Side::Left ? expected.gamma : expected.delta;
    mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(pos), a);
    CHECK(ws == expected);
  }
}

TEST_CASE("big_or and neg_list") {
  CHECK(big_or(Context{}) == Formula::bot());
  CHECK(big_or(Context{v("a")}) == Formula::disj(v("a"), Formula::bot()));
  CHECK(big_or(Context{v("a"), v("b")}) ==
        Formula::disj(v("a"), Formula::disj(v("b"), Formula::bot())));

  CHECK(neg_list(Context{}).empty());
  CHECK(neg_list(Context{v("p")}) == Context{parse("~p")});
  CHECK(neg_list(Context{Formula::bot(), v("q")}) == Context{parse("~bot"), parse("~q")});
}

TEST_CASE("g_to_nc_neg: worked examples") {
  // Gax on [p] => [p] gives (p, ~p |- bot)
  NcDerivation a = g_to_nc_neg(gax(Sequent{{v("p")}, {v("p")}}, 0, 0));
  CHECK(check_nc(a) == Judgement{Context{v("p"), parse("~p")}, Formula::bot()});
  CHECK(a.rule == NcRule::ImpE);

  // GBot on [bot] => [] is a bare axiom
  NcDerivation b = g_to_nc_neg(gbot(Sequent{{Formula::bot()}, {}}, 0));
  CHECK(check_nc(b) == Judgement{Context{Formula::bot()}, Formula::bot()});
  CHECK(b.rule == NcRule::Nax);

  // a Cut node over small premises
  GcDerivation c = cut(gax(Sequent{{v("p")}, {v("q"), v("p")}}, 0, 1),
                       gax(Sequent{{v("q"), v("p")}, {v("p")}}, 1, 0));
  NcDerivation nc = g_to_nc_neg(c);
  CHECK(check_nc(nc) == Judgement{Context{v("p"), parse("~p")}, Formula::bot()});
}

TEST_CASE("g_to_nc: worked examples") {
  NcDerivation a = g_to_nc(gax(Sequent{{v("p")}, {v("p")}}, 0, 0));
  CHECK(check_nc(a) == Judgement{Context{v("p")}, parse("p | bot")});

  NcDerivation b = g_to_nc(gbot(Sequent{{Formula::bot()}, {}}, 0));
  CHECK(check_nc(b) == Judgement{Context{Formula::bot()}, Formula::bot()});
}

TEST_CASE("nc_to_g: worked examples") {
  GcDerivation a = nc_to_g(nax(Context{v("p")}, 0));
  CHECK(a.rule == GcRule::Gax);
  CHECK(check_gc(a) == Sequent{{v("p")}, {v("p")}});

  GcDerivation b = nc_to_g(imp_i(nax(Context{v("p")}, 0)));
  CHECK(check_gc(b) == Sequent{{}, {parse("p -> p")}});

  // an elimination spends a Cut on its cut formula
  NcDerivation mp = imp_e(nax(Context{parse("p -> q"), v("p")}, 0),
                          nax(Context{parse("p -> q"), v("p")}, 1));
  GcDerivation c = nc_to_g(mp);
  CHECK(c.rule == GcRule::Cut);
  CHECK(*c.cut_formula == parse("p -> q"));
  CHECK(check_gc(c) == Sequent{{parse("p -> q"), v("p")}, {v("q")}});
}

TEST_CASE("property: translations preserve endsequents both ways") {
  test::Rng rng(1212);
  auto vars = test::var_pool(3);

  for (int i = 0; i < 50; ++i) {
    Context ctx = test::random_context(rng, 2, 2, vars);
    NcDerivation d = test::random_nc(rng, ctx, 5, vars);
    Judgement j = check_nc(d);
    GcDerivation g = nc_to_g(d);
    CHECK(check_gc(g) == Sequent{j.context, Context{j.formula}});
  }

  for (int i = 0; i < 50; ++i) {
    GcDerivation g = test::random_gc(rng, 5, vars, rng.flip());
    Sequent s = check_gc(g);

    NcDerivation neg = g_to_nc_neg(g);
    Context expected = s.gamma;
    Context nd = neg_each(s.delta);
    expected.insert(expected.end(), nd.begin(), nd.end());
    CHECK(check_nc(neg) == Judgement{expected, Formula::bot()});

    NcDerivation big = g_to_nc(g);
    CHECK(check_nc(big) == Judgement{s.gamma, big_or(s.delta)});
  }
}

TEST_CASE("property: checked Gc endsequents are semantically valid") {
  test::Rng rng(343434);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 60; ++i) {
    GcDerivation g = test::random_gc(rng, 5, vars, rng.flip());
    Sequent s = check_gc(g);
    CHECK(sequent_models(s.gamma, s.delta).entailed());
  }
}
