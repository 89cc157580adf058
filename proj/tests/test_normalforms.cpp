#include <doctest.h>

#include <string>

#include "propkit/errors.hpp"
#include "propkit/normalforms.hpp"
#include "support/gen.hpp"

using namespace propkit;

namespace {

Formula v(const char* name) { return Formula::var(name); }
VarName vn(const char* name) { return VarName{name}; }

Literal lpos(const char* n) { return Literal::pos(vn(n)); }
Literal lneg(const char* n) { return Literal::neg(vn(n)); }

// Exhaustive truth check over the formula's own variables.
bool same_truth(const Formula& a, const Formula& b) {
  Context both{a, b};
  auto vars = variables_of(both);
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    Valuation val = test::valuation_from_row(vars, r);
    if (eval(val, a) != eval(val, b)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("map_fold_right") {
  std::vector<int> empty;
  auto id = [](int x) { return x; };
  auto plus = [](int a, int b) { return a + b; };
  CHECK(map_fold_right(id, plus, 7, empty) == 7);
  CHECK(map_fold_right(id, plus, 7, std::vector<int>{3}) == 10);

  // order-sensitive fold: g(f(x0), g(f(x1), g(f(x2), base)))
  auto len = [](const std::string& s) { return s.size(); };
  auto weighted = [](std::size_t a, std::size_t b) { return a * 10 + b; };
  std::vector<std::string> xs{"a", "bb", "ccc"};
  CHECK(map_fold_right(len, weighted, std::size_t{0}, xs) == 60);  // g(1, g(2, g(3, 0)))
  CHECK(map_fold_right(len, plus, std::size_t{0}, xs) == 6);
}

TEST_CASE("make_nnf: positive and negative transforms") {
  CHECK(make_nnf(v("p"), Polarity::Pos) == NnfFormula::pos(vn("p")));
  CHECK(make_nnf(Formula::bot(), Polarity::Neg) == NnfFormula::top());
  CHECK(make_nnf(Formula::impl(v("p"), v("q")), Polarity::Pos) ==
        NnfFormula::disj(NnfFormula::neg(vn("p")), NnfFormula::pos(vn("q"))));
  CHECK(make_nnf(Formula::impl(v("p"), v("q")), Polarity::Neg) ==
        NnfFormula::conj(NnfFormula::pos(vn("p")), NnfFormula::neg(vn("q"))));
  CHECK(make_nnf(Formula::disj(v("p"), v("q")), Polarity::Neg) ==
        NnfFormula::conj(NnfFormula::neg(vn("p")), NnfFormula::neg(vn("q"))));
}

TEST_CASE("embeddings into formulas") {
  CHECK(nnf_to_formula(NnfFormula::neg(vn("p"))) == Formula::impl(v("p"), Formula::bot()));
  CHECK(literal_to_formula(Literal::top()) == Formula::neg(Formula::bot()));
  CHECK(nnf_to_formula(NnfFormula::disj(NnfFormula::pos(vn("p")), NnfFormula::bot())) ==
        Formula::disj(v("p"), Formula::bot()));
}

TEST_CASE("clause_to_formula: right-nested disjunction ending in bot") {
  Clause c{lpos("x"), lpos("y"), lpos("z")};
  CHECK(clause_to_formula(c) ==
        Formula::disj(v("x"), Formula::disj(v("y"), Formula::disj(v("z"), Formula::bot()))));
  CHECK(clause_to_formula(Clause{}) == Formula::bot());
  CHECK(clause_to_formula(Clause{Literal::top()}) ==
        Formula::disj(Formula::top(), Formula::bot()));
}

TEST_CASE("cnf_to_formula: right-nested conjunction ending in top") {
  CHECK(cnf_to_formula(CnfFormula{}) == Formula::top());
  CHECK(cnf_to_formula(CnfFormula{{lpos("p")}}) ==
        Formula::conj(Formula::disj(v("p"), Formula::bot()), Formula::top()));
  Clause c1{lpos("p")};
  Clause c2{lneg("q")};
  CHECK(cnf_to_formula(CnfFormula{c1, c2}) ==
        Formula::conj(clause_to_formula(c1),
                      Formula::conj(clause_to_formula(c2), Formula::top())));
}

TEST_CASE("add_clause and disjunct") {
  Clause a{lpos("a")};
  Clause b{lpos("b")};
  Clause c{lpos("c")};
  Clause d{lpos("d")};
  CHECK(add_clause(a, CnfFormula{b, c}) ==
        CnfFormula{{lpos("a"), lpos("b")}, {lpos("a"), lpos("c")}});
  CHECK(add_clause(a, CnfFormula{}).empty());
  CHECK(add_clause(Clause{}, CnfFormula{b, c}) == CnfFormula{b, c});

  CHECK(disjunct(CnfFormula{a, b}, CnfFormula{c, d}) ==
        CnfFormula{{lpos("a"), lpos("c")},
                   {lpos("a"), lpos("d")},
                   {lpos("b"), lpos("c")},
                   {lpos("b"), lpos("d")}});
  CHECK(disjunct(CnfFormula{}, CnfFormula{c}).empty());
  CHECK(disjunct(CnfFormula{a}, CnfFormula{c}) == CnfFormula{{lpos("a"), lpos("c")}});
}

TEST_CASE("make_cnf") {
  CHECK(make_cnf(NnfFormula::pos(vn("p"))) == CnfFormula{{lpos("p")}});
  CHECK(make_cnf(NnfFormula::conj(NnfFormula::pos(vn("p")), NnfFormula::pos(vn("q")))) ==
        CnfFormula{{lpos("p")}, {lpos("q")}});
  CHECK(make_cnf(NnfFormula::disj(NnfFormula::pos(vn("p")), NnfFormula::neg(vn("q")))) ==
        CnfFormula{{lpos("p"), lneg("q")}});
}

TEST_CASE("clause_decide") {
  CHECK(clause_decide(Clause{Literal::top()}).valid());
  CHECK(clause_decide(Clause{lpos("p"), lneg("p")}).valid());

  ClauseVerdict r = clause_decide(Clause{lpos("p"), Literal::bot()});
  REQUIRE_FALSE(r.valid());
  CHECK(r.countervaluation->to_string() == "p=false");
  CHECK_FALSE(eval(*r.countervaluation, clause_to_formula(Clause{lpos("p"), Literal::bot()})));

  // negative literals force true
  ClauseVerdict r2 = clause_decide(Clause{lneg("p"), lpos("q")});
  REQUIRE_FALSE(r2.valid());
  CHECK(r2.countervaluation->to_string() == "p=true,q=false");
  CHECK_FALSE(eval(*r2.countervaluation, clause_to_formula(Clause{lneg("p"), lpos("q")})));
}

TEST_CASE("cnf_decide") {
  CHECK(cnf_decide(CnfFormula{}).valid());
  CHECK(cnf_decide(CnfFormula{{Literal::top()}, {lpos("p"), lneg("p")}}).valid());

  CnfVerdict r = cnf_decide(CnfFormula{{lpos("p")}});
  REQUIRE_FALSE(r.valid());
  CHECK(*r.refuted_clause == 0);
  CHECK(r.countervaluation.to_string() == "p=false");

  // first refuted clause wins
  CnfVerdict r2 = cnf_decide(CnfFormula{{Literal::top()}, {lpos("q")}, {lpos("p")}});
  REQUIRE_FALSE(r2.valid());
  CHECK(*r2.refuted_clause == 1);
}

TEST_CASE("cnf_provable: checker-accepted derivations of valid CNFs") {
  auto prove_and_check = [](const CnfFormula& c) {
    CnfVerdict verdict = cnf_decide(c);
    REQUIRE(verdict.valid());
    NcDerivation d = cnf_provable(c, verdict);
    Judgement j = check_nc(d);
    CHECK(j.context.empty());
    CHECK(j.formula == cnf_to_formula(c));
  };
  prove_and_check(CnfFormula{});
  prove_and_check(CnfFormula{{Literal::top()}});
  prove_and_check(CnfFormula{{lpos("p"), lneg("p")}});
  prove_and_check(CnfFormula{{lpos("q"), Literal::top(), lneg("p")},
                             {Literal::bot(), lneg("p"), lpos("p")},
                             {lneg("r"), lpos("r")}});

  CnfVerdict stale = cnf_decide(CnfFormula{});
  CHECK_THROWS_AS(cnf_provable(CnfFormula{{lpos("p")}}, stale), EvidenceError);
  CnfVerdict refuted = cnf_decide(CnfFormula{{lpos("p")}});
  CHECK_THROWS_AS(cnf_provable(CnfFormula{}, refuted), EvidenceError);
}

TEST_CASE("cnf_impl_prov: derivations of CNF(A) -> A for NNF inputs") {
  auto run = [](const NnfFormula& n) {
    NcDerivation d = cnf_impl_prov(n);
    Judgement j = check_nc(d);
    CHECK(j.context.empty());
    CHECK(j.formula ==
          Formula::impl(cnf_to_formula(make_cnf(n)), nnf_to_formula(n)));
  };
  run(NnfFormula::bot());
  run(NnfFormula::pos(vn("p")));
  run(NnfFormula::conj(NnfFormula::pos(vn("p")), NnfFormula::pos(vn("q"))));
  run(NnfFormula::disj(NnfFormula::conj(NnfFormula::pos(vn("p")), NnfFormula::neg(vn("q"))),
                       NnfFormula::top()));
}

TEST_CASE("nnf_impl_prov: derivations of NNF(A) -> A and NNFN(A) -> ~A") {
  auto run = [](const Formula& a, Polarity p) {
    NcDerivation d = nnf_impl_prov(a, p);
    Judgement j = check_nc(d);
    CHECK(j.context.empty());
    Formula target = p == Polarity::Pos ? a : Formula::neg(a);
    CHECK(j.formula == Formula::impl(nnf_to_formula(make_nnf(a, p)), target));
  };
  run(v("p"), Polarity::Pos);
  run(Formula::bot(), Polarity::Neg);
  run(Formula::impl(v("p"), v("q")), Polarity::Pos);
  run(Formula::impl(v("p"), v("q")), Polarity::Neg);
  run(Formula::conj(Formula::disj(v("p"), v("q")), Formula::neg(v("r"))), Polarity::Pos);
  run(Formula::conj(Formula::disj(v("p"), v("q")), Formula::neg(v("r"))), Polarity::Neg);
}

TEST_CASE("complete: proofs for tautologies, countervaluations otherwise") {
  // excluded middle
  Formula lem = Formula::disj(v("p"), Formula::neg(v("p")));
  CompletenessResult r = complete(lem);
  REQUIRE(r.provable());
  Judgement j = check_nc(*r.proof);
  CHECK(j.context.empty());
  CHECK(j.formula == lem);

  CompletenessResult rt = complete(Formula::top());
  REQUIRE(rt.provable());
  CHECK(check_nc(*rt.proof).formula == Formula::top());

  CompletenessResult rp = complete(v("p"));
  REQUIRE_FALSE(rp.provable());
  CHECK(rp.countervaluation.to_string() == "p=false");
  CHECK_FALSE(eval(rp.countervaluation, v("p")));
}

TEST_CASE("property: NNF transforms preserve truth pointwise") {
  test::Rng rng(4242);
  auto pool = test::var_pool(4);
  for (int i = 0; i < 150; ++i) {
    Formula a = test::random_formula(rng, 6, pool);
    CHECK(same_truth(nnf_to_formula(make_nnf(a, Polarity::Pos)), a));
    CHECK(same_truth(nnf_to_formula(make_nnf(a, Polarity::Neg)), Formula::neg(a)));
  }
}

TEST_CASE("property: CNF transform preserves truth pointwise") {
  test::Rng rng(4343);
  auto pool = test::var_pool(4);
  int done = 0;
  while (done < 100) {
    Formula a = test::random_formula(rng, 6, pool);
    NnfFormula n = make_nnf(a, rng.flip() ? Polarity::Pos : Polarity::Neg);
    CnfFormula c = make_cnf(n);
    std::size_t literals = 0;
    for (const Clause& cl : c) literals += cl.size();
    if (literals > 4000) continue;  // distributive blowup; keep the nesting shallow
    CHECK(same_truth(cnf_to_formula(c), nnf_to_formula(n)));
    ++done;
  }
}

TEST_CASE("property: clause syntactic validity equals semantic validity") {
  // Exhaustive over clauses of length <= 3 over {p, q} with bot/top.
  std::vector<Literal> all{lpos("p"), lneg("p"), lpos("q"), lneg("q"), Literal::bot(),
                           Literal::top()};
  std::vector<Clause> todo{Clause{}};
  for (int len = 0; len < 3; ++len) {
    std::vector<Clause> next;
    for (const Clause& c : todo)
      for (const Literal& l : all) {
        Clause c2 = c;
        c2.push_back(l);
        next.push_back(c2);
      }
    for (const Clause& c : next) {
      bool syntactic = clause_decide(c).valid();
      bool semantic = models(Context{}, clause_to_formula(c)).entailed();
      CHECK(syntactic == semantic);
    }
    todo = std::move(next);
  }
}

TEST_CASE("property: complete() countervaluations falsify the input") {
  test::Rng rng(987);
  auto pool = test::var_pool(3);
  for (int i = 0; i < 150; ++i) {
    Formula a = test::random_formula(rng, 5, pool);
    CompletenessResult r = complete(a);
    if (r.provable()) {
      Judgement j = check_nc(*r.proof);
      CHECK(j.context.empty());
      CHECK(j.formula == a);
    } else {
      CHECK_FALSE(eval(r.countervaluation, a));
    }
  }
}
