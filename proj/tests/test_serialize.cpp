#include <doctest.h>

#include <fstream>
#include <sstream>

#include "propkit/errors.hpp"
#include "propkit/hilbert.hpp"
#include "propkit/normalforms.hpp"
#include "propkit/serialize.hpp"
#include "support/gen.hpp"

using namespace propkit;

namespace {

Formula v(const char* name) { return Formula::var(name); }

}  // namespace

TEST_CASE("envelope carries version and calculus") {
  NcDerivation d = imp_i(nax(Context{v("p")}, 0));
  std::string doc = to_json(d);
  CHECK(doc.find("\"version\": \"propkit-derivation/1\"") != std::string::npos);
  CHECK(doc.find("\"calculus\": \"nc\"") != std::string::npos);
  CHECK(doc.find("\"rule\": \"ImpI\"") != std::string::npos);
}

TEST_CASE("nc round-trip is bit-exact") {
  test::Rng rng(5150);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 40; ++i) {
    NcDerivation d = test::random_nc(rng, test::random_context(rng, 2, 2, vars), 5, vars);
    std::string doc = to_json(d);
    AnyDerivation back = derivation_from_json(doc);
    REQUIRE(std::holds_alternative<NcDerivation>(back));
    CHECK(equal(std::get<NcDerivation>(back), d));
    CHECK(to_json(std::get<NcDerivation>(back)) == doc);
  }
}

TEST_CASE("hc round-trip is bit-exact") {
  test::Rng rng(5151);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 25; ++i) {
    HcDerivation h =
        nc_to_hc(test::random_nc(rng, test::random_context(rng, 2, 2, vars), 4, vars));
    std::string doc = to_json(h);
    AnyDerivation back = derivation_from_json(doc);
    REQUIRE(std::holds_alternative<HcDerivation>(back));
    CHECK(equal(std::get<HcDerivation>(back), h));
    CHECK(to_json(std::get<HcDerivation>(back)) == doc);
  }
}

TEST_CASE("gc and gcf round-trips are bit-exact") {
  test::Rng rng(5152);
  auto vars = test::var_pool(3);
  for (int i = 0; i < 25; ++i) {
    GcDerivation g = test::random_gc(rng, 5, vars, rng.flip());
    std::string doc = to_json(g);
    AnyDerivation back = derivation_from_json(doc);
    REQUIRE(std::holds_alternative<GcDerivation>(back));
    CHECK(equal(std::get<GcDerivation>(back), g));
    CHECK(to_json(std::get<GcDerivation>(back)) == doc);

    DecisionResult r = gcf_prove(Sequent{{}, {test::random_formula(rng, 3, vars)}});
    if (!r.proved()) continue;
    std::string doc2 = to_json(*r.proof);
    CHECK(doc2.find("\"calculus\": \"gcf\"") != std::string::npos);
    AnyDerivation back2 = derivation_from_json(doc2);
    REQUIRE(std::holds_alternative<GcfDerivation>(back2));
    CHECK(to_json(std::get<GcfDerivation>(back2)) == doc2);
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(derivation_from_json("not json"), FormatError);
  CHECK_THROWS_AS(derivation_from_json("[]"), FormatError);
  CHECK_THROWS_AS(derivation_from_json(R"({"version":"propkit-derivation/1"})"), FormatError);
  CHECK_THROWS_AS(derivation_from_json(
                      R"({"version":"propkit-derivation/0","calculus":"nc"})"),
                  FormatError);
  CHECK_THROWS_AS(
      derivation_from_json(
          R"({"version":"propkit-derivation/1","calculus":"nc","rule":"Huh","context":[],"formula":"p","premises":[]})"),
      FormatError);
  CHECK_THROWS_AS(
      derivation_from_json(
          R"({"version":"propkit-derivation/1","calculus":"nc","rule":"Nax","index":0,"context":["p -> "],"formula":"p","premises":[]})"),
      FormatError);
}

TEST_CASE("decoded trees still face the checker") {
  // Valid JSON, invalid derivation: Nax pointing at the wrong formula.
  std::string doc =
      R"({"version":"propkit-derivation/1","calculus":"nc","rule":"Nax","index":0,"context":["q"],"formula":"p","premises":[]})";
  AnyDerivation d = derivation_from_json(doc);
  CHECK_THROWS_AS(check_nc(std::get<NcDerivation>(d)), CheckError);
}

TEST_CASE("golden files: the on-disk format stays stable") {
  // Committed documents must load, check, and re-serialize byte-for-byte.
  // If the format changes on purpose, bump the version and regenerate.
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string dir = PROPKIT_TEST_DATA_DIR;

  std::string nc_doc = slurp(dir + "/identity.nc.json");
  AnyDerivation nc = derivation_from_json(nc_doc);
  CHECK(check_nc(std::get<NcDerivation>(nc)) == Judgement{Context{}, parse("p -> p")});
  CHECK(to_json(nc) == nc_doc);

  std::string hc_doc = slurp(dir + "/identity.hc.json");
  AnyDerivation hc = derivation_from_json(hc_doc);
  CHECK(check_hc(std::get<HcDerivation>(hc)) == Judgement{Context{}, parse("p -> p")});
  CHECK(to_json(hc) == hc_doc);

  std::string gc_doc = slurp(dir + "/one_cut.gc.json");
  AnyDerivation gc = derivation_from_json(gc_doc);
  CHECK(check_gc(std::get<GcDerivation>(gc)) == Sequent{{v("p")}, {v("p")}});
  CHECK(to_json(gc) == gc_doc);

  std::string gcf_doc = slurp(dir + "/projection.gcf.json");
  AnyDerivation gcf = derivation_from_json(gcf_doc);
  CHECK(check_gcf(std::get<GcfDerivation>(gcf)) == Sequent{{parse("p & q")}, {v("q")}});
  CHECK(to_json(gcf) == gcf_doc);
}

TEST_CASE("cnf serialization uses literal tokens") {
  CnfFormula c{{Literal::pos(VarName{"p"}), Literal::neg(VarName{"q"})},
               {Literal::bot(), Literal::top()}};
  std::string doc = to_json(c);
  CHECK(doc == "[[\"p\",\"~q\"],[\"bot\",\"top\"]]\n");
  CHECK(cnf_from_json(doc) == c);

  CHECK(literal_from_token("~abc").kind == Literal::Kind::Neg);
  CHECK_THROWS_AS(literal_from_token("~"), FormatError);
  CHECK_THROWS_AS(literal_from_token("2x"), FormatError);
  CHECK_THROWS_AS(cnf_from_json("[\"p\"]"), FormatError);
}
