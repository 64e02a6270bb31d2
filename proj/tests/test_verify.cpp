#include "helpers.hpp"
#include "lexdist/error.hpp"
#include "lexdist/json_io.hpp"
#include "lexdist/verify.hpp"

#include <doctest.h>

#include <set>

using namespace lexdist;
using testing::hf;
using testing::ideal;

namespace {

ShakinIdeal powers(std::size_t n, std::vector<int> p) { return makeShakin(makePiecewiseLex(n, {}), std::move(p)); }

ShakinIdeal pieceX1(std::size_t n, int e, std::vector<int> p = {}) {
  return makeShakin(makePiecewiseLex(n, {{1, minimalize({Monomial(std::vector<int>{e})}, 1)}}), std::move(p));
}

DistractionMatrix generic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return randomDistraction(n, PrimeField(), 4, rng);
}

} // namespace

TEST_CASE("enumeration of small families") {
  auto all = enumerateMonomialIdealsModulo(ideal(1, {"x1^2"}), 2);
  CHECK(all == std::vector<MonomialIdeal>{ideal(1, {"x1^2"}), ideal(1, {"x1"}), MonomialIdeal::unit(1)});
  all = enumerateMonomialIdealsModulo(ideal(2, {"x1", "x2"}), 3);
  CHECK(all == std::vector<MonomialIdeal>{ideal(2, {"x1", "x2"}), MonomialIdeal::unit(2)});
  all = enumerateMonomialIdealsModulo(MonomialIdeal(1), 1);
  CHECK(all == std::vector<MonomialIdeal>{MonomialIdeal(1), ideal(1, {"x1"}), MonomialIdeal::unit(1)});
}

TEST_CASE("enumeration counts match a brute-force count") {
  // counts of up-sets of the standard monomials of degree <= dmax,
  // computed independently by exhaustive search over subsets
  CHECK(enumerateMonomialIdealsModulo(ideal(3, {"x1^2", "x2^2", "x3^3"}), 4).size() == 50);
  CHECK(enumerateMonomialIdealsModulo(ideal(3, {"x1^2", "x2^2", "x3^2"}), 4).size() == 20);
  CHECK(enumerateMonomialIdealsModulo(ideal(2, {"x2^2"}), 4).size() == 20);
  CHECK(enumerateMonomialIdealsModulo(ideal(2, {"x2"}), 4).size() == 6);
  CHECK(enumerateMonomialIdealsModulo(ideal(3, {"x1^2"}), 3).size() == 400);
  CHECK(enumerateMonomialIdealsModulo(ideal(3, {"x1^2"}), 4).size() == 3266);
  CHECK(enumerateMonomialIdealsModulo(ideal(3, {"x1^3"}), 4).size() == 26946);
}

TEST_CASE("enumeration is canonical and duplicate-free") {
  const auto base = ideal(3, {"x1^2", "x2^2", "x3^3"});
  const auto all = enumerateMonomialIdealsModulo(base, 4);
  std::set<std::vector<std::uint64_t>> keys;
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].contains(base));
    CHECK(all[k].maxGeneratorDegree() <= 4);
    keys.insert(canonicalKey(all[k], 4));
    if (k > 0)
      CHECK(canonicalKey(all[k - 1], 4) < canonicalKey(all[k], 4));
  }
  CHECK(keys.size() == all.size());
}

TEST_CASE("enumeration budget") {
  try {
    enumerateMonomialIdealsModulo(ideal(3, {"x1^3"}), 4, 1000);
    FAIL("expected the budget to run out");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("Macaulay-lex checks") {
  auto r = verifyMacaulayLex(powers(2, {2, 3}), 4);
  CHECK(r.passed());
  CHECK(r.casesChecked > 0);
  r = verifyMacaulayLexOver(MonomialIdeal::unit(2), 4);
  CHECK(r.passed());
  CHECK(r.casesChecked == 1);

  // (x2^2) in K[x1, x2] is outside the Shakin class and has attainable
  // functions without a lex witness
  r = verifyMacaulayLexOver(ideal(2, {"x2^2"}), 4);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() == 6);
  CHECK(r.status() == "fail");
  for (const auto& failure : r.failures) {
    const auto i = monomialIdealFromJson(failure.at("ideal"));
    CHECK_FALSE(isAdmissibleHFOver(ideal(2, {"x2^2"}), hilbertFunctionMonomial(i, 4), 4));
  }
}

TEST_CASE("Betti extremality") {
  const auto r = verifyBettiExtremal(pieceX1(3, 2), 3);
  CHECK(r.passed());
  CHECK(r.casesChecked == 400);
  CHECK(toJson(r) == toJson(verifyBettiExtremal(pieceX1(3, 2), 3)));

  // small characteristic with pure powers: violations could only be findings
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto s = verifyBettiExtremal(pieceX1(3, 2, {2}), 3, PrimeField(p));
    CHECK(s.failures.empty());
    CHECK_FALSE(s.notes.empty());
  }
}

TEST_CASE("cohomology extremality") {
  auto r = verifyCohExtremal(pieceX1(3, 2), 3);
  CHECK(r.passed());
  CHECK(r.casesChecked == 400);
  r = verifyCohExtremal(powers(2, {2, 2}), 4);
  CHECK(r.passed());
}

TEST_CASE("distraction checks") {
  auto r = verifyDistractionHF(powers(2, {2, 2}), DistractionMatrix::identity(2, PrimeField()), 4, 20);
  CHECK(r.passed());
  r = verifyDistractionHF(powers(2, {2, 2}), generic(2, 1), 4, 40);
  CHECK(r.passed());
  CHECK(r.casesChecked == 40);
  CHECK(toJson(r) == toJson(verifyDistractionHF(powers(2, {2, 2}), generic(2, 1), 4, 40)));
}

TEST_CASE("epsilon_D") {
  const auto a = powers(2, {2, 2});
  const auto id = DistractionMatrix::identity(2, PrimeField());
  const auto h = hf({1, 1, 0});
  const auto e = epsilonD(a, id, h, 2);
  CHECK(initialIdeal(e, MonomialOrder::degrevlex()) == lexEmbed(a, h, 2));

  const auto d = generic(2, 4);
  const auto full = epsilonD(a, d, hilbertFunctionMonomial(a.total(), 4), 4);
  const auto da = distractIdeal(d, a.total());
  CHECK(isSubideal(full, da));
  CHECK(isSubideal(da, full));

  const auto small = epsilonD(a, d, h, 2);
  const auto expected = distractIdeal(d, ideal(2, {"x1", "x2^2"}));
  CHECK(isSubideal(small, expected));
  CHECK(isSubideal(expected, small));
  CHECK(hilbertFunctionGeneral(small, 2) == h);
  CHECK_THROWS_AS(epsilonD(a, d, hf({1, 3}), 1), Error);
}

TEST_CASE("sampled invariance checks") {
  auto r = verifyBettiDistractionInvariance(3, 30, 7);
  CHECK(r.passed());
  CHECK(r.casesChecked == 30);
  r = verifyCodistraH0(3, 20, 6);
  CHECK(r.passed());
  CHECK(toJson(r) == toJson(verifyCodistraH0(3, 20, 6)));
}

TEST_CASE("extremality of epsilon_D") {
  const auto a = pieceX1(3, 2);
  const auto d = generic(3, 9);
  CHECK(verifyEpsilonDExtremal(a, d, 3, 15, ExtremalMode::Betti).passed());
  CHECK(verifyEpsilonDExtremal(a, d, 3, 15, ExtremalMode::Cohomology).passed());
  const auto rejected = verifyEpsilonDExtremal(pieceX1(3, 2, {2}), d, 3, 5, ExtremalMode::Betti);
  CHECK(rejected.rejected);
  CHECK(rejected.status() == "rejected");
  CHECK(rejected.casesChecked == 0);
}

TEST_CASE("full lex-embedding") {
  const auto base = ideal(2, {"x1^2", "x2^2"});
  const auto w = ideal(2, {"x1*x2", "x1^2", "x2^2"});
  const auto e = fullLexEmbedding(base, w, 2);
  REQUIRE(e.has_value());
  CHECK(hilbertSeriesNumerator(*e) == hilbertSeriesNumerator(w));
}
