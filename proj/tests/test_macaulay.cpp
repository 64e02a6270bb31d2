#include "helpers.hpp"
#include "lexdist/error.hpp"
#include "lexdist/macaulay.hpp"
#include "lexdist/verify.hpp"

#include <doctest.h>

using namespace lexdist;
using testing::hf;
using testing::ideal;
using testing::mono;

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Macaulay representation") {
  CHECK(macaulayRep(0, 3).terms.empty());
  auto r = macaulayRep(5, 2);
  CHECK(r.terms == std::vector<std::pair<long long, int>>{{3, 2}, {2, 1}});
  CHECK(r.value() == 5);
  r = macaulayRep(4, 2);
  CHECK(r.terms == std::vector<std::pair<long long, int>>{{3, 2}, {1, 1}});
  for (int a = 0; a < 200; ++a)
    for (int d = 1; d < 6; ++d)
      CHECK(macaulayRep(a, d).value() == a);
}

TEST_CASE("Macaulay bound") {
  CHECK(macaulayBound(0, 3) == 0);
  CHECK(macaulayBound(3, 1) == 6);
  CHECK(macaulayBound(5, 2) == 7);
  CHECK(macaulayBound(2, 1) == 3);
}

TEST_CASE("O-sequences") {
  CHECK(isOSequence(hf({1, 3, 6}), 3));
  int bad = -1;
  CHECK_FALSE(isOSequence(hf({1, 2, 5}), 2, &bad));
  CHECK(bad == 2);
  CHECK_FALSE(isOSequence(hf({1, 0, 1}), 2, &bad));
  CHECK(bad == 2);
  CHECK_FALSE(isOSequence(hf({1, 3}), 2, &bad));
  CHECK(bad == 1);
  CHECK_FALSE(isOSequence(hf({2, 1}), 2, &bad));
  CHECK(bad == 0);
}

TEST_CASE("lex segments") {
  CHECK(lexSegment(2, 2, 2) == std::vector<Monomial>{mono(2, "x1^2"), mono(2, "x1*x2")});
  CHECK(lexSegment(2, 2, 0).empty());
  CHECK(lexSegment(3, 1, 2) == std::vector<Monomial>{mono(3, "x1"), mono(3, "x2")});
}

TEST_CASE("lex ideal for a Hilbert function") {
  CHECK(lexIdealForHF(3, hf({1, 3, 6, 10})).isZero());
  CHECK(lexIdealForHF(2, hf({1, 2, 2, 0})) == ideal(2, {"x1^2", "x1*x2^2", "x2^3"}));
  try {
    lexIdealForHF(2, hf({1, 3, 4}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchIdeal);
    CHECK(e.degree() == 1);
  }
  CHECK_THROWS_AS(lexIdealForHF(2, hf({1, 2, 4})), Error);
}

TEST_CASE("lex ideal round trip on random ideals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto i = randomMonomialIdeal(3, 5, 5, rng);
    const auto h = hilbertFunctionMonomial(i, 6);
    const auto l = lexIdealForHF(3, h);
    CHECK(hilbertFunctionMonomial(l, 6) == h);
  }
}
