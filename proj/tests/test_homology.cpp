#include "helpers.hpp"
#include "lexdist/error.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/verify.hpp"

#include <doctest.h>

using namespace lexdist;
using testing::hf;
using testing::ideal;
using testing::poly;

namespace {

GradedBettiTable table(std::size_t n, int dmax, std::map<std::pair<int, int>, long long> entries) {
  GradedBettiTable t;
  t.n = n;
  t.dmax = dmax;
  t.entries = std::move(entries);
  return t;
}

} // namespace

TEST_CASE("Koszul Betti numbers") {
  const PrimeField f;
  CHECK(koszulBetti(ideal(2, {"x1", "x2"}), 4, f) == table(2, 4, {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  CHECK(koszulBetti(ideal(2, {"x1^2", "x1*x2", "x2^2"}), 4, f) ==
        table(2, 4, {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  CHECK(koszulBetti(MonomialIdeal(3), 4, f) == table(3, 4, {{{0, 0}, 1}}));
  CHECK(koszulBetti(ideal(3, {"x1*x2", "x2*x3", "x1*x3"}), 4, f) ==
        table(3, 4, {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  // truncation drops degrees above dmax
  CHECK(koszulBetti(ideal(2, {"x1^2", "x1*x2", "x2^2"}), 2, f) == table(2, 2, {{{0, 0}, 1}, {{1, 2}, 3}}));
  const auto t = koszulBetti(ideal(3, {"x1^2", "x2^2"}), 5, f);
  CHECK(t.at(2, 4) == 1);
  CHECK(t.at(1, 2) == 2);
  CHECK(t.at(3, 6) == 0);
}

TEST_CASE("general and monomial paths agree") {
  const PrimeField f;
  const std::vector<Polynomial> gens{poly(3, "x1^2"), poly(3, "x1*x2"), poly(3, "x2*x3^2")};
  const Ideal i(3, f, gens);
  CHECK(koszulBetti(i, 6) == koszulBetti(ideal(3, {"x1^2", "x1*x2", "x2*x3^2"}), 6, f));
  // a complete intersection of two quadrics that is not monomial
  const Ideal ci(2, f, {poly(2, "x1^2 + x2^2"), poly(2, "x1*x2")});
  CHECK(koszulBetti(ci, 5) == table(2, 5, {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
}

TEST_CASE("Taylor oracle") {
  const PrimeField f;
  CHECK(taylorBettiOracle(ideal(2, {"x1^2*x2"}), 4, f) == table(2, 4, {{{0, 0}, 1}, {{1, 3}, 1}}));
  CHECK(taylorBettiOracle(ideal(2, {"x1^2", "x1*x2", "x2^2"}), 4, f) ==
        koszulBetti(ideal(2, {"x1^2", "x1*x2", "x2^2"}), 4, f));
  CHECK(taylorBettiOracle(ideal(3, {"x1*x2", "x2*x3", "x1*x3"}), 4, f) ==
        table(3, 4, {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto i = randomMonomialIdeal(3, 4, 6, rng);
    CHECK(taylorBettiOracle(i, 8, f) == koszulBetti(i, 8, f));
  }
  // the comparison can tell tables apart
  CHECK_FALSE(taylorBettiOracle(ideal(2, {"x1^2"}), 4, f) == koszulBetti(ideal(2, {"x1^3"}), 4, f));
}

TEST_CASE("characteristic-dependent Betti numbers") {
  // Stanley-Reisner ideal of the six-vertex triangulation of the real
  // projective plane: Betti numbers differ in characteristic two
  const auto rp2 = ideal(6, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x5", "x1*x4*x6", "x1*x5*x6", "x2*x3*x6", "x2*x4*x5",
                             "x2*x5*x6", "x3*x4*x5", "x3*x4*x6"});
  const auto t2 = koszulBetti(rp2, 6, PrimeField(2));
  const auto t3 = koszulBetti(rp2, 6, PrimeField(3));
  CHECK_FALSE(t2 == t3);
  CHECK(t2 == taylorBettiOracle(rp2, 6, PrimeField(2)));
}

TEST_CASE("reduced simplicial homology") {
  const PrimeField f;
  const SimplicialComplex triangle{3, {0b011, 0b110, 0b101}};
  CHECK(simplicialReducedHomology(triangle, 1, f) == 1);
  CHECK(simplicialReducedHomology(triangle, 0, f) == 0);
  const SimplicialComplex point{1, {0b1}};
  for (int i = -1; i <= 2; ++i)
    CHECK(simplicialReducedHomology(point, i, f) == 0);
  const SimplicialComplex twoPoints{2, {0b01, 0b10}};
  CHECK(simplicialReducedHomology(twoPoints, 0, f) == 1);
  const SimplicialComplex emptySet{0, {0}};
  CHECK(simplicialReducedHomology(emptySet, -1, f) == 1);
  const SimplicialComplex voidComplex{0, {}};
  CHECK(simplicialReducedHomology(voidComplex, -1, f) == 0);
}

TEST_CASE("local cohomology of Artinian quotients") {
  const PrimeField f;
  const std::vector<MonomialIdeal> artinian{
      ideal(2, {"x1^2", "x2^2"}), ideal(2, {"x1", "x2^3"}), ideal(3, {"x1^2", "x2^2", "x3^2", "x1*x2*x3"}),
      ideal(2, {"x1^3", "x1*x2", "x2^4"}), ideal(1, {"x1^5"})};
  for (const auto& i : artinian) {
    const auto t = localCohMonomial(i, {-4, 6}, f);
    const auto h = hilbertFunctionMonomial(i, 6);
    for (int j = 0; j <= 6; ++j)
      CHECK(t.at(0, j) == h[j]);
    for (const auto& [ij, v] : t.entries)
      CHECK(ij.first == 0);
    CHECK_FALSE(t.unboundedBelow);
    CHECK_FALSE(t.windowTruncated);
  }
}

TEST_CASE("local cohomology of one-dimensional quotients") {
  const PrimeField f;
  auto t = localCohMonomial(ideal(2, {"x1"}), {-5, 3}, f);
  for (int j = -5; j <= 3; ++j) {
    CHECK(t.at(1, j) == (j <= -1 ? 1 : 0));
    CHECK(t.at(0, j) == 0);
  }
  CHECK(t.unboundedBelow);
  CHECK(t.windowTruncated);
  CHECK(t.supportMax == -1);

  t = localCohMonomial(ideal(2, {"x1*x2"}), {-5, 3}, f);
  for (int j = -5; j <= 3; ++j) {
    CHECK(t.at(1, j) == (j <= -1 ? 2 : j == 0 ? 1 : 0));
    CHECK(t.at(0, j) == 0);
  }
  CHECK(t.supportMax == 0);

  // H^0 of (x1^2, x1 x2) is spanned by x1 in degree one
  t = localCohMonomial(ideal(2, {"x1^2", "x1*x2"}), {-3, 3}, f);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(0, 0) == 0);
  CHECK(t.at(1, -1) == 1);

  // the full ring has only top cohomology: dim H^2(K[x,y])_j = -j - 1
  t = localCohMonomial(MonomialIdeal(2), {-6, 2}, f);
  for (int j = -6; j <= 2; ++j)
    CHECK(t.at(2, j) == std::max(0, -j - 1));
}

TEST_CASE("cohomology in degree zero matches the saturation route") {
  const PrimeField f;
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto i = randomMonomialIdeal(3, 4, 5, rng);
    const auto table = localCohMonomial(i, {0, 6}, f);
    const auto h0 = h0HilbertFunction(Ideal::fromMonomialIdeal(i, f), 6);
    for (int j = 0; j <= 6; ++j)
      CHECK(table.at(0, j) == h0[j]);
  }
}

TEST_CASE("default window") {
  const auto w = defaultCohWindow(ideal(2, {"x1^2", "x1*x2"}), 5);
  CHECK(w.jmin == -4);
  CHECK(w.jmax == 5);
  CHECK_THROWS_AS(localCohMonomial(ideal(2, {"x1"}), {3, 1}), Error);
}
