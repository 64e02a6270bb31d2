#include "helpers.hpp"
#include "lexdist/error.hpp"
#include "lexdist/groebner.hpp"

#include <doctest.h>

#include <thread>

using namespace lexdist;
using testing::hf;
using testing::ideal;
using testing::mono;
using testing::poly;

namespace {

Ideal gens(std::size_t n, std::initializer_list<const char*> polys, PrimeField field = PrimeField()) {
  std::vector<Polynomial> out;
  for (const char* p : polys)
    out.push_back(poly(n, p, field));
  return Ideal(n, field, out);
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  const auto f = poly(2, "x1 + x2"), g = poly(2, "x1 - x2");
  CHECK(f * g == poly(2, "x1^2 - x2^2"));
  CHECK((f - f).isZero());
  CHECK(f.degree() == 1);
  CHECK_FALSE(poly(2, "x1^2 + x2").isHomogeneous());
  CHECK(poly(2, "2*x1 + 32003*x2", PrimeField(32003)) == poly(2, "2*x1"));
  CHECK(toString(poly(2, "x1^2 - 3*x1*x2")) == "x1^2 - 3*x1*x2");
  CHECK(poly(2, "x1*x2").substitute({poly(2, "x1 + x2"), poly(2, "x2")}) == poly(2, "x1*x2 + x2^2"));
  CHECK_THROWS_AS(poly(2, "x1 +"), Error);
}

TEST_CASE("normal form") {
  const auto lex = MonomialOrder::lex();
  const std::vector<Polynomial> g{poly(2, "x1^2 - x2^2"), poly(2, "x1*x2")};
  // x1^2 x2 -> x2^3 by the first divisor
  CHECK(normalForm(poly(2, "x1^2*x2"), g, lex) == poly(2, "x2^3"));
  CHECK(normalForm(poly(2, "x1*x2^5"), g, lex).isZero());
  CHECK(normalForm(poly(2, "x2^2"), g, lex) == poly(2, "x2^2"));
}

TEST_CASE("reduced Groebner bases") {
  const auto lex = MonomialOrder::lex();
  const auto m = gens(2, {"x1*x2", "x1^2", "x1^2*x2"});
  CHECK(buchberger(m, lex) == std::vector<Polynomial>{poly(2, "x1*x2"), poly(2, "x1^2")});
  CHECK(buchberger(gens(2, {"3*x1^2 + x2^2"}), lex) == std::vector<Polynomial>{poly(2, "x1^2 + 10668*x2^2")});
  const auto i = gens(2, {"x1^2 - x2^2", "x1*x2"});
  CHECK(buchberger(i, lex) == std::vector<Polynomial>{poly(2, "x2^3"), poly(2, "x1*x2"), poly(2, "x1^2 - x2^2")});
  CHECK(i.groebnerBasis(lex) == buchberger(i, lex));
  CHECK(initialIdeal(i, lex) == ideal(2, {"x1*x2", "x1^2", "x2^3"}));
  CHECK(initialIdeal(gens(2, {"x1^2 - x2^2"}), lex) == ideal(2, {"x1^2"}));
  CHECK(initialIdeal(m, lex) == ideal(2, {"x1*x2", "x1^2"}));
}

TEST_CASE("concurrent basis requests agree") {
  const auto i = gens(3, {"x1^2 + x2*x3", "x2^2 - x1*x3", "x3^3 + x1*x2*x3"});
  std::vector<std::vector<Polynomial>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = i.groebnerBasis(MonomialOrder::degrevlex()); });
  for (auto& t : threads)
    t.join();
  for (const auto& r : results)
    CHECK(r == buchberger(i, MonomialOrder::degrevlex()));
}

TEST_CASE("homogeneity is enforced") {
  CHECK_THROWS_AS(gens(2, {"x1^2 + x2"}), Error);
  CHECK_THROWS_AS(Ideal(2, PrimeField(), {poly(3, "x1")}), Error);
  CHECK_THROWS_AS(PrimeField(32004), Error);
}

TEST_CASE("initial forms") {
  CHECK(initialForm(poly(2, "x1 + x2"), {1, 0}) == poly(2, "x1"));
  CHECK(initialForm(poly(2, "x1*x2 + x2^2"), {1, 0}) == poly(2, "x1*x2"));
  const auto in = initialFormsIdeal(gens(2, {"x1 + x2"}), {1, 0});
  CHECK(initialIdeal(in, MonomialOrder::degrevlex()) == ideal(2, {"x1"}));
  const auto w = initialFormsIdeal(gens(3, {"x1*x3 + x2*x3 + x3^2"}), {1, 1, 0});
  CHECK(isSubideal(w, gens(3, {"x1*x3 + x2*x3"})));
  CHECK(isSubideal(gens(3, {"x1*x3 + x2*x3"}), w));
}

TEST_CASE("Hilbert functions of general ideals") {
  CHECK(hilbertFunctionGeneral(Ideal(2, PrimeField(), {}), 4) == hf({1, 2, 3, 4, 5}));
  CHECK(hilbertFunctionGeneral(gens(2, {"x1^2 + x1*x2"}), 4) == hf({1, 2, 2, 2, 2}));
  CHECK(hilbertFunctionGeneral(gens(2, {"x1^2 - x2^2", "x1*x2"}), 4) == hf({1, 2, 1, 0, 0}));
}

TEST_CASE("membership, sums and intersections") {
  const auto i = gens(2, {"x1^2 - x2^2", "x1*x2"});
  CHECK(idealContains(i, poly(2, "x2^3")));
  CHECK_FALSE(idealContains(i, poly(2, "x2^2")));
  CHECK(isSubideal(gens(2, {"x2^3"}), i));
  CHECK_FALSE(isSubideal(i, gens(2, {"x2^3"})));
  const auto s = idealSum(gens(2, {"x1"}), gens(2, {"x2^2"}));
  CHECK(initialIdeal(s, MonomialOrder::degrevlex()) == ideal(2, {"x1", "x2^2"}));
  const auto x = intersect(gens(2, {"x1"}), gens(2, {"x2"}));
  CHECK(initialIdeal(x, MonomialOrder::degrevlex()) == ideal(2, {"x1*x2"}));
  const auto y = intersect(gens(2, {"x1 + x2"}), gens(2, {"x1^2", "x2^2"}));
  // only x1^2 - x2^2 in degree two; everything of degree >= 3 divisible by x1 + x2
  CHECK(hilbertFunctionGeneral(y, 4) == hf({1, 2, 2, 1, 1}));
}

TEST_CASE("colon and saturation") {
  const auto i = gens(2, {"x1^2", "x1*x2"});
  auto c = colonByVariable(i, 1);
  CHECK(initialIdeal(c, MonomialOrder::degrevlex()) == ideal(2, {"x1"}));
  auto sat = saturateMaximal(i);
  CHECK(initialIdeal(sat, MonomialOrder::degrevlex()) == ideal(2, {"x1"}));
  const auto saturated = gens(2, {"x1 + x2"});
  CHECK(isSubideal(saturateMaximal(saturated), saturated));
  sat = saturateMaximal(gens(2, {"x1^2", "x2^3"}));
  CHECK(initialIdeal(sat, MonomialOrder::degrevlex()).isUnit());
  // non-monomial: (x1 + x2) * (x1, x2) saturates to (x1 + x2)
  sat = saturateMaximal(gens(2, {"x1^2 + x1*x2", "x1*x2 + x2^2"}));
  CHECK(isSubideal(sat, saturated));
  CHECK(isSubideal(saturated, sat));
  CHECK(initialIdeal(saturateByVariable(gens(2, {"x1^2*x2"}), 1), MonomialOrder::degrevlex()) == ideal(2, {"x1^2"}));
}

TEST_CASE("local cohomology in degree zero") {
  CHECK(h0HilbertFunction(gens(2, {"x1^2", "x1*x2"}), 4) == hf({0, 1, 0, 0, 0}));
  CHECK(h0HilbertFunction(gens(2, {"x1"}), 4) == hf({0, 0, 0, 0, 0}));
  CHECK(h0HilbertFunction(gens(2, {"x1^2", "x2^2"}), 3) == hf({1, 2, 1, 0}));
}

TEST_CASE("linear changes of coordinates") {
  const PrimeField f;
  const auto i = gens(2, {"x1^2"});
  CHECK(applyLinearChange(LinearChange::identity(2), i).generators() == i.generators());
  LinearChange swap{{{0, 1}, {1, 0}}};
  CHECK(applyLinearChange(swap, i).generators().front() == poly(2, "x2^2"));
  LinearChange shear{{{1, 0}, {1, 1}}};
  CHECK(applyLinearChange(shear, poly(2, "x2^2")) == poly(2, "x1^2 + 2*x1*x2 + x2^2"));
  CHECK(isInvertible(shear, f));
  LinearChange singular{{{1, 1}, {1, 1}}};
  CHECK_FALSE(isInvertible(singular, f));
  CHECK_THROWS_AS(applyLinearChange(singular, i), Error);
}
