// Acceptance run: one line per criterion with its time limit.

#include "lexdist/distraction.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/macaulay.hpp"
#include "lexdist/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace lexdist;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, double limitSeconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool inTime = seconds <= limitSeconds;
  const bool ok = o.ok && inTime;
  if (!ok)
    ++failures;
  std::printf("criterion %2d: %s  %s  [%.2f s, limit %.0f s%s]\n", number, ok ? "PASS" : "FAIL", o.detail.c_str(),
              seconds, limitSeconds, inTime ? "" : ", over time");
  std::fflush(stdout);
}

ShakinIdeal shakin(std::size_t n, std::vector<LexPiece> pieces, std::vector<int> powers) {
  return makeShakin(makePiecewiseLex(n, std::move(pieces)), std::move(powers));
}

MonomialIdeal x1Power(int e) { return minimalize({Monomial(std::vector<int>{e})}, 1); }

std::string summary(const VerificationReport& r) {
  return r.theorem + " " + r.status() + ", " + std::to_string(r.casesChecked) + " cases, " +
         std::to_string(r.failures.size()) + " failures, " + std::to_string(r.findings.size()) + " findings";
}

MonomialIdeal monomials(std::size_t n, std::initializer_list<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens)
    ms.emplace_back(g);
  return minimalize(ms, n);
}

} // namespace

int main() {
  const PrimeField field;

  criterion(1, 10, [] {
    std::mt19937_64 rng(kDefaultSeed);
    int good = 0;
    const int total = 500;
    for (int t = 0; t < total; ++t) {
      const auto i = randomMonomialIdeal(3, 6, 6, rng);
      const auto h = hilbertFunctionMonomial(i, 6);
      if (hilbertFunctionMonomial(lexIdealForHF(3, h), 6) == h)
        ++good;
    }
    return Outcome{good == total, "lex round trip " + std::to_string(good) + "/" + std::to_string(total)};
  });

  const std::vector<std::pair<std::string, ShakinIdeal>> rings{
      {"(x1^2)+(x2^2,x3^3)", shakin(3, {{1, x1Power(2)}}, {2, 2, 3})},
      {"(x1^3) piecewise-lex", shakin(3, {{1, x1Power(3)}}, {})},
      {"(x1^2,x2^2,x3^2)", shakin(3, {}, {2, 2, 2})},
  };
  for (const auto& [name, a] : rings)
    criterion(2, 60, [&, name = name] {
      const auto r = verifyMacaulayLex(a, 4);
      return Outcome{r.passed() && r.casesChecked > 0, name + ": " + summary(r)};
    });

  criterion(3, 300, [&] {
    const auto r = verifyBettiExtremal(shakin(3, {{1, x1Power(2)}}, {}), 4, field);
    return Outcome{r.passed() && r.casesChecked > 0, summary(r)};
  });

  criterion(4, 120, [&] {
    const auto r = verifyBettiDistractionInvariance(3, 100, 12, kDefaultSeed, 4, field);
    return Outcome{r.passed() && r.casesChecked == 100, summary(r)};
  });

  criterion(5, 60, [&] {
    std::mt19937_64 rng(kDefaultSeed + 5);
    int equal = 0;
    const int total = 200;
    for (int t = 0; t < total; ++t) {
      const auto i = randomMonomialIdeal(3, 4, 6, rng);
      const auto d = randomDistraction(3, field, 5, rng);
      if (hilbertFunctionGeneral(distractIdeal(d, i), 8) == hilbertFunctionMonomial(i, 8))
        ++equal;
    }
    return Outcome{equal == total, "Hilbert function preserved " + std::to_string(equal) + "/" + std::to_string(total)};
  });

  criterion(6, 180, [&] {
    const auto a = shakin(3, {}, {2, 3});
    std::mt19937_64 rng(kDefaultSeed + 6);
    const auto d = randomDistraction(3, field, 5, rng);
    const auto r = verifyDistractionHF(a, d, 4, 100, kDefaultSeed);
    return Outcome{r.passed() && r.casesChecked == 100, summary(r)};
  });

  criterion(7, 180, [&] {
    const auto r = verifyCodistraH0(3, 100, 6, kDefaultSeed, 4, field);
    return Outcome{r.passed() && r.casesChecked == 100, summary(r)};
  });

  criterion(8, 10, [&] {
    const std::vector<MonomialIdeal> artinian{
        monomials(2, {{2, 0}, {0, 2}}), monomials(2, {{1, 0}, {0, 3}}),
        monomials(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}}), monomials(2, {{3, 0}, {1, 1}, {0, 4}}),
        monomials(1, {{5}})};
    int matched = 0;
    for (const auto& i : artinian) {
      const auto t = localCohMonomial(i, {-6, 8}, field);
      const auto h = hilbertFunctionMonomial(i, 8);
      bool ok = !t.unboundedBelow && !t.windowTruncated;
      for (int j = -6; j <= 8; ++j)
        ok = ok && t.at(0, j) == (j < 0 ? 0 : h[j]);
      for (const auto& [ij, v] : t.entries)
        ok = ok && ij.first == 0;
      matched += ok;
    }
    bool line = true, hyper = true;
    const auto tl = localCohMonomial(monomials(2, {{1, 0}}), {-8, 4}, field);
    const auto th = localCohMonomial(monomials(2, {{1, 1}}), {-8, 4}, field);
    for (int j = -8; j <= 4; ++j) {
      line = line && tl.at(1, j) == (j <= -1 ? 1 : 0) && tl.at(0, j) == 0;
      hyper = hyper && th.at(1, j) == (j <= -1 ? 2 : j == 0 ? 1 : 0) && th.at(0, j) == 0;
    }
    return Outcome{matched == 5 && line && hyper, "Artinian " + std::to_string(matched) + "/5, K[y] row " +
                                                      (line ? "ok" : "wrong") + ", (xy) row " +
                                                      (hyper ? "ok" : "wrong")};
  });

  criterion(9, 120, [&] {
    long long cases = 0, agree = 0;
    forEachMonomialIdealModulo(MonomialIdeal(2), 4, kDefaultBudget, [&](const MonomialIdeal& i) {
      ++cases;
      agree += koszulBetti(i, 8, field) == taylorBettiOracle(i, 8, field);
    });
    std::mt19937_64 rng(kDefaultSeed + 9);
    for (int t = 0; t < 100; ++t) {
      const auto i = randomMonomialIdeal(3, 4, 6, rng);
      ++cases;
      agree += koszulBetti(i, 12, field) == taylorBettiOracle(i, 12, field);
    }
    return Outcome{agree == cases, "Koszul = Taylor on " + std::to_string(agree) + "/" + std::to_string(cases)};
  });

  criterion(10, 60, [&] {
    std::mt19937_64 rng(kDefaultSeed + 10);
    int equal = 0;
    const int total = 100;
    for (int t = 0; t < total; ++t) {
      const auto i = randomMonomialIdeal(3, 4, 6, rng);
      const auto p = polarize(i, field);
      int r = 0;
      for (int v : p.r)
        r += v;
      if (hilbertFunctionMonomial(p.polarizedIdeal, 6) == seriesTransform(hilbertFunctionMonomial(i, 6), -r))
        ++equal;
    }
    return Outcome{equal == total, "series identity " + std::to_string(equal) + "/" + std::to_string(total)};
  });

  criterion(11, 900, [&] {
    const auto a = shakin(3, {{1, x1Power(2)}}, {2});
    std::string detail;
    bool classified = true;
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto r = verifyBettiExtremal(a, 4, PrimeField(p));
      classified = classified && r.failures.empty() && r.casesChecked > 0;
      detail += "p=" + std::to_string(p) + ": " + std::to_string(r.casesChecked) + " cases, " +
                std::to_string(r.findings.size()) + " findings; ";
    }
    return Outcome{classified, detail + "violations reported as findings"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
