#include "lexdist/verify.hpp"

#include "lexdist/error.hpp"
#include "lexdist/grid.hpp"
#include "lexdist/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

namespace lexdist {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  explicit Stopwatch(VerificationReport& report) : mReport(report), mStart(Clock::now()) {}
  ~Stopwatch() { mReport.runtimeSeconds = std::chrono::duration<double>(Clock::now() - mStart).count(); }

private:
  VerificationReport& mReport;
  Clock::time_point mStart;
};

using Key = std::vector<std::uint64_t>;

Key keyOfPieces(const MonomialGrid::Pieces& pieces) {
  Key key;
  for (const auto& piece : pieces) {
    if (piece.size() > 64)
      fail(ErrorKind::BudgetExceeded, "degree pieces with more than 64 monomials are beyond the enumeration range");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (piece[i])
        bits |= std::uint64_t{1} << i;
    key.push_back(bits);
  }
  return key;
}

/// Depth-first enumeration over the grid; `visit` receives the membership
/// pieces and the ideal they generate together with the base.
void enumeratePieces(const MonomialGrid& grid, const MonomialIdeal& base, long long budget,
                     const std::function<void(const MonomialGrid::Pieces&, const MonomialIdeal&)>& visit) {
  const int dmax = grid.dmax();
  const std::size_t n = grid.nvars();
  const auto basePieces = grid.membership(base);
  MonomialGrid::Pieces current(static_cast<std::size_t>(dmax) + 1);
  std::vector<std::vector<Monomial>> chosen(static_cast<std::size_t>(dmax) + 1);
  long long count = 0;

  std::function<void(int)> descend = [&](int d) {
    if (d > dmax) {
      if (++count > budget)
        fail(ErrorKind::BudgetExceeded,
             "enumeration exceeds the budget of " + std::to_string(budget) + " ideals (at least " +
                 std::to_string(count) + " exist)");
      std::vector<Monomial> gens = base.generators();
      for (const auto& level : chosen)
        gens.insert(gens.end(), level.begin(), level.end());
      visit(current, minimalize(std::move(gens), n));
      return;
    }
    const auto ud = static_cast<std::size_t>(d);
    std::vector<char> forced = basePieces[ud];
    if (d > 0)
      for (std::size_t i = 0; i < current[ud - 1].size(); ++i)
        if (current[ud - 1][i])
          for (std::size_t k = 0; k < n; ++k)
            forced[grid.times(d - 1, i, k)] = 1;
    std::vector<std::size_t> freePositions;
    for (std::size_t i = 0; i < forced.size(); ++i)
      if (!forced[i])
        freePositions.push_back(i);
    if (freePositions.size() > 40)
      fail(ErrorKind::BudgetExceeded, "degree " + std::to_string(d) + " alone admits 2^" +
                                          std::to_string(freePositions.size()) + " choices");
    const std::uint64_t limit = std::uint64_t{1} << freePositions.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      current[ud] = forced;
      chosen[ud].clear();
      for (std::size_t b = 0; b < freePositions.size(); ++b)
        if (mask >> b & 1u) {
          current[ud][freePositions[b]] = 1;
          chosen[ud].push_back(grid.degree(d)[freePositions[b]]);
        }
      descend(d + 1);
    }
    chosen[ud].clear();
  };
  descend(0);
}

Json caseError(const Error& e) {
  Json out = {{"error", errorKindName(e.kind())}, {"message", e.what()}};
  if (e.degree() >= 0)
    out["degree"] = e.degree();
  return out;
}

Json baseParameters(std::size_t n, int dmax, const PrimeField& field) {
  return {{"n", n}, {"dmax", dmax}, {"char", field.characteristic()}};
}

MonomialIdeal embedOnGrid(const MonomialGrid& grid, const MonomialGrid::Pieces& basePieces,
                          const MonomialIdeal& base, const HilbertFunction& h) {
  auto pieces = detail::lexEmbedPieces(grid, basePieces, h, grid.dmax());
  std::vector<Monomial> gens = grid.generatedBy(pieces).generators();
  gens.insert(gens.end(), base.generators().begin(), base.generators().end());
  return minimalize(std::move(gens), base.nvars());
}

/// A sample ideal J = D(I) + (extras) with I drawn from `ideals`.
struct Sample {
  MonomialIdeal monomial;
  std::vector<Polynomial> extras;
  Ideal ideal;
};

Sample drawSample(const std::vector<MonomialIdeal>& ideals, const DistractionMatrix& d, int dmax, bool anchor,
                  std::mt19937_64& rng) {
  if (anchor) {
    Ideal j = distractIdeal(d, ideals.front());
    return {ideals.front(), {}, j};
  }
  std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
  const MonomialIdeal& chosen = ideals[pick(rng)];
  std::vector<Polynomial> gens = distractIdeal(d, chosen).generators();
  std::vector<Polynomial> extras;
  const int extraCount = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int e = 0; e < extraCount && dmax >= 1; ++e) {
    const int degree = std::uniform_int_distribution<int>(1, dmax)(rng);
    extras.push_back(randomHomogeneous(d.nvars(), degree, 3, d.field(), rng));
  }
  gens.insert(gens.end(), extras.begin(), extras.end());
  return {chosen, extras, Ideal(d.nvars(), d.field(), std::move(gens))};
}

Json sampleJson(const Sample& s) {
  Json extras = Json::array();
  for (const auto& f : s.extras)
    extras.push_back(toString(f));
  return {{"monomial_ideal", toJson(s.monomial)}, {"extra_generators", extras}, {"ideal", toJson(s.ideal)}};
}

std::vector<long long> asVector(const HilbertFunction& h) { return h.values; }

} // namespace

std::string VerificationReport::status() const {
  if (rejected)
    return "rejected";
  return failures.empty() ? "pass" : "fail";
}

void forEachMonomialIdealModulo(const MonomialIdeal& base, int dmax, long long budget,
                                const std::function<void(const MonomialIdeal&)>& visit) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  MonomialGrid grid(base.nvars(), dmax);
  enumeratePieces(grid, base, budget, [&](const MonomialGrid::Pieces&, const MonomialIdeal& ideal) { visit(ideal); });
}

std::vector<MonomialIdeal> enumerateMonomialIdealsModulo(const MonomialIdeal& base, int dmax, long long budget) {
  std::vector<MonomialIdeal> out;
  forEachMonomialIdealModulo(base, dmax, budget, [&](const MonomialIdeal& ideal) { out.push_back(ideal); });
  return out;
}

std::vector<std::uint64_t> canonicalKey(const MonomialIdeal& ideal, int dmax) {
  MonomialGrid grid(ideal.nvars(), dmax);
  return keyOfPieces(grid.membership(ideal));
}

MonomialIdeal randomMonomialIdeal(std::size_t n, int maxDegree, int maxGens, std::mt19937_64& rng,
                                  int minDegree) {
  if (n == 0 || minDegree < 1 || maxDegree < minDegree || maxGens < 1)
    fail(ErrorKind::InvalidInput, "random ideals need n >= 1, 1 <= minDegree <= maxDegree and maxGens >= 1");
  std::uniform_int_distribution<int> count(1, maxGens), degree(minDegree, maxDegree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int g = 0; g < k; ++g) {
    std::vector<int> e(n, 0);
    const int d = degree(rng);
    for (int u = 0; u < d; ++u)
      ++e[var(rng)];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

Polynomial randomHomogeneous(std::size_t n, int degree, int terms, const PrimeField& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(1, field.characteristic() - 1);
  std::uniform_int_distribution<int> termCount(1, std::max(1, terms));
  while (true) {
    std::vector<Term> out;
    const int k = termCount(rng);
    for (int t = 0; t < k; ++t) {
      std::vector<int> e(n, 0);
      for (int u = 0; u < degree; ++u)
        ++e[var(rng)];
      out.push_back({Monomial(std::move(e)), coeff(rng)});
    }
    Polynomial f(n, field, std::move(out));
    if (!f.isZero())
      return f;
  }
}

std::optional<MonomialIdeal> fullLexEmbedding(const MonomialIdeal& base, const MonomialIdeal& witness, int from,
                                              int extraDegrees) {
  const auto target = hilbertSeriesNumerator(witness);
  for (int k = std::max(from, 0); k <= from + extraDegrees; ++k) {
    MonomialIdeal l = lexEmbedOver(base, hilbertFunctionMonomial(witness, k), k);
    if (hilbertSeriesNumerator(l) == target)
      return l;
  }
  return std::nullopt;
}

VerificationReport verifyMacaulayLexOver(const MonomialIdeal& base, int dmax, long long budget) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = "macaulay-lex";
  report.parameters = baseParameters(base.nvars(), dmax, PrimeField());
  report.parameters["base"] = toJson(base);
  report.parameters["budget"] = budget;
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  MonomialGrid grid(base.nvars(), dmax);
  const auto basePieces = grid.membership(base);
  std::set<Key> enumerated;
  std::vector<std::pair<Key, MonomialIdeal>> embedded;
  enumeratePieces(grid, base, budget, [&](const MonomialGrid::Pieces& pieces, const MonomialIdeal& ideal) {
    ++report.casesChecked;
    enumerated.insert(keyOfPieces(pieces));
    const HilbertFunction h = grid.quotientHilbert(pieces);
    try {
      auto lex = detail::lexEmbedPieces(grid, basePieces, h, dmax);
      int bad = -1;
      bool contained = true;
      for (std::size_t d = 0; d < lex.size(); ++d)
        for (std::size_t i = 0; i < lex[d].size(); ++i)
          contained = contained && (!basePieces[d][i] || lex[d][i]);
      if (!grid.isClosed(lex, &bad) || !contained || grid.quotientHilbert(lex) != h) {
        report.failures.push_back({{"ideal", toJson(ideal)},
                                   {"hilbert", asVector(h)},
                                   {"reason", "embedded pieces are not an ideal over the base with the same Hilbert "
                                              "function"}});
        return;
      }
      embedded.emplace_back(keyOfPieces(lex), ideal);
    } catch (const Error& e) {
      Json payload = {{"ideal", toJson(ideal)}, {"hilbert", asVector(h)}};
      payload.update(caseError(e));
      report.failures.push_back(payload);
    }
  });
  for (const auto& [key, ideal] : embedded)
    if (!enumerated.count(key)) {
      report.failures.push_back(
          {{"ideal", toJson(ideal)}, {"reason", "the embedded ideal is missing from the enumeration"}});
      break;
    }
  return report;
}

VerificationReport verifyMacaulayLex(const ShakinIdeal& a, int dmax, long long budget) {
  VerificationReport report = verifyMacaulayLexOver(a.total(), dmax, budget);
  report.parameters["shakin"] = toJson(a);
  return report;
}

VerificationReport verifyBettiExtremal(const ShakinIdeal& a, int dmax, PrimeField field, long long budget) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = "betti-extremal";
  report.parameters = baseParameters(a.nvars(), dmax, field);
  report.parameters["shakin"] = toJson(a);
  report.parameters["budget"] = budget;
  report.parameters["betti_degrees"] = dmax + 1;
  const bool conjectural = a.hasPowers() && field.characteristic() < kDefaultCharacteristic;
  if (a.hasPowers()) {
    report.notes.push_back("the theorem assumes characteristic 0 or P = 0; P is nonzero here and characteristic " +
                           std::to_string(field.characteristic()) +
                           (conjectural ? " is small, so violations are reported as findings"
                                        : " stands in for characteristic 0"));
  }
  const MonomialIdeal& base = a.total();
  const int top = dmax + 1;
  MonomialGrid topGrid(a.nvars(), top);
  const auto topBase = topGrid.membership(base);
  forEachMonomialIdealModulo(base, dmax, budget, [&](const MonomialIdeal& ideal) {
    ++report.casesChecked;
    const HilbertFunction h = hilbertFunctionMonomial(ideal, top);
    try {
      const MonomialIdeal lex = embedOnGrid(topGrid, topBase, base, h);
      const auto lhs = koszulBetti(ideal, top, field);
      const auto rhs = koszulBetti(lex, top, field);
      Json violations = Json::array();
      for (const auto& [ij, value] : lhs.entries)
        if (value > rhs.at(ij.first, ij.second))
          violations.push_back({{"i", ij.first}, {"j", ij.second}, {"ideal", value},
                                {"embedded", rhs.at(ij.first, ij.second)}});
      if (ideal == lex && lhs != rhs)
        violations.push_back({{"reason", "an embedded ideal does not match its own table"}});
      if (!violations.empty()) {
        Json payload = {{"ideal", toJson(ideal)}, {"embedded", toJson(lex)}, {"violations", violations}};
        (conjectural ? report.findings : report.failures).push_back(payload);
      }
    } catch (const Error& e) {
      Json payload = {{"ideal", toJson(ideal)}, {"hilbert", asVector(h)}};
      payload.update(caseError(e));
      report.failures.push_back(payload);
    }
  });
  return report;
}

VerificationReport verifyCohExtremal(const ShakinIdeal& a, int dmax, std::optional<CohWindow> window,
                                     PrimeField field, long long budget) {
  VerificationReport report;
  Stopwatch watch(report);
  const std::size_t n = a.nvars();
  const CohWindow w = window.value_or(CohWindow{-static_cast<int>(n) - 1, 2 * dmax});
  report.theorem = "coh-extremal";
  report.parameters = baseParameters(n, dmax, field);
  report.parameters["shakin"] = toJson(a);
  report.parameters["window"] = {w.jmin, w.jmax};
  report.parameters["budget"] = budget;
  forEachMonomialIdealModulo(a.total(), dmax, budget, [&](const MonomialIdeal& ideal) {
    ++report.casesChecked;
    try {
      const auto lex = fullLexEmbedding(a.total(), ideal, dmax);
      if (!lex) {
        report.failures.push_back({{"ideal", toJson(ideal)}, {"reason", "the embedding did not stabilize"}});
        return;
      }
      const auto lhs = localCohMonomial(ideal, w, field);
      const auto rhs = localCohMonomial(*lex, w, field);
      Json violations = Json::array();
      for (const auto& [ij, value] : lhs.entries)
        if (value > rhs.at(ij.first, ij.second))
          violations.push_back({{"i", ij.first}, {"j", ij.second}, {"ideal", value},
                                {"embedded", rhs.at(ij.first, ij.second)}});
      if (!violations.empty())
        report.failures.push_back({{"ideal", toJson(ideal)}, {"embedded", toJson(*lex)}, {"violations", violations}});
    } catch (const Error& e) {
      Json payload = {{"ideal", toJson(ideal)}};
      payload.update(caseError(e));
      report.failures.push_back(payload);
    }
  });
  return report;
}

VerificationReport verifyDistractionHF(const ShakinIdeal& a, const DistractionMatrix& d, int dmax, int samples,
                                       std::uint64_t seed, long long budget) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = "distraction-hf";
  report.parameters = baseParameters(a.nvars(), dmax, d.field());
  report.parameters["shakin"] = toJson(a);
  report.parameters["distraction"] = toJson(d);
  report.parameters["samples"] = samples;
  report.parameters["seed"] = seed;
  if (d.nvars() != a.nvars())
    fail(ErrorKind::InvalidInput, "distraction and ring have different variable counts");
  if (!validateDistraction(d).valid)
    fail(ErrorKind::InvalidInput, "the matrix is not a distraction over F_" + std::to_string(d.field().characteristic()));
  const auto ideals = enumerateMonomialIdealsModulo(a.total(), dmax, budget);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Sample sample = drawSample(ideals, d, dmax, s == 0, rng);
    ++report.casesChecked;
    const HilbertFunction h = hilbertFunctionGeneral(sample.ideal, dmax);
    Json payload = sampleJson(sample);
    payload["sample"] = s;
    payload["hilbert"] = asVector(h);
    try {
      const MonomialIdeal lex = lexEmbed(a, h, dmax);
      if (hilbertFunctionGeneral(distractIdeal(d, lex), dmax) != h) {
        payload["reason"] = "the distracted embedding does not realize the Hilbert function";
        report.failures.push_back(payload);
      }
    } catch (const Error& e) {
      payload.update(caseError(e));
      report.failures.push_back(payload);
    }
  }
  return report;
}

Ideal epsilonD(const ShakinIdeal& a, const DistractionMatrix& d, const HilbertFunction& h, int dmax) {
  if (d.nvars() != a.nvars())
    fail(ErrorKind::InvalidInput, "distraction and ring have different variable counts");
  const MonomialIdeal lex = lexEmbed(a, h, dmax);
  Ideal image = distractIdeal(d, lex);
  if (hilbertFunctionGeneral(image, dmax) != h.truncated(dmax))
    fail(ErrorKind::InternalError, "the distracted embedding does not have the requested Hilbert function");
  return image;
}

VerificationReport verifyBettiDistractionInvariance(std::size_t n, int samples, int dmax, std::uint64_t seed,
                                                    int maxDegree, PrimeField field) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = "betti-distraction-invariance";
  report.parameters = baseParameters(n, dmax, field);
  report.parameters["samples"] = samples;
  report.parameters["seed"] = seed;
  report.parameters["max_degree"] = maxDegree;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const MonomialIdeal ideal = randomMonomialIdeal(n, maxDegree, 6, rng, std::min(2, maxDegree));
    int length = 1;
    for (const auto& g : ideal.generators())
      for (std::size_t k = 0; k < n; ++k)
        length = std::max(length, g[k]);
    const DistractionMatrix d = randomDistraction(n, field, static_cast<std::size_t>(length), rng);
    ++report.casesChecked;
    const auto lhs = koszulBetti(ideal, dmax, field);
    const auto rhs = koszulBetti(distractIdeal(d, ideal), dmax);
    if (lhs != rhs)
      report.failures.push_back({{"sample", s},
                                 {"ideal", toJson(ideal)},
                                 {"distraction", toJson(d)},
                                 {"monomial_table", toJson(lhs)},
                                 {"distracted_table", toJson(rhs)}});
  }
  return report;
}

VerificationReport verifyCodistraH0(std::size_t n, int samples, int dmax, std::uint64_t seed, int maxDegree,
                                    PrimeField field) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = "codistra-h0";
  report.parameters = baseParameters(n, dmax, field);
  report.parameters["samples"] = samples;
  report.parameters["seed"] = seed;
  report.parameters["max_degree"] = maxDegree;
  report.notes.push_back("only H^0 is compared; higher local cohomology of distracted ideals is not attempted");
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const MonomialIdeal ideal = randomMonomialIdeal(n, maxDegree, 6, rng, std::min(2, maxDegree));
    int length = 1;
    for (const auto& g : ideal.generators())
      for (std::size_t k = 0; k < n; ++k)
        length = std::max(length, g[k]);
    const DistractionMatrix d = randomDistraction(n, field, static_cast<std::size_t>(length), rng);
    ++report.casesChecked;
    const auto lhs = h0HilbertFunction(Ideal::fromMonomialIdeal(ideal, field), dmax);
    const auto rhs = h0HilbertFunction(distractIdeal(d, ideal), dmax);
    for (int j = 0; j <= dmax; ++j)
      if (lhs[j] > rhs[j]) {
        report.failures.push_back({{"sample", s},
                                   {"ideal", toJson(ideal)},
                                   {"distraction", toJson(d)},
                                   {"degree", j},
                                   {"monomial_h0", asVector(lhs)},
                                   {"distracted_h0", asVector(rhs)}});
        break;
      }
  }
  return report;
}

VerificationReport verifyEpsilonDExtremal(const ShakinIdeal& a, const DistractionMatrix& d, int dmax, int samples,
                                          ExtremalMode mode, std::uint64_t seed, long long budget) {
  VerificationReport report;
  Stopwatch watch(report);
  report.theorem = mode == ExtremalMode::Betti ? "epsilon-d-betti-extremal" : "epsilon-d-coh-extremal";
  report.parameters = baseParameters(a.nvars(), dmax, d.field());
  report.parameters["shakin"] = toJson(a);
  report.parameters["distraction"] = toJson(d);
  report.parameters["samples"] = samples;
  report.parameters["seed"] = seed;
  if (d.nvars() != a.nvars())
    fail(ErrorKind::InvalidInput, "distraction and ring have different variable counts");
  if (!validateDistraction(d).valid)
    fail(ErrorKind::InvalidInput, "the matrix is not a distraction over F_" + std::to_string(d.field().characteristic()));
  if (mode == ExtremalMode::Betti && a.hasPowers()) {
    report.rejected = true;
    report.notes.push_back("hypothesis violated: Betti extremality of the distracted embedding requires P = 0");
    return report;
  }
  if (mode == ExtremalMode::Cohomology)
    report.notes.push_back("H^i for i >= 1 is not attempted for non-monomial ideals; only H^0 is compared");
  else
    report.notes.push_back("Betti numbers of the distracted embedding are taken from its monomial pre-image, which "
                           "has the same table");
  const auto ideals = enumerateMonomialIdealsModulo(a.total(), dmax, budget);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Sample sample = drawSample(ideals, d, dmax, s == 0, rng);
    ++report.casesChecked;
    Json payload = sampleJson(sample);
    payload["sample"] = s;
    try {
      if (mode == ExtremalMode::Betti) {
        const int top = dmax + 1;
        const HilbertFunction h = hilbertFunctionGeneral(sample.ideal, top);
        const MonomialIdeal lex = lexEmbed(a, h, top);
        const auto lhs = koszulBetti(sample.ideal, top);
        const auto rhs = koszulBetti(lex, top, d.field());
        Json violations = Json::array();
        for (const auto& [ij, value] : lhs.entries)
          if (value > rhs.at(ij.first, ij.second))
            violations.push_back({{"i", ij.first}, {"j", ij.second}, {"ideal", value},
                                  {"embedded", rhs.at(ij.first, ij.second)}});
        if (!violations.empty()) {
          payload["embedded"] = toJson(lex);
          payload["violations"] = violations;
          report.failures.push_back(payload);
        }
      } else {
        const MonomialIdeal initial = initialIdeal(sample.ideal, MonomialOrder::degrevlex());
        const auto lex = fullLexEmbedding(a.total(), initial, dmax);
        if (!lex) {
          payload["reason"] = "the embedding did not stabilize";
          report.failures.push_back(payload);
          continue;
        }
        const Ideal image = distractIdeal(d, *lex);
        const auto lhs = h0HilbertFunction(sample.ideal, dmax);
        const auto viaEps = h0HilbertFunction(Ideal::fromMonomialIdeal(*lex, d.field()), dmax);
        const auto viaEpsD = h0HilbertFunction(image, dmax);
        Json violations = Json::array();
        for (int j = 0; j <= dmax; ++j) {
          if (lhs[j] > viaEps[j])
            violations.push_back({{"target", "epsilon"}, {"j", j}, {"ideal", lhs[j]}, {"embedded", viaEps[j]}});
          if (lhs[j] > viaEpsD[j])
            violations.push_back(
                {{"target", "epsilon_d"}, {"j", j}, {"ideal", lhs[j]}, {"embedded", viaEpsD[j]}});
        }
        if (!violations.empty()) {
          payload["embedded"] = toJson(*lex);
          payload["violations"] = violations;
          report.failures.push_back(payload);
        }
      }
    } catch (const Error& e) {
      payload.update(caseError(e));
      report.failures.push_back(payload);
    }
  }
  return report;
}

} // namespace lexdist
