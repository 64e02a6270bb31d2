#ifndef LEXDIST_VERIFY_HPP
#define LEXDIST_VERIFY_HPP

#include "lexdist/distraction.hpp"
#include "lexdist/groebner.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/monomial.hpp"
#include "lexdist/shakin.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lexdist {

constexpr long long kDefaultBudget = 1000000;
constexpr std::uint64_t kDefaultSeed = 20240601;

/// Outcome of one theorem check. `failures` are counterexamples, `findings`
/// are violations of statements the theory only conjectures, and a
/// rejected run did not check anything because a hypothesis is missing.
/// Every payload carries enough data to replay the case.
struct VerificationReport {
  std::string theorem;
  nlohmann::json parameters = nlohmann::json::object();
  long long casesChecked = 0;
  std::vector<nlohmann::json> failures;
  std::vector<nlohmann::json> findings;
  std::vector<std::string> notes;
  bool rejected = false;
  double runtimeSeconds = 0;

  bool passed() const { return failures.empty() && !rejected; }
  std::string status() const;
};

/// Every monomial ideal I ⊇ base generated by base and monomials of degree
/// <= dmax, visited once each in canonical order (per-degree membership
/// bitmasks over the descending-lex monomial list, compared
/// lexicographically). Throws BudgetExceeded before visiting more than
/// `budget` ideals.
void forEachMonomialIdealModulo(const MonomialIdeal& base, int dmax, long long budget,
                                const std::function<void(const MonomialIdeal&)>& visit);
std::vector<MonomialIdeal> enumerateMonomialIdealsModulo(const MonomialIdeal& base, int dmax,
                                                         long long budget = kDefaultBudget);
/// Sort key of the canonical enumeration order.
std::vector<std::uint64_t> canonicalKey(const MonomialIdeal& ideal, int dmax);

/// Random monomial ideal with 1..maxGens generators of degree
/// minDegree..maxDegree.
MonomialIdeal randomMonomialIdeal(std::size_t n, int maxDegree, int maxGens, std::mt19937_64& rng,
                                  int minDegree = 1);
/// Random homogeneous polynomial of degree `degree` with at most `terms` terms.
Polynomial randomHomogeneous(std::size_t n, int degree, int terms, const PrimeField& field, std::mt19937_64& rng);

/// The lex-embedding of the Hilbert function of A/witness over `base`, in
/// all degrees: the embedding is computed to increasing degrees from
/// `from` until the generated ideal has the witness's Hilbert series.
std::optional<MonomialIdeal> fullLexEmbedding(const MonomialIdeal& base, const MonomialIdeal& witness, int from,
                                              int extraDegrees = 8);

VerificationReport verifyMacaulayLex(const ShakinIdeal& a, int dmax, long long budget = kDefaultBudget);
/// The same check over an arbitrary monomial base ideal.
VerificationReport verifyMacaulayLexOver(const MonomialIdeal& base, int dmax, long long budget = kDefaultBudget);

/// beta_{ij}(A/I) <= beta_{ij}(A/eps(I)) for j <= dmax + 1.
VerificationReport verifyBettiExtremal(const ShakinIdeal& a, int dmax, PrimeField field = PrimeField(),
                                       long long budget = kDefaultBudget);

VerificationReport verifyCohExtremal(const ShakinIdeal& a, int dmax, std::optional<CohWindow> window = std::nullopt,
                                     PrimeField field = PrimeField(), long long budget = kDefaultBudget);

VerificationReport verifyDistractionHF(const ShakinIdeal& a, const DistractionMatrix& d, int dmax, int samples,
                                       std::uint64_t seed = kDefaultSeed, long long budget = kDefaultBudget);

/// D(L') for the lex-embedding L' of h over a; its quotient Hilbert
/// function is checked against h.
Ideal epsilonD(const ShakinIdeal& a, const DistractionMatrix& d, const HilbertFunction& h, int dmax);

VerificationReport verifyBettiDistractionInvariance(std::size_t n, int samples, int dmax,
                                                    std::uint64_t seed = kDefaultSeed, int maxDegree = 4,
                                                    PrimeField field = PrimeField());

VerificationReport verifyCodistraH0(std::size_t n, int samples, int dmax, std::uint64_t seed = kDefaultSeed,
                                    int maxDegree = 4, PrimeField field = PrimeField());

enum class ExtremalMode { Betti, Cohomology };

VerificationReport verifyEpsilonDExtremal(const ShakinIdeal& a, const DistractionMatrix& d, int dmax, int samples,
                                          ExtremalMode mode, std::uint64_t seed = kDefaultSeed,
                                          long long budget = kDefaultBudget);

} // namespace lexdist

#endif
