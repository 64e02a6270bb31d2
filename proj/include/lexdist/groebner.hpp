#ifndef LEXDIST_GROEBNER_HPP
#define LEXDIST_GROEBNER_HPP

#include "lexdist/monomial.hpp"
#include "lexdist/polynomial.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace lexdist {

/// Homogeneous ideal of K[x_1..x_n] over a prime field. Reduced Groebner
/// bases are computed on first request per order and shared read-only by
/// all copies of the ideal.
class Ideal {
public:
  Ideal(std::size_t n, PrimeField field, std::vector<Polynomial> generators);

  static Ideal fromMonomialIdeal(const MonomialIdeal& ideal, PrimeField field);

  std::size_t nvars() const { return mN; }
  const PrimeField& field() const { return mField; }
  const std::vector<Polynomial>& generators() const { return mGens; }

  /// Reduced Groebner basis for `order`, sorted by ascending leading monomial.
  const std::vector<Polynomial>& groebnerBasis(const MonomialOrder& order) const;

private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> entries;
  };

  std::size_t mN;
  PrimeField mField;
  std::vector<Polynomial> mGens;
  std::shared_ptr<Cache> mCache;
};

/// Remainder of full multivariate division of f by G.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

/// Reduced Groebner basis (normal selection strategy, Buchberger's two
/// criteria); identical input and order always give the identical basis.
std::vector<Polynomial> buchberger(const Ideal& ideal, const MonomialOrder& order);

MonomialIdeal initialIdeal(const Ideal& ideal, const MonomialOrder& order);

/// The ideal of weight-initial forms in_w(I), read off a Groebner basis for
/// the weight order refined by degrevlex.
Ideal initialFormsIdeal(const Ideal& ideal, const std::vector<long long>& weight);
/// Sum of the terms of f of maximal weight.
Polynomial initialForm(const Polynomial& f, const std::vector<long long>& weight);

/// Hilbert function of A/I through the degrevlex initial ideal.
HilbertFunction hilbertFunctionGeneral(const Ideal& ideal, int dmax);

bool idealContains(const Ideal& ideal, const Polynomial& f);
/// a ⊆ b.
bool isSubideal(const Ideal& a, const Ideal& b);
Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : x_i) and (I : x_i^infinity), 0-based variable index.
Ideal colonByVariable(const Ideal& ideal, std::size_t i);
Ideal saturateByVariable(const Ideal& ideal, std::size_t i);
/// (I : m^infinity) as the intersection of the per-variable saturations.
Ideal saturateMaximal(const Ideal& ideal);

/// Hilbert function of H^0_m(A/I), i.e. HF(A/I) - HF(A/sat I), up to dmax.
HilbertFunction h0HilbertFunction(const Ideal& ideal, int dmax);

/// Invertible linear change of coordinates: x_j -> sum_k matrix[j][k] x_k.
struct LinearChange {
  std::vector<std::vector<Coeff>> matrix;

  static LinearChange identity(std::size_t n);
};

bool isInvertible(const LinearChange& g, const PrimeField& field);
Polynomial applyLinearChange(const LinearChange& g, const Polynomial& f);
Ideal applyLinearChange(const LinearChange& g, const Ideal& ideal);

namespace detail {

/// Reduced Groebner basis of an arbitrary (not necessarily homogeneous)
/// generating set.
std::vector<Polynomial> reducedGroebnerBasis(std::vector<Polynomial> gens, const MonomialOrder& order);

} // namespace detail

} // namespace lexdist

#endif
