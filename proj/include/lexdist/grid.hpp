#ifndef LEXDIST_GRID_HPP
#define LEXDIST_GRID_HPP

#include "lexdist/monomial.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace lexdist {

/// Precomputed table of all monomials of degree <= dmax in n variables,
/// indexed per degree in descending lex order, with the multiplication by
/// each variable resolved to indices. Graded pieces of monomial ideals are
/// handled as per-degree membership flags over this table.
class MonomialGrid {
public:
  using Pieces = std::vector<std::vector<char>>;

  MonomialGrid(std::size_t n, int dmax);

  std::size_t nvars() const { return mN; }
  int dmax() const { return mDmax; }
  const std::vector<Monomial>& degree(int d) const { return mMonomials[static_cast<std::size_t>(d)]; }
  std::size_t index(const Monomial& m) const;
  /// Index of x_k * m in degree d+1, where m has index idx in degree d < dmax.
  std::size_t times(int d, std::size_t idx, std::size_t k) const {
    return mUp[static_cast<std::size_t>(d)][idx * mN + k];
  }

  /// Degree-by-degree membership flags of the ideal up to dmax.
  Pieces membership(const MonomialIdeal& ideal) const;
  /// Minimal generators of the ideal generated by the flagged monomials.
  MonomialIdeal generatedBy(const Pieces& pieces) const;
  /// Quotient Hilbert function of the flagged pieces.
  HilbertFunction quotientHilbert(const Pieces& pieces) const;
  /// True when x_k * (flagged degree d) is flagged in degree d+1 for all d < dmax.
  bool isClosed(const Pieces& pieces, int* firstFailure = nullptr) const;

private:
  std::size_t mN;
  int mDmax;
  std::vector<std::vector<Monomial>> mMonomials;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> mIndex;
  std::vector<std::vector<std::size_t>> mUp;
};

} // namespace lexdist

#endif
