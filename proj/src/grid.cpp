#include "lexdist/grid.hpp"

#include "lexdist/error.hpp"

namespace lexdist {

MonomialGrid::MonomialGrid(std::size_t n, int dmax) : mN(n), mDmax(dmax) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  for (int d = 0; d <= dmax; ++d) {
    mMonomials.push_back(monomialsOfDegree(n, d));
    auto& index = mIndex.emplace_back();
    const auto& mons = mMonomials.back();
    for (std::size_t i = 0; i < mons.size(); ++i)
      index.emplace(mons[i], i);
  }
  for (int d = 0; d < dmax; ++d) {
    const auto& mons = mMonomials[static_cast<std::size_t>(d)];
    auto& up = mUp.emplace_back(mons.size() * n);
    for (std::size_t i = 0; i < mons.size(); ++i)
      for (std::size_t k = 0; k < n; ++k)
        up[i * n + k] = mIndex[static_cast<std::size_t>(d) + 1].at(mons[i] * Monomial::variable(n, k));
  }
}

std::size_t MonomialGrid::index(const Monomial& m) const {
  if (m.nvars() != mN || m.degree() > mDmax)
    fail(ErrorKind::InvalidInput, "monomial outside the grid");
  return mIndex[static_cast<std::size_t>(m.degree())].at(m);
}

MonomialGrid::Pieces MonomialGrid::membership(const MonomialIdeal& ideal) const {
  if (ideal.nvars() != mN)
    fail(ErrorKind::InvalidInput, "ideal variable count does not match the grid");
  Pieces pieces;
  for (int d = 0; d <= mDmax; ++d)
    pieces.emplace_back(degree(d).size(), 0);
  for (const auto& g : ideal.generators())
    if (g.degree() <= mDmax)
      pieces[static_cast<std::size_t>(g.degree())][index(g)] = 1;
  for (int d = 0; d < mDmax; ++d) {
    const auto& cur = pieces[static_cast<std::size_t>(d)];
    auto& next = pieces[static_cast<std::size_t>(d) + 1];
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i])
        for (std::size_t k = 0; k < mN; ++k)
          next[times(d, i, k)] = 1;
  }
  return pieces;
}

MonomialIdeal MonomialGrid::generatedBy(const Pieces& pieces) const {
  std::vector<Monomial> gens;
  for (int d = 0; d <= mDmax && d < static_cast<int>(pieces.size()); ++d)
    for (std::size_t i = 0; i < pieces[static_cast<std::size_t>(d)].size(); ++i)
      if (pieces[static_cast<std::size_t>(d)][i])
        gens.push_back(degree(d)[i]);
  return minimalize(std::move(gens), mN);
}

HilbertFunction MonomialGrid::quotientHilbert(const Pieces& pieces) const {
  std::vector<long long> values;
  for (const auto& piece : pieces) {
    long long zeros = 0;
    for (char c : piece)
      zeros += c ? 0 : 1;
    values.push_back(zeros);
  }
  return HilbertFunction(std::move(values));
}

bool MonomialGrid::isClosed(const Pieces& pieces, int* firstFailure) const {
  for (int d = 0; d + 1 < static_cast<int>(pieces.size()); ++d) {
    const auto& cur = pieces[static_cast<std::size_t>(d)];
    const auto& next = pieces[static_cast<std::size_t>(d) + 1];
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i])
        for (std::size_t k = 0; k < mN; ++k)
          if (!next[times(d, i, k)]) {
            if (firstFailure)
              *firstFailure = d + 1;
            return false;
          }
  }
  return true;
}

} // namespace lexdist
