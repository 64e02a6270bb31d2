#include "lexdist/shakin.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <string>

namespace lexdist {

bool isLexSegment(const MonomialIdeal& ideal) {
  if (ideal.isZero())
    return true;
  const int top = ideal.maxGeneratorDegree() + 1;
  for (int d = 0; d <= top; ++d) {
    bool seenOutside = false;
    for (const auto& m : monomialsOfDegree(ideal.nvars(), d)) {
      const bool inside = ideal.contains(m);
      if (inside && seenOutside)
        return false;
      seenOutside = seenOutside || !inside;
    }
  }
  return true;
}

PiecewiseLexIdeal makePiecewiseLex(std::size_t n, std::vector<LexPiece> pieces) {
  PiecewiseLexIdeal result(n);
  std::vector<Monomial> gens;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto& piece = pieces[p];
    const std::string label = "piece " + std::to_string(p) + " (i=" + std::to_string(piece.vars) + ")";
    if (piece.vars < 1 || piece.vars > n)
      fail(ErrorKind::InvalidInput, label + " names a subring outside 1..n");
    if (piece.ideal.nvars() != piece.vars)
      fail(ErrorKind::InvalidInput, label + " does not live in its declared subring");
    if (!isLexSegment(piece.ideal))
      fail(ErrorKind::NotLex, label + " is not a lex-segment ideal " + toString(piece.ideal));
    for (const auto& g : piece.ideal.generators())
      gens.push_back(g.resized(n));
  }
  result.mPieces = std::move(pieces);
  result.mTotal = minimalize(std::move(gens), n);
  return result;
}

ShakinIdeal makeShakin(PiecewiseLexIdeal lexPart, std::vector<int> powerDegrees) {
  const std::size_t n = lexPart.nvars();
  if (powerDegrees.size() > n)
    fail(ErrorKind::InvalidInput, "more pure powers than variables");
  for (std::size_t i = 0; i < powerDegrees.size(); ++i) {
    if (powerDegrees[i] < 1)
      fail(ErrorKind::InvalidInput, "pure power degrees must be positive");
    if (i > 0 && powerDegrees[i] < powerDegrees[i - 1])
      fail(ErrorKind::InvalidInput, "pure power degrees must be nondecreasing");
  }
  ShakinIdeal result;
  std::vector<Monomial> gens = lexPart.total().generators();
  for (std::size_t i = 0; i < powerDegrees.size(); ++i)
    gens.push_back(Monomial::variable(n, i, powerDegrees[i]));
  result.mTotal = minimalize(std::move(gens), n);
  result.mLex = std::move(lexPart);
  result.mPowers = std::move(powerDegrees);
  return result;
}

namespace detail {

MonomialGrid::Pieces lexEmbedPieces(const MonomialGrid& grid, const MonomialGrid::Pieces& base,
                                    const HilbertFunction& h, int dmax) {
  if (dmax < 0 || dmax > grid.dmax())
    fail(ErrorKind::InvalidInput, "dmax outside the grid");
  if (h.dmax() < dmax)
    fail(ErrorKind::InvalidInput, "Hilbert function is shorter than dmax");
  if (h[0] > 1 || h[0] < 0)
    fail(ErrorKind::InvalidInput, "a quotient Hilbert function has H_0 in {0, 1}");
  const std::size_t n = grid.nvars();
  MonomialGrid::Pieces result;
  for (int d = 0; d <= dmax; ++d) {
    const auto& mons = grid.degree(d);
    const auto& inBase = base[static_cast<std::size_t>(d)];
    const long long total = static_cast<long long>(mons.size());
    long long baseCount = 0;
    for (char c : inBase)
      baseCount += c;
    const long long target = total - h[d];
    if (h[d] < 0 || target < baseCount || target > total)
      fail(ErrorKind::NotAdmissible,
           "degree " + std::to_string(d) + " cannot be matched: need " + std::to_string(target) +
               " monomials, base has " + std::to_string(baseCount) + " of " + std::to_string(total),
           d);
    std::vector<char> piece(inBase.begin(), inBase.end());
    long long count = baseCount;
    for (std::size_t i = 0; i < mons.size() && count < target; ++i)
      if (!piece[i]) {
        piece[i] = 1;
        ++count;
      }
    if (d > 0) {
      const auto& prev = result.back();
      std::vector<char> shadow(inBase.begin(), inBase.end());
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (prev[i])
          for (std::size_t k = 0; k < n; ++k)
            shadow[grid.times(d - 1, i, k)] = 1;
      long long shadowCount = 0;
      bool nested = true;
      for (std::size_t i = 0; i < shadow.size(); ++i) {
        shadowCount += shadow[i];
        if (shadow[i] && !piece[i])
          nested = false;
      }
      if (shadowCount > target)
        fail(ErrorKind::NotAdmissible,
             "degree " + std::to_string(d) + " requires " + std::to_string(target) +
                 " monomials but the previous degree already forces " + std::to_string(shadowCount),
             d);
      if (!nested)
        fail(ErrorKind::InternalError,
             "lex-plus-base pieces are not nested at degree " + std::to_string(d), d);
    }
    result.push_back(std::move(piece));
  }
  return result;
}

} // namespace detail

MonomialIdeal lexEmbedOver(const MonomialIdeal& base, const HilbertFunction& h, int dmax) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  MonomialGrid grid(base.nvars(), dmax);
  auto pieces = detail::lexEmbedPieces(grid, grid.membership(base), h, dmax);
  std::vector<Monomial> gens = grid.generatedBy(pieces).generators();
  gens.insert(gens.end(), base.generators().begin(), base.generators().end());
  return minimalize(std::move(gens), base.nvars());
}

MonomialIdeal lexEmbed(const ShakinIdeal& a, const HilbertFunction& h, int dmax) {
  return lexEmbedOver(a.total(), h, dmax);
}

bool isAdmissibleHFOver(const MonomialIdeal& base, const HilbertFunction& h, int dmax) {
  try {
    lexEmbedOver(base, h, dmax);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAdmissible || e.kind() == ErrorKind::InvalidInput)
      return false;
    throw;
  }
}

bool isAdmissibleHF(const ShakinIdeal& a, const HilbertFunction& h, int dmax) {
  return isAdmissibleHFOver(a.total(), h, dmax);
}

MonomialIdeal glueIdeals(const ShakinIdeal& a, const std::vector<FamilyMember>& family, int dmax) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  const std::size_t n = a.nvars();
  std::vector<const FamilyMember*> byDegree(static_cast<std::size_t>(dmax) + 1, nullptr);
  for (const auto& member : family) {
    if (member.degree < 0 || member.degree > dmax)
      continue;
    if (member.ideal.nvars() != n)
      fail(ErrorKind::InvalidInput, "family member lives in the wrong ring");
    if (!member.ideal.contains(a.total()))
      fail(ErrorKind::InvalidInput,
           "family member for degree " + std::to_string(member.degree) + " does not contain the base ideal");
    auto& slot = byDegree[static_cast<std::size_t>(member.degree)];
    if (slot)
      fail(ErrorKind::InvalidFamily, "degree " + std::to_string(member.degree) + " is given twice",
           member.degree);
    slot = &member;
  }
  for (int d = 0; d <= dmax; ++d)
    if (!byDegree[static_cast<std::size_t>(d)])
      fail(ErrorKind::InvalidFamily, "family has no member for degree " + std::to_string(d), d);

  const int top = dmax + 1;
  MonomialGrid grid(n, top);
  const auto base = grid.membership(a.total());
  std::vector<HilbertFunction> hfs;
  for (int d = 0; d <= dmax; ++d)
    hfs.push_back(hilbertFunctionMonomial(byDegree[static_cast<std::size_t>(d)]->ideal, top));
  for (int d = 0; d < dmax; ++d)
    if (hfs[static_cast<std::size_t>(d)][d + 1] != hfs[static_cast<std::size_t>(d) + 1][d + 1])
      fail(ErrorKind::InvalidFamily,
           "members for degrees " + std::to_string(d) + " and " + std::to_string(d + 1) +
               " disagree in degree " + std::to_string(d + 1),
           d + 1);

  MonomialGrid::Pieces glued;
  for (int d = 0; d <= dmax; ++d) {
    auto embedded = detail::lexEmbedPieces(grid, base, hfs[static_cast<std::size_t>(d)], d);
    glued.push_back(std::move(embedded[static_cast<std::size_t>(d)]));
  }
  int bad = -1;
  if (!grid.isClosed(glued, &bad))
    fail(ErrorKind::InternalError, "glued pieces are not closed under multiplication at degree " +
                                       std::to_string(bad), bad);
  std::vector<Monomial> gens = grid.generatedBy(glued).generators();
  gens.insert(gens.end(), a.total().generators().begin(), a.total().generators().end());
  return minimalize(std::move(gens), n);
}

} // namespace lexdist
