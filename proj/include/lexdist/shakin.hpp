#ifndef LEXDIST_SHAKIN_HPP
#define LEXDIST_SHAKIN_HPP

#include "lexdist/grid.hpp"
#include "lexdist/monomial.hpp"

#include <vector>

namespace lexdist {

/// True when every graded piece of the ideal, up to one past its largest
/// generator degree, is a descending-lex prefix of its degree.
bool isLexSegment(const MonomialIdeal& ideal);

/// A lex-segment ideal of K[x_1..x_i] extended to the ambient ring.
struct LexPiece {
  std::size_t vars = 0;
  MonomialIdeal ideal;
};

/// Sum of extensions of lex-segment ideals of the subrings K[x_1..x_i].
class PiecewiseLexIdeal {
public:
  explicit PiecewiseLexIdeal(std::size_t n = 0) : mN(n), mTotal(n) {}

  std::size_t nvars() const { return mN; }
  const std::vector<LexPiece>& pieces() const { return mPieces; }
  const MonomialIdeal& total() const { return mTotal; }

  friend PiecewiseLexIdeal makePiecewiseLex(std::size_t n, std::vector<LexPiece> pieces);

private:
  std::size_t mN;
  std::vector<LexPiece> mPieces;
  MonomialIdeal mTotal;
};

/// Validates every piece (it must live in its declared subring and be a
/// lex segment there) and caches the sum. Throws NotLex naming the piece.
PiecewiseLexIdeal makePiecewiseLex(std::size_t n, std::vector<LexPiece> pieces);

/// L + (x_1^{d_1}, ..., x_r^{d_r}) with d_1 <= ... <= d_r.
class ShakinIdeal {
public:
  ShakinIdeal() = default;

  std::size_t nvars() const { return mLex.nvars(); }
  const PiecewiseLexIdeal& lexPart() const { return mLex; }
  const std::vector<int>& powerDegrees() const { return mPowers; }
  const MonomialIdeal& total() const { return mTotal; }
  bool hasPowers() const { return !mPowers.empty(); }

  friend ShakinIdeal makeShakin(PiecewiseLexIdeal lexPart, std::vector<int> powerDegrees);

private:
  PiecewiseLexIdeal mLex;
  std::vector<int> mPowers;
  MonomialIdeal mTotal;
};

ShakinIdeal makeShakin(PiecewiseLexIdeal lexPart, std::vector<int> powerDegrees);

/// Pre-image in A of the lex-embedded ideal with quotient Hilbert function
/// h (of R/I) up to dmax: in each degree the base ideal plus the shortest
/// lex prefix reaching the required dimension. Throws NotAdmissible when a
/// degree cannot be matched or its required dimension is below the shadow
/// of the previous degree; throws InternalError when dimensions allow it
/// but the greedy pieces are not nested.
MonomialIdeal lexEmbed(const ShakinIdeal& a, const HilbertFunction& h, int dmax);
/// Same construction over an arbitrary monomial base ideal; used to probe
/// rings outside the Shakin class.
MonomialIdeal lexEmbedOver(const MonomialIdeal& base, const HilbertFunction& h, int dmax);

bool isAdmissibleHF(const ShakinIdeal& a, const HilbertFunction& h, int dmax);
bool isAdmissibleHFOver(const MonomialIdeal& base, const HilbertFunction& h, int dmax);

struct FamilyMember {
  int degree = 0;
  MonomialIdeal ideal;
};

/// Glues the degree-d pieces of the embeddings of a family {I_d}, where
/// consecutive members agree in degree d+1. The family must supply every
/// degree 0..dmax (pre-images in A containing the base ideal).
MonomialIdeal glueIdeals(const ShakinIdeal& a, const std::vector<FamilyMember>& family, int dmax);

namespace detail {

/// Grid-level embedding; `base` holds the membership pieces of the base
/// ideal on `grid` and the result covers degrees 0..dmax.
MonomialGrid::Pieces lexEmbedPieces(const MonomialGrid& grid, const MonomialGrid::Pieces& base,
                                    const HilbertFunction& h, int dmax);

} // namespace detail

} // namespace lexdist

#endif
