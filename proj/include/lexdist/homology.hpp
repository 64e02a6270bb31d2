#ifndef LEXDIST_HOMOLOGY_HPP
#define LEXDIST_HOMOLOGY_HPP

#include "lexdist/field.hpp"
#include "lexdist/groebner.hpp"
#include "lexdist/monomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lexdist {

/// Graded Betti numbers beta_{i,j}(A/I) for 0 <= i <= n and j <= dmax.
/// Only nonzero entries are stored; degrees above dmax were not computed.
struct GradedBettiTable {
  std::size_t n = 0;
  int dmax = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;
};

/// Koszul homology of A/I in degrees j <= dmax. Monomial ideals take a
/// multigraded fast path that needs no Groebner basis.
GradedBettiTable koszulBetti(const Ideal& ideal, int dmax);
GradedBettiTable koszulBetti(const MonomialIdeal& ideal, int dmax, PrimeField field = PrimeField());

/// Betti numbers of A/I from the Taylor complex tensored with the residue
/// field; an independent check of koszulBetti on monomial input.
GradedBettiTable taylorBettiOracle(const MonomialIdeal& ideal, int dmax, PrimeField field = PrimeField());

/// Simplicial complex on vertices 0..vertexCount-1 given by its facets as
/// vertex bitmasks. No facets is the void complex; a single empty facet is
/// the complex {∅}.
struct SimplicialComplex {
  std::size_t vertexCount = 0;
  std::vector<std::uint64_t> facets;
};

/// Dimension of the reduced homology H~_i over the field; i may be -1.
long long simplicialReducedHomology(const SimplicialComplex& complex, int i, PrimeField field = PrimeField());

struct CohWindow {
  int jmin = 0;
  int jmax = 0;
};

/// Hilbert functions of H^i_m(A/I) for 0 <= i <= n in the degree window.
/// supportMax is the largest degree carrying a nonzero value (absent when
/// every H^i vanishes); unboundedBelow marks modules that are nonzero in
/// infinitely many negative degrees. windowTruncated is set when some
/// nonzero value lies outside the window.
struct LocalCohTable {
  std::size_t n = 0;
  CohWindow window;
  std::map<std::pair<int, int>, long long> entries;
  std::optional<int> supportMax;
  std::optional<int> supportMin;
  bool unboundedBelow = false;
  bool windowTruncated = false;

  long long at(int i, int j) const;
};

/// Window [-(sum of generator degrees), dmax].
CohWindow defaultCohWindow(const MonomialIdeal& ideal, int dmax);

LocalCohTable localCohMonomial(const MonomialIdeal& ideal, CohWindow window, PrimeField field = PrimeField());

} // namespace lexdist

#endif
