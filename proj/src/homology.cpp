#include "lexdist/homology.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace lexdist {

namespace {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Coeff value;
};

std::size_t sparseRank(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries,
                       const PrimeField& field) {
  if (rows == 0 || cols == 0 || entries.empty())
    return 0;
  FieldMatrix m(rows, cols);
  for (const auto& e : entries)
    m.at(e.row, e.col) = field.add(m.at(e.row, e.col), e.value);
  return m.rank(field);
}

std::vector<std::vector<std::uint32_t>> subsetsBySize(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  return out;
}

void addEntry(GradedBettiTable& table, int i, int j, long long value) {
  if (value < 0)
    fail(ErrorKind::InternalError, "negative homology dimension");
  if (value > 0)
    table.entries[{i, j}] += value;
}

bool isMonomialIdeal(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.terms().size() != 1)
      return false;
  return true;
}

MonomialIdeal asMonomialIdeal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(g.terms().front().monomial);
  return minimalize(std::move(gens), ideal.nvars());
}

GradedBettiTable koszulGeneral(const Ideal& ideal, int dmax) {
  const std::size_t n = ideal.nvars();
  const PrimeField& field = ideal.field();
  const MonomialOrder order = MonomialOrder::degrevlex();
  const auto& basis = ideal.groebnerBasis(order);
  const MonomialIdeal initial = initialIdeal(ideal, order);

  std::vector<std::vector<Monomial>> standard;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> position;
  for (int e = 0; e <= dmax; ++e) {
    standard.push_back(standardMonomials(initial, e));
    auto& pos = position.emplace_back();
    for (std::size_t k = 0; k < standard.back().size(); ++k)
      pos.emplace(standard.back()[k], k);
  }
  // times[e][idx * n + k]: coordinates of NF(x_k * m) in degree e + 1.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Coeff>>>> times(static_cast<std::size_t>(dmax) + 1);
  for (int e = 0; e < dmax; ++e) {
    const auto& mons = standard[static_cast<std::size_t>(e)];
    auto& table = times[static_cast<std::size_t>(e)];
    table.resize(mons.size() * n);
    for (std::size_t idx = 0; idx < mons.size(); ++idx)
      for (std::size_t k = 0; k < n; ++k) {
        const Polynomial product = Polynomial::monomial(mons[idx] * Monomial::variable(n, k), field);
        const Polynomial nf = normalForm(product, basis, order);
        for (const auto& t : nf.terms())
          table[idx * n + k].push_back(
              {position[static_cast<std::size_t>(e) + 1].at(t.monomial), t.coeff});
      }
  }

  const auto subsets = subsetsBySize(n);
  GradedBettiTable table{n, dmax, {}};
  for (int j = 0; j <= dmax; ++j) {
    auto dimension = [&](int i) -> std::size_t {
      if (i < 0 || i > static_cast<int>(n) || j - i < 0)
        return 0;
      return subsets[static_cast<std::size_t>(i)].size() * standard[static_cast<std::size_t>(j - i)].size();
    };
    // rank of d_i : K_{i,j} -> K_{i-1,j}
    std::vector<std::size_t> ranks(n + 2, 0);
    for (int i = 1; i <= static_cast<int>(n) && j - i >= 0; ++i) {
      const auto& src = subsets[static_cast<std::size_t>(i)];
      const auto& dst = subsets[static_cast<std::size_t>(i) - 1];
      std::unordered_map<std::uint32_t, std::size_t> dstIndex;
      for (std::size_t s = 0; s < dst.size(); ++s)
        dstIndex.emplace(dst[s], s);
      const int e = j - i;
      const std::size_t srcMons = standard[static_cast<std::size_t>(e)].size();
      const std::size_t dstMons = standard[static_cast<std::size_t>(e) + 1].size();
      std::vector<SparseEntry> entries;
      for (std::size_t s = 0; s < src.size(); ++s) {
        int sign = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (!(src[s] >> k & 1u))
            continue;
          const std::size_t target = dstIndex.at(src[s] & ~(1u << k));
          for (std::size_t idx = 0; idx < srcMons; ++idx)
            for (const auto& [pos, c] : times[static_cast<std::size_t>(e)][idx * n + k])
              entries.push_back({target * dstMons + pos, s * srcMons + idx, sign % 2 ? field.neg(c) : c});
          ++sign;
        }
      }
      ranks[static_cast<std::size_t>(i)] = sparseRank(dimension(i - 1), dimension(i), entries, field);
    }
    for (int i = 0; i <= static_cast<int>(n); ++i)
      addEntry(table, i, j,
               static_cast<long long>(dimension(i)) - static_cast<long long>(ranks[static_cast<std::size_t>(i)]) -
                   static_cast<long long>(ranks[static_cast<std::size_t>(i) + 1]));
  }
  return table;
}

GradedBettiTable koszulMonomial(const MonomialIdeal& ideal, int dmax, const PrimeField& field) {
  const std::size_t n = ideal.nvars();
  const auto subsets = subsetsBySize(n);
  GradedBettiTable table{n, dmax, {}};
  for (int j = 0; j <= dmax; ++j)
    for (const auto& alpha : monomialsOfDegree(n, j)) {
      std::uint32_t support = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (alpha[k] > 0)
          support |= 1u << k;
      auto standardAt = [&](std::uint32_t mask) {
        std::vector<int> e = alpha.exponents();
        for (std::size_t k = 0; k < n; ++k)
          if (mask >> k & 1u)
            --e[k];
        return !ideal.contains(Monomial(std::move(e)));
      };
      // Multigraded Koszul strand: basis e_S with S ⊆ supp(alpha) and alpha - e_S standard.
      std::vector<std::vector<std::uint32_t>> cells(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::uint32_t mask : subsets[i])
          if ((mask & ~support) == 0 && standardAt(mask))
            cells[i].push_back(mask);
      std::vector<std::size_t> ranks(n + 2, 0);
      for (std::size_t i = 1; i <= n; ++i) {
        if (cells[i].empty() || cells[i - 1].empty())
          continue;
        std::unordered_map<std::uint32_t, std::size_t> dstIndex;
        for (std::size_t s = 0; s < cells[i - 1].size(); ++s)
          dstIndex.emplace(cells[i - 1][s], s);
        std::vector<SparseEntry> entries;
        for (std::size_t s = 0; s < cells[i].size(); ++s) {
          int sign = 0;
          for (std::size_t k = 0; k < n; ++k) {
            if (!(cells[i][s] >> k & 1u))
              continue;
            auto it = dstIndex.find(cells[i][s] & ~(1u << k));
            if (it != dstIndex.end())
              entries.push_back({it->second, s, sign % 2 ? field.neg(1) : 1});
            ++sign;
          }
        }
        ranks[i] = sparseRank(cells[i - 1].size(), cells[i].size(), entries, field);
      }
      for (std::size_t i = 0; i <= n; ++i)
        addEntry(table, static_cast<int>(i), j,
                 static_cast<long long>(cells[i].size()) - static_cast<long long>(ranks[i]) -
                     static_cast<long long>(ranks[i + 1]));
    }
  return table;
}

/// Reduced homology dimensions H~_k for k = -1 .. maxDim of the complex
/// whose faces (bitmasks) are listed; the list must be closed under subsets.
std::vector<long long> reducedHomologyOfFaces(const std::vector<std::uint64_t>& faces, const PrimeField& field) {
  if (faces.empty())
    return {};
  int top = 0;
  for (auto f : faces)
    top = std::max(top, std::popcount(f));
  // bySize[s] are faces with s vertices, i.e. dimension s - 1.
  std::vector<std::vector<std::uint64_t>> bySize(static_cast<std::size_t>(top) + 1);
  for (auto f : faces)
    bySize[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : bySize)
    std::sort(v.begin(), v.end());
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (std::size_t s = 1; s <= static_cast<std::size_t>(top); ++s) {
    std::unordered_map<std::uint64_t, std::size_t> dstIndex;
    for (std::size_t t = 0; t < bySize[s - 1].size(); ++t)
      dstIndex.emplace(bySize[s - 1][t], t);
    std::vector<SparseEntry> entries;
    for (std::size_t c = 0; c < bySize[s].size(); ++c) {
      const std::uint64_t f = bySize[s][c];
      int sign = 0;
      for (int v = 0; v < 64; ++v) {
        if (!(f >> v & 1u))
          continue;
        auto it = dstIndex.find(f & ~(std::uint64_t{1} << v));
        if (it == dstIndex.end())
          fail(ErrorKind::InternalError, "face list is not closed under subsets");
        entries.push_back({it->second, c, sign % 2 ? field.neg(1) : 1});
        ++sign;
      }
    }
    ranks[s] = sparseRank(bySize[s - 1].size(), bySize[s].size(), entries, field);
  }
  std::vector<long long> out;
  for (std::size_t s = 0; s <= static_cast<std::size_t>(top); ++s)
    out.push_back(static_cast<long long>(bySize[s].size()) - static_cast<long long>(ranks[s]) -
                  static_cast<long long>(ranks[s + 1]));
  return out;
}

long long binomialSmall(long long top, long long bottom) {
  if (bottom < 0 || top < bottom)
    return 0;
  long long r = 1;
  for (long long k = 1; k <= bottom; ++k)
    r = r * (top - bottom + k) / k;
  return r;
}

} // namespace

long long GradedBettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long LocalCohTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

GradedBettiTable koszulBetti(const Ideal& ideal, int dmax) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  if (ideal.nvars() > 16)
    fail(ErrorKind::InvalidInput, "Koszul complexes are limited to 16 variables");
  if (isMonomialIdeal(ideal))
    return koszulMonomial(asMonomialIdeal(ideal), dmax, ideal.field());
  return koszulGeneral(ideal, dmax);
}

GradedBettiTable koszulBetti(const MonomialIdeal& ideal, int dmax, PrimeField field) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  if (ideal.nvars() > 16)
    fail(ErrorKind::InvalidInput, "Koszul complexes are limited to 16 variables");
  return koszulMonomial(ideal, dmax, field);
}

GradedBettiTable taylorBettiOracle(const MonomialIdeal& ideal, int dmax, PrimeField field) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  const auto& gens = ideal.generators();
  const std::size_t m = gens.size();
  if (m > 20)
    fail(ErrorKind::InvalidInput, "the Taylor oracle is limited to 20 generators");
  const std::size_t n = ideal.nvars();
  std::vector<Monomial> lcms(std::size_t{1} << m);
  lcms[0] = Monomial::one(n);
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> groups;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (mask != 0) {
      const int low = std::countr_zero(mask);
      lcms[mask] = lcms[mask & (mask - 1)].lcm(gens[static_cast<std::size_t>(low)]);
    }
    if (lcms[mask].degree() <= dmax)
      groups[lcms[mask]].push_back(mask);
  }
  GradedBettiTable table{n, dmax, {}};
  for (const auto& [lcm, masks] : groups) {
    // Within one lcm class the differential has entries ±1 between faces
    // differing by one generator.
    std::vector<std::vector<std::uint32_t>> bySize(m + 1);
    for (auto mask : masks)
      bySize[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    std::vector<std::size_t> ranks(m + 2, 0);
    for (std::size_t s = 1; s <= m; ++s) {
      if (bySize[s].empty() || bySize[s - 1].empty())
        continue;
      std::unordered_map<std::uint32_t, std::size_t> dstIndex;
      for (std::size_t t = 0; t < bySize[s - 1].size(); ++t)
        dstIndex.emplace(bySize[s - 1][t], t);
      std::vector<SparseEntry> entries;
      for (std::size_t c = 0; c < bySize[s].size(); ++c) {
        int sign = 0;
        for (std::size_t k = 0; k < m; ++k) {
          if (!(bySize[s][c] >> k & 1u))
            continue;
          auto it = dstIndex.find(bySize[s][c] & ~(1u << k));
          if (it != dstIndex.end())
            entries.push_back({it->second, c, sign % 2 ? field.neg(1) : 1});
          ++sign;
        }
      }
      ranks[s] = sparseRank(bySize[s - 1].size(), bySize[s].size(), entries, field);
    }
    for (std::size_t s = 0; s <= m && s <= n; ++s)
      addEntry(table, static_cast<int>(s), lcm.degree(),
               static_cast<long long>(bySize[s].size()) - static_cast<long long>(ranks[s]) -
                   static_cast<long long>(ranks[s + 1]));
    for (std::size_t s = n + 1; s <= m; ++s)
      if (static_cast<long long>(bySize[s].size()) - static_cast<long long>(ranks[s]) -
              static_cast<long long>(ranks[s + 1]) !=
          0)
        fail(ErrorKind::InternalError, "Taylor complex has homology beyond the projective dimension bound");
  }
  return table;
}

long long simplicialReducedHomology(const SimplicialComplex& complex, int i, PrimeField field) {
  if (complex.vertexCount > 24)
    fail(ErrorKind::InvalidInput, "simplicial complexes are limited to 24 vertices");
  std::vector<std::uint64_t> faces;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << complex.vertexCount); ++f)
    for (auto facet : complex.facets)
      if ((f & ~facet) == 0) {
        faces.push_back(f);
        break;
      }
  const auto h = reducedHomologyOfFaces(faces, field);
  const std::size_t slot = static_cast<std::size_t>(i + 1);
  return i < -1 || slot >= h.size() ? 0 : h[slot];
}

CohWindow defaultCohWindow(const MonomialIdeal& ideal, int dmax) {
  int total = 0;
  for (const auto& g : ideal.generators())
    total += g.degree();
  return {-total, dmax};
}

LocalCohTable localCohMonomial(const MonomialIdeal& ideal, CohWindow window, PrimeField field) {
  const std::size_t n = ideal.nvars();
  if (n > 20)
    fail(ErrorKind::InvalidInput, "local cohomology is limited to 20 variables");
  if (window.jmin > window.jmax)
    fail(ErrorKind::InvalidInput, "empty degree window");
  LocalCohTable table;
  table.n = n;
  table.window = window;
  std::vector<int> rho(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < n; ++k)
      rho[k] = std::max(rho[k], g[k]);
  const auto& gens = ideal.generators();

  for (std::uint32_t negative = 0; negative < (1u << n); ++negative) {
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k)
      if (!(negative >> k & 1u))
        free.push_back(k);
    const int g = std::popcount(negative);
    bool empty = false;
    for (std::size_t k : free)
      empty = empty || rho[k] == 0;
    if (empty)
      continue;
    // Odometer over the nonnegative coordinates b_k in [0, rho_k).
    std::vector<int> b(n, 0);
    while (true) {
      std::vector<std::uint64_t> faces;
      for (std::uint32_t f = 0; f < (1u << n); ++f) {
        if (f & negative)
          continue;
        bool inside = true;
        for (const auto& u : gens) {
          bool witness = false;
          for (std::size_t k : free)
            witness = witness || (!(f >> k & 1u) && u[k] > b[k]);
          if (!witness) {
            inside = false;
            break;
          }
        }
        if (inside)
          faces.push_back(f);
      }
      const auto h = reducedHomologyOfFaces(faces, field);
      int weight = 0;
      for (std::size_t k : free)
        weight += b[k];
      for (std::size_t slot = 0; slot < h.size(); ++slot) {
        if (h[slot] == 0)
          continue;
        const int i = static_cast<int>(slot) - 1 + g + 1;
        const int top = weight - g;
        table.supportMax = std::max(table.supportMax.value_or(top), top);
        if (g == 0) {
          table.supportMin = std::min(table.supportMin.value_or(weight), weight);
          if (weight >= window.jmin && weight <= window.jmax)
            table.entries[{i, weight}] += h[slot];
        } else {
          table.unboundedBelow = true;
          for (int j = window.jmin; j <= std::min(window.jmax, top); ++j)
            table.entries[{i, j}] += h[slot] * binomialSmall(weight - j - 1, g - 1);
        }
      }
      std::size_t pos = 0;
      while (pos < free.size() && ++b[free[pos]] == rho[free[pos]])
        b[free[pos++]] = 0;
      if (pos == free.size())
        break;
    }
  }
  if (table.unboundedBelow)
    table.supportMin.reset();
  table.windowTruncated = table.unboundedBelow || (table.supportMax && *table.supportMax > window.jmax) ||
                          (table.supportMin && *table.supportMin < window.jmin);
  return table;
}

} // namespace lexdist
