#include "lexdist/macaulay.hpp"

#include "lexdist/error.hpp"

#include <string>

namespace lexdist {

BigInt binomial(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top)
    return 0;
  bottom = std::min(bottom, top - bottom);
  BigInt c = 1;
  for (long long k = 1; k <= bottom; ++k) {
    c *= top - bottom + k;
    c /= k;
  }
  return c;
}

BigInt MacaulayRep::value() const {
  BigInt s = 0;
  for (const auto& [top, bottom] : terms)
    s += binomial(top, bottom);
  return s;
}

MacaulayRep macaulayRep(const BigInt& a, int d) {
  if (a < 0)
    fail(ErrorKind::InvalidInput, "Macaulay representation of a negative number");
  if (d < 1)
    fail(ErrorKind::InvalidInput, "Macaulay representation needs d >= 1");
  MacaulayRep rep;
  rep.degree = d;
  BigInt rest = a;
  for (int i = d; i >= 1 && rest > 0; --i) {
    // Largest top with C(top, i) <= rest; top >= i since C(i, i) = 1 <= rest.
    long long top = i;
    while (binomial(top + 1, i) <= rest)
      ++top;
    rep.terms.emplace_back(top, i);
    rest -= binomial(top, i);
  }
  return rep;
}

BigInt macaulayBound(const BigInt& a, int d) {
  BigInt s = 0;
  for (const auto& [top, bottom] : macaulayRep(a, d).terms)
    s += binomial(top + 1, bottom + 1);
  return s;
}

bool isOSequence(const HilbertFunction& h, std::size_t n, int* firstFailure) {
  auto report = [&](int d) {
    if (firstFailure)
      *firstFailure = d;
    return false;
  };
  for (int d = 0; d <= h.dmax(); ++d)
    if (h[d] < 0)
      return report(d);
  if (h.values.empty())
    return true;
  if (h[0] > 1)
    return report(0);
  if (h.dmax() >= 1 && h[1] > static_cast<long long>(n) * h[0])
    return report(1);
  for (int d = 1; d < h.dmax(); ++d)
    if (BigInt(h[d + 1]) > macaulayBound(BigInt(h[d]), d))
      return report(d + 1);
  return true;
}

std::vector<Monomial> lexSegment(std::size_t n, int d, long long k) {
  auto all = monomialsOfDegree(n, d);
  if (k < 0 || k > static_cast<long long>(all.size()))
    fail(ErrorKind::InvalidInput, "lex segment size out of range");
  all.resize(static_cast<std::size_t>(k));
  return all;
}

MonomialIdeal lexIdealForHF(std::size_t n, const HilbertFunction& h) {
  int bad = -1;
  if (!isOSequence(h, n, &bad))
    fail(ErrorKind::NoSuchIdeal,
         "Hilbert function is not an O-sequence at degree " + std::to_string(bad), bad);
  std::vector<Monomial> gens;
  for (int d = 0; d <= h.dmax(); ++d) {
    auto seg = lexSegment(n, d, monomialCount(n, d) - h[d]);
    gens.insert(gens.end(), seg.begin(), seg.end());
  }
  MonomialIdeal lex = minimalize(std::move(gens), n);
  if (hilbertFunctionMonomial(lex, h.dmax()) != h)
    fail(ErrorKind::InternalError, "lex ideal does not reproduce an O-sequence");
  return lex;
}

} // namespace lexdist
