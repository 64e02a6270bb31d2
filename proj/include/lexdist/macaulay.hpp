#ifndef LEXDIST_MACAULAY_HPP
#define LEXDIST_MACAULAY_HPP

#include "lexdist/monomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace lexdist {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long top, long long bottom);

/// Greedy expansion a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j) with
/// a_d > a_{d-1} > ... > a_j >= j >= 1. Terms are (top, bottom) pairs in
/// decreasing bottom order; zero has no terms.
struct MacaulayRep {
  int degree = 0;
  std::vector<std::pair<long long, int>> terms;

  BigInt value() const;
};

MacaulayRep macaulayRep(const BigInt& a, int d);
/// a^<d>: the largest value allowed in degree d+1 after a in degree d.
BigInt macaulayBound(const BigInt& a, int d);

/// Checks the growth conditions of an O-sequence in n variables. When the
/// sequence fails, `firstFailure` receives the first offending degree.
bool isOSequence(const HilbertFunction& h, std::size_t n, int* firstFailure = nullptr);

/// The k lex-largest monomials of degree d in n variables.
std::vector<Monomial> lexSegment(std::size_t n, int d, long long k);

/// Lex-segment ideal whose quotient has Hilbert function h up to h.dmax().
/// Throws NoSuchIdeal naming the first degree where h is not an O-sequence.
MonomialIdeal lexIdealForHF(std::size_t n, const HilbertFunction& h);

} // namespace lexdist

#endif
