#ifndef LEXDIST_TEST_HELPERS_HPP
#define LEXDIST_TEST_HELPERS_HPP

#include "lexdist/monomial.hpp"
#include "lexdist/polynomial.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

inline lexdist::MonomialIdeal ideal(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<lexdist::Monomial> ms;
  for (const char* g : gens)
    ms.push_back(lexdist::parseMonomial(g, n));
  return lexdist::minimalize(ms, n);
}

inline lexdist::Monomial mono(std::size_t n, const char* text) { return lexdist::parseMonomial(text, n); }

inline lexdist::Polynomial poly(std::size_t n, const char* text, lexdist::PrimeField field = lexdist::PrimeField()) {
  return lexdist::parsePolynomial(text, n, field);
}

inline lexdist::HilbertFunction hf(std::vector<long long> v) { return lexdist::HilbertFunction(std::move(v)); }

} // namespace testing

#endif
