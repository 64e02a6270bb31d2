#include "lexdist/field.hpp"

#include "lexdist/error.hpp"

#include <string>
#include <utility>

namespace lexdist {

bool isPrime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : mP(p) {
  if (p >= (1u << 31) || !isPrime(p))
    fail(ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0)
    fail(ErrorKind::InternalError, "division by zero in F_p");
  long long t = 0, newT = 1, r = mP, newR = a;
  while (newR != 0) {
    long long q = r / newR;
    t = std::exchange(newT, t - q * newT);
    r = std::exchange(newR, r - q * newR);
  }
  return fromInt(t);
}

std::size_t FieldMatrix::rank(const PrimeField& field) const {
  std::vector<Coeff> m = mData;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < mCols && rank < mRows; ++col) {
    std::size_t pivot = rank;
    while (pivot < mRows && m[pivot * mCols + col] == 0)
      ++pivot;
    if (pivot == mRows)
      continue;
    if (pivot != rank)
      for (std::size_t c = col; c < mCols; ++c)
        std::swap(m[pivot * mCols + c], m[rank * mCols + c]);
    const Coeff scale = field.inv(m[rank * mCols + col]);
    for (std::size_t c = col; c < mCols; ++c)
      m[rank * mCols + c] = field.mul(m[rank * mCols + c], scale);
    for (std::size_t r = rank + 1; r < mRows; ++r) {
      const Coeff factor = m[r * mCols + col];
      if (factor == 0)
        continue;
      for (std::size_t c = col; c < mCols; ++c)
        m[r * mCols + c] = field.sub(m[r * mCols + c], field.mul(factor, m[rank * mCols + c]));
    }
    ++rank;
  }
  return rank;
}

} // namespace lexdist
