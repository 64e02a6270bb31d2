#ifndef LEXDIST_FIELD_HPP
#define LEXDIST_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lexdist {

using Coeff = std::uint32_t;

constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool isPrime(std::uint64_t p);

/// Arithmetic in F_p for a prime p < 2^31. Characteristic zero is
/// emulated by the default large prime.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return mP; }

  Coeff fromInt(long long v) const {
    long long r = v % static_cast<long long>(mP);
    return static_cast<Coeff>(r < 0 ? r + mP : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= mP ? s - mP : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + mP - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : mP - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % mP);
  }
  Coeff inv(Coeff a) const;
  /// Symmetric representative in (-p/2, p/2], for printing.
  long long lift(Coeff a) const { return a > mP / 2 ? static_cast<long long>(a) - mP : a; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.mP == b.mP; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.mP != b.mP; }

private:
  std::uint32_t mP;
};

/// Dense row-major matrix over F_p.
class FieldMatrix {
public:
  FieldMatrix(std::size_t rows, std::size_t cols) : mRows(rows), mCols(cols), mData(rows * cols, 0) {}

  std::size_t rows() const { return mRows; }
  std::size_t cols() const { return mCols; }
  Coeff& at(std::size_t r, std::size_t c) { return mData[r * mCols + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return mData[r * mCols + c]; }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank(const PrimeField& field) const;

private:
  std::size_t mRows;
  std::size_t mCols;
  std::vector<Coeff> mData;
};

} // namespace lexdist

#endif
