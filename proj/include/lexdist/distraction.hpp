#ifndef LEXDIST_DISTRACTION_HPP
#define LEXDIST_DISTRACTION_HPP

#include "lexdist/groebner.hpp"
#include "lexdist/monomial.hpp"
#include "lexdist/polynomial.hpp"

#include <optional>
#include <random>
#include <vector>

namespace lexdist {

/// c_1 x_1 + ... + c_n x_n with coefficients in F_p.
struct LinearForm {
  std::vector<Coeff> coefficients;

  bool isZero() const;
  Polynomial toPolynomial(const PrimeField& field) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm variableForm(std::size_t n, std::size_t i);

/// n rows of linear forms. Each row is a finite prefix whose last entry is
/// repeated forever; trailing repeats are trimmed on construction so the
/// stored rows are canonical.
class DistractionMatrix {
public:
  DistractionMatrix(std::size_t n, PrimeField field, std::vector<std::vector<LinearForm>> rows);

  static DistractionMatrix identity(std::size_t n, PrimeField field);

  std::size_t nvars() const { return mN; }
  const PrimeField& field() const { return mField; }
  const std::vector<std::vector<LinearForm>>& rows() const { return mRows; }
  /// Entry l_{i,j} with 0-based row i and column j; columns past the stored
  /// prefix return the tail.
  const LinearForm& entry(std::size_t i, std::size_t j) const;
  /// Smallest N such that every row is constant from column N on (0-based).
  std::size_t stabilization() const;

  friend bool operator==(const DistractionMatrix&, const DistractionMatrix&) = default;

private:
  std::size_t mN;
  PrimeField mField;
  std::vector<std::vector<LinearForm>> mRows;
};

struct DistractionCheck {
  bool valid = true;
  /// Column chosen in each row for the first selection that fails to span.
  std::vector<std::size_t> failingSelection;
};

/// Checks that every choice of one stored entry per row spans the linear
/// forms over the matrix field.
DistractionCheck validateDistraction(const DistractionMatrix& d);

/// D(x^a) = prod_i prod_{j < a_i} l_{i,j}.
Polynomial applyDistraction(const DistractionMatrix& d, const Monomial& m);
Ideal distractIdeal(const DistractionMatrix& d, const MonomialIdeal& ideal);

/// Drops the last row and sets x_n = 0 in the others. Requires the first
/// entry of the last row to be a nonzero multiple of x_n.
DistractionMatrix induceBar(const DistractionMatrix& d);

/// Random distraction with `length` stored entries per row, each of the
/// form a*x_i + b*x_k, resampled until valid.
DistractionMatrix randomDistraction(std::size_t n, PrimeField field, std::size_t length, std::mt19937_64& rng);

/// Polarization in T = K[x_1..x_n, X_{1,1}..X_{1,r_1}, ..., X_{n,r_n}]; the
/// variable X_{i,j} has index n + offset[i] + j (0-based i and j).
struct PolarizationResult {
  std::size_t baseVars = 0;
  std::size_t extendedVarCount = 0;
  std::vector<int> r;
  std::vector<std::size_t> offset;
  MonomialIdeal polarizedIdeal;
  /// x_i - X_{i,j}.
  std::vector<Polynomial> specializationX;
  /// l_{i,j} - X_{i,j}; empty without a distraction.
  std::vector<Polynomial> specializationL;

  std::size_t variableIndex(std::size_t i, std::size_t j) const { return baseVars + offset[i] + j; }
};

PolarizationResult polarize(const MonomialIdeal& ideal, PrimeField field = PrimeField());
PolarizationResult polarize(const MonomialIdeal& ideal, const DistractionMatrix& d);

/// Image of the polarized ideal under X_{i,j} -> x_i.
MonomialIdeal specializeX(const PolarizationResult& p);
/// Image of the polarized generators under X_{i,j} -> l_{i,j}, as
/// polynomials of A.
std::vector<Polynomial> specializeL(const PolarizationResult& p, const DistractionMatrix& d);

} // namespace lexdist

#endif
