#ifndef LEXDIST_POLYNOMIAL_HPP
#define LEXDIST_POLYNOMIAL_HPP

#include "lexdist/field.hpp"
#include "lexdist/monomial.hpp"

#include <string>
#include <vector>

namespace lexdist {

struct Term {
  Monomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are unique, nonzero, and stored in
/// descending lex order of their monomials so that equality is structural.
class Polynomial {
public:
  Polynomial(std::size_t n, PrimeField field) : mN(n), mField(field) {}
  Polynomial(std::size_t n, PrimeField field, std::vector<Term> terms);

  static Polynomial monomial(const Monomial& m, PrimeField field, Coeff c = 1);
  static Polynomial constant(std::size_t n, PrimeField field, Coeff c);

  std::size_t nvars() const { return mN; }
  const PrimeField& field() const { return mField; }
  const std::vector<Term>& terms() const { return mTerms; }
  bool isZero() const { return mTerms.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool isHomogeneous() const;
  /// The term whose monomial is largest for `order`.
  const Term& leadingTerm(const MonomialOrder& order) const;
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coeff c) const;
  Polynomial timesMonomial(const Monomial& m) const;
  /// Scaled so that the leading coefficient for `order` is 1.
  Polynomial monic(const MonomialOrder& order) const;

  /// Replaces x_i by images[i] (all images must share a variable count).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.mN == b.mN && a.mField == b.mField && a.mTerms == b.mTerms;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void requireCompatible(const Polynomial& other) const;

  std::size_t mN;
  PrimeField mField;
  std::vector<Term> mTerms;
};

/// "x1^2 + 3*x1*x2" style rendering with symmetric coefficient lifts.
std::string toString(const Polynomial& f);
/// Parses sums of signed terms "c*x1^a*x2^b"; coefficients are reduced mod p.
Polynomial parsePolynomial(const std::string& text, std::size_t n, PrimeField field);

} // namespace lexdist

#endif
