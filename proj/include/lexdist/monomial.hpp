#ifndef LEXDIST_MONOMIAL_HPP
#define LEXDIST_MONOMIAL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lexdist {

/// A monomial x_1^{a_1} ... x_n^{a_n} stored as its exponent vector.
/// The degree is cached; the length of the vector is the ambient
/// variable count.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, int power = 1);

  std::size_t nvars() const { return mExp.size(); }
  int degree() const { return mDegree; }
  int operator[](std::size_t i) const { return mExp[i]; }
  const std::vector<int>& exponents() const { return mExp; }

  bool isOne() const { return mDegree == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Exponentwise max(a - b, 0); this is the generator of (this : other).
  Monomial colon(const Monomial& other) const;
  /// Exact quotient; requires other | this.
  Monomial divide(const Monomial& other) const;

  /// Same exponents padded with zeros (or truncated, when the dropped
  /// exponents are zero) to `n` variables.
  Monomial resized(std::size_t n) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.mExp == b.mExp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<int> mExp;
  int mDegree = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sign of the lexicographic comparison with x_1 > x_2 > ... > x_n.
int lexCompare(const Monomial& a, const Monomial& b);
/// Sign of the degree reverse lexicographic comparison.
int degrevlexCompare(const Monomial& a, const Monomial& b);

/// Canonical storage order: ascending degree, then descending lex.
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MonomialOrder {
public:
  enum class Kind { Lex, Degrevlex, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}, Kind::Lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}, Kind::Degrevlex); }
  /// Compares the weight first; ties are broken by `tiebreak` (lex or
  /// degrevlex). Weights must be nonnegative.
  static MonomialOrder weighted(std::vector<long long> weight, Kind tiebreak = Kind::Degrevlex);

  Kind kind() const { return mKind; }
  Kind tiebreak() const { return mTiebreak; }
  const std::vector<long long>& weight() const { return mWeight; }

  /// Negative, zero or positive as a is smaller than, equal to or larger
  /// than b.
  int compare(const Monomial& a, const Monomial& b) const;
  long long weightOf(const Monomial& m) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(Kind kind, std::vector<long long> weight, Kind tiebreak)
    : mKind(kind), mWeight(std::move(weight)), mTiebreak(tiebreak) {}

  Kind mKind;
  std::vector<long long> mWeight;
  Kind mTiebreak;
};

/// All degree-d monomials in n variables, in descending lex order.
std::vector<Monomial> monomialsOfDegree(std::size_t n, int d);
/// C(d+n-1, n-1), the number of degree-d monomials in n variables.
long long monomialCount(std::size_t n, int d);

/// Monomial ideal given by the antichain of its minimal generators, kept
/// in canonical order so that equality is structural. The zero ideal has
/// no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t n = 0) : mN(n) {}

  static MonomialIdeal unit(std::size_t n);

  std::size_t nvars() const { return mN; }
  const std::vector<Monomial>& generators() const { return mGens; }
  bool isZero() const { return mGens.empty(); }
  bool isUnit() const { return mGens.size() == 1 && mGens.front().isOne(); }
  int maxGeneratorDegree() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.mN == b.mN && a.mGens == b.mGens;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

private:
  std::size_t mN;
  std::vector<Monomial> mGens;
};

/// Divisibility-minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);
bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Degree-d monomials outside the ideal, in descending lex order.
std::vector<Monomial> standardMonomials(const MonomialIdeal& ideal, int d);
/// Degree-d monomials inside the ideal, in descending lex order.
std::vector<Monomial> idealMonomials(const MonomialIdeal& ideal, int d);

/// Truncated Hilbert function H_0..H_dmax. Quotient Hilbert functions are
/// nonnegative; series transforms may produce arbitrary integers.
struct HilbertFunction {
  std::vector<long long> values;

  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<long long> v) : values(std::move(v)) {}

  int dmax() const { return static_cast<int>(values.size()) - 1; }
  long long operator[](int d) const { return values.at(static_cast<std::size_t>(d)); }
  HilbertFunction truncated(int dmax) const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Hilbert function of A/I up to dmax.
HilbertFunction hilbertFunctionMonomial(const MonomialIdeal& ideal, int dmax);

/// Numerator K(z) of the Hilbert series of A/I written as K(z)/(1-z)^n;
/// two quotients have the same Hilbert function in every degree exactly
/// when their numerators agree.
std::vector<long long> hilbertSeriesNumerator(const MonomialIdeal& ideal);

/// Slices J_[0], ..., J_[E] of I along the last variable, each an ideal of
/// the ring in the first n-1 variables; J_[d] = J_[E] for d >= E.
std::vector<MonomialIdeal> sliceLastVariable(const MonomialIdeal& ideal);

/// Last-variable stability: J_[k+1] * m ⊆ J_[k] for 0 < k+1 < e, where m is
/// the maximal ideal of the ring in the first n-1 variables. `e` empty
/// means e = infinity; a finite e requires x_n^e in I.
bool isXnStable(const MonomialIdeal& ideal, std::optional<int> e);

/// Multiplies a truncated series by (1-z)^r; negative r divides.
HilbertFunction seriesTransform(const HilbertFunction& h, int r);

/// "x1^2*x3" style rendering; "1" for the unit monomial.
std::string toString(const Monomial& m);
std::string toString(const MonomialIdeal& ideal);
/// Parses "x1^2*x3" (variables x1..xn, 1-based). "1" is the unit monomial.
Monomial parseMonomial(const std::string& text, std::size_t n);

} // namespace lexdist

#endif
