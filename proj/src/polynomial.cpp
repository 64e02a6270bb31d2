#include "lexdist/polynomial.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lexdist {

namespace {

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lexCompare(a, b) > 0; }
};

using TermMap = std::map<Monomial, Coeff, LexGreater>;

std::vector<Term> fromMap(const TermMap& map) {
  std::vector<Term> out;
  out.reserve(map.size());
  for (const auto& [m, c] : map)
    if (c != 0)
      out.push_back({m, c});
  return out;
}

} // namespace

Polynomial::Polynomial(std::size_t n, PrimeField field, std::vector<Term> terms) : mN(n), mField(field) {
  TermMap map;
  for (auto& t : terms) {
    if (t.monomial.nvars() != n)
      fail(ErrorKind::InvalidInput, "term has the wrong number of variables");
    Coeff& slot = map[t.monomial];
    slot = mField.add(slot, t.coeff % mField.characteristic());
  }
  mTerms = fromMap(map);
}

Polynomial Polynomial::monomial(const Monomial& m, PrimeField field, Coeff c) {
  return Polynomial(m.nvars(), field, {{m, c}});
}

Polynomial Polynomial::constant(std::size_t n, PrimeField field, Coeff c) {
  return Polynomial(n, field, {{Monomial::one(n), c}});
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : mTerms)
    d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::isHomogeneous() const {
  for (const auto& t : mTerms)
    if (t.monomial.degree() != mTerms.front().monomial.degree())
      return false;
  return true;
}

const Term& Polynomial::leadingTerm(const MonomialOrder& order) const {
  if (mTerms.empty())
    fail(ErrorKind::InvalidInput, "the zero polynomial has no leading term");
  const Term* best = &mTerms.front();
  for (const auto& t : mTerms)
    if (order.compare(t.monomial, best->monomial) > 0)
      best = &t;
  return *best;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : mTerms)
    if (t.monomial == m)
      return t.coeff;
  return 0;
}

void Polynomial::requireCompatible(const Polynomial& other) const {
  if (mN != other.mN)
    fail(ErrorKind::InvalidInput, "polynomials live in rings with different variable counts");
  if (mField != other.mField)
    fail(ErrorKind::InvalidInput, "polynomials live over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  requireCompatible(other);
  std::vector<Term> out;
  out.reserve(mTerms.size() + other.mTerms.size());
  auto a = mTerms.begin(), b = other.mTerms.begin();
  while (a != mTerms.end() || b != other.mTerms.end()) {
    int cmp = a == mTerms.end() ? -1 : b == other.mTerms.end() ? 1 : lexCompare(a->monomial, b->monomial);
    if (cmp > 0)
      out.push_back(*a++);
    else if (cmp < 0)
      out.push_back(*b++);
    else {
      Coeff c = mField.add(a->coeff, b->coeff);
      if (c != 0)
        out.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  Polynomial result(mN, mField);
  result.mTerms = std::move(out);
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other.scaled(mField.neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  requireCompatible(other);
  TermMap map;
  for (const auto& s : mTerms)
    for (const auto& t : other.mTerms) {
      Coeff& slot = map[s.monomial * t.monomial];
      slot = mField.add(slot, mField.mul(s.coeff, t.coeff));
    }
  Polynomial result(mN, mField);
  result.mTerms = fromMap(map);
  return result;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial result(mN, mField);
  c %= mField.characteristic();
  if (c == 0)
    return result;
  result.mTerms = mTerms;
  for (auto& t : result.mTerms)
    t.coeff = mField.mul(t.coeff, c);
  return result;
}

Polynomial Polynomial::timesMonomial(const Monomial& m) const {
  Polynomial result(mN, mField);
  result.mTerms = mTerms;
  // Multiplication by a monomial preserves lex order.
  for (auto& t : result.mTerms)
    t.monomial = t.monomial * m;
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (isZero())
    return *this;
  return scaled(mField.inv(leadingTerm(order).coeff));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != mN)
    fail(ErrorKind::InvalidInput, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial result(target, mField);
  // Powers of each image are memoized; exponents stay small at desk scale.
  std::vector<std::vector<Polynomial>> powers(mN);
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(constant(target, mField, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& t : mTerms) {
    Polynomial product = constant(target, mField, t.coeff);
    for (std::size_t i = 0; i < mN; ++i)
      if (t.monomial[i] > 0)
        product = product * power(i, t.monomial[i]);
    result = result + product;
  }
  return result;
}

std::string toString(const Polynomial& f) {
  if (f.isZero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    long long c = f.field().lift(t.coeff);
    if (first) {
      if (c < 0)
        out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long mag = c < 0 ? -c : c;
    if (t.monomial.isOne())
      out << mag;
    else {
      if (mag != 1)
        out << mag << '*';
      out << toString(t.monomial);
    }
  }
  return out.str();
}

Polynomial parsePolynomial(const std::string& text, std::size_t n, PrimeField field) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip();
  if (pos == text.size())
    fail(ErrorKind::InvalidInput, "empty polynomial");
  if (text.substr(pos) == "0")
    return Polynomial(n, field);
  bool firstTerm = true;
  while (true) {
    skip();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!firstTerm) {
      fail(ErrorKind::InvalidInput, "expected '+' or '-' in polynomial '" + text + "'");
    }
    firstTerm = false;
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-')
      ++end;
    std::string body = text.substr(pos, end - pos);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
      body.pop_back();
    if (body.empty())
      fail(ErrorKind::InvalidInput, "empty term in polynomial '" + text + "'");
    long long coeff = 1;
    std::string monomialText = body;
    if (std::isdigit(static_cast<unsigned char>(body.front()))) {
      std::size_t k = 0;
      while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k])))
        ++k;
      if (k > 18)
        fail(ErrorKind::InvalidInput, "coefficient too long in '" + text + "'");
      coeff = std::stoll(body.substr(0, k));
      std::string rest = body.substr(k);
      std::size_t r = 0;
      while (r < rest.size() && std::isspace(static_cast<unsigned char>(rest[r])))
        ++r;
      rest = rest.substr(r);
      if (rest.empty())
        monomialText = "1";
      else if (rest.front() == '*')
        monomialText = rest.substr(1);
      else
        fail(ErrorKind::InvalidInput, "expected '*' after coefficient in '" + text + "'");
    }
    Coeff c = field.fromInt(negative ? -coeff : coeff);
    terms.push_back({parseMonomial(monomialText, n), c});
    pos = end;
    if (pos == text.size())
      break;
  }
  return Polynomial(n, field, std::move(terms));
}

} // namespace lexdist
