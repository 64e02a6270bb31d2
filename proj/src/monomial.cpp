#include "lexdist/monomial.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lexdist {

Monomial::Monomial(std::vector<int> exponents) : mExp(std::move(exponents)) {
  for (int e : mExp) {
    if (e < 0)
      fail(ErrorKind::InvalidInput, "negative exponent in monomial");
    mDegree += e;
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, int power) {
  if (i >= n)
    fail(ErrorKind::InvalidInput, "variable index out of range");
  std::vector<int> e(n, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (mDegree > other.mDegree)
    return false;
  for (std::size_t i = 0; i < mExp.size(); ++i)
    if (mExp[i] > other.mExp[i])
      return false;
  return true;
}

namespace {

void requireSameLength(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::InvalidInput, "monomial length mismatch");
}

template <class Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  requireSameLength(a, b);
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = op(a[i], b[i]);
  return Monomial(std::move(e));
}

} // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  return combine(*this, other, [](int x, int y) { return x + y; });
}

Monomial Monomial::lcm(const Monomial& other) const {
  return combine(*this, other, [](int x, int y) { return std::max(x, y); });
}

Monomial Monomial::gcd(const Monomial& other) const {
  return combine(*this, other, [](int x, int y) { return std::min(x, y); });
}

Monomial Monomial::colon(const Monomial& other) const {
  return combine(*this, other, [](int x, int y) { return std::max(x - y, 0); });
}

Monomial Monomial::divide(const Monomial& other) const {
  if (!other.divides(*this))
    fail(ErrorKind::InvalidInput, "monomial division is not exact");
  return combine(*this, other, [](int x, int y) { return x - y; });
}

Monomial Monomial::resized(std::size_t n) const {
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < mExp.size(); ++i) {
    if (i < n)
      e[i] = mExp[i];
    else if (mExp[i] != 0)
      fail(ErrorKind::InvalidInput, "cannot drop a variable with nonzero exponent");
  }
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::size_t h = mExp.size();
  for (int e : mExp)
    h = h * 1000003u ^ static_cast<std::size_t>(e + 0x9e37);
  return h;
}

int lexCompare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i])
      return a[i] > b[i] ? 1 : -1;
  return 0;
}

int degrevlexCompare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i] ? 1 : -1;
  return 0;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  return lexCompare(a, b) > 0;
}

MonomialOrder MonomialOrder::weighted(std::vector<long long> weight, Kind tiebreak) {
  if (tiebreak == Kind::Weighted)
    fail(ErrorKind::InvalidInput, "weighted order needs a lex or degrevlex tiebreak");
  for (long long w : weight)
    if (w < 0)
      fail(ErrorKind::InvalidInput, "weights must be nonnegative");
  return MonomialOrder(Kind::Weighted, std::move(weight), tiebreak);
}

long long MonomialOrder::weightOf(const Monomial& m) const {
  if (m.nvars() != mWeight.size())
    fail(ErrorKind::InvalidInput, "weight vector length mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < mWeight.size(); ++i)
    s += mWeight[i] * m[i];
  return s;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (mKind) {
  case Kind::Lex: return lexCompare(a, b);
  case Kind::Degrevlex: return degrevlexCompare(a, b);
  case Kind::Weighted: {
    long long wa = weightOf(a), wb = weightOf(b);
    if (wa != wb)
      return wa > wb ? 1 : -1;
    return mTiebreak == Kind::Lex ? lexCompare(a, b) : degrevlexCompare(a, b);
  }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (mKind) {
  case Kind::Lex: return "lex";
  case Kind::Degrevlex: return "degrevlex";
  case Kind::Weighted: {
    std::ostringstream out;
    out << "weighted(";
    for (std::size_t i = 0; i < mWeight.size(); ++i)
      out << (i ? "," : "") << mWeight[i];
    out << ";" << (mTiebreak == Kind::Lex ? "lex" : "degrevlex") << ")";
    return out.str();
  }
  }
  return "?";
}

namespace {

void fillDegree(std::size_t n, std::size_t var, int remaining, std::vector<int>& current,
                std::vector<Monomial>& out) {
  if (var + 1 == n) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fillDegree(n, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

} // namespace

std::vector<Monomial> monomialsOfDegree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  if (n == 0) {
    if (d == 0)
      out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> current(n, 0);
  fillDegree(n, 0, d, current, out);
  return out;
}

long long monomialCount(std::size_t n, int d) {
  if (d < 0)
    return 0;
  if (n == 0)
    return d == 0 ? 1 : 0;
  // C(d+n-1, n-1) computed incrementally; exact at every step.
  long long c = 1;
  for (std::size_t k = 1; k < n; ++k)
    c = c * (d + static_cast<long long>(k)) / static_cast<long long>(k);
  return c;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize({Monomial::one(n)}, n);
}

int MonomialIdeal::maxGeneratorDegree() const {
  int d = -1;
  for (const auto& g : mGens)
    d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != mN)
    fail(ErrorKind::InvalidInput, "monomial length does not match the ideal");
  for (const auto& g : mGens)
    if (g.divides(m))
      return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.mGens)
    if (!contains(g))
      return false;
  return true;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.nvars() != n)
      fail(ErrorKind::InvalidInput, "generator length does not match the ambient variable count");
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal result(n);
  // Ascending degree: a generator can only be divided by earlier ones.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : result.mGens)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant)
      result.mGens.push_back(std::move(g));
  }
  return result;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.nvars())
    fail(ErrorKind::InvalidInput, "monomial length does not match the ideal");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators())
    gens.push_back(g.colon(m));
  return minimalize(std::move(gens), ideal.nvars());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::InvalidInput, "ideal variable counts differ");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.nvars());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::InvalidInput, "ideal variable counts differ");
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators())
      gens.push_back(f.lcm(g));
  return minimalize(std::move(gens), a.nvars());
}

std::vector<Monomial> standardMonomials(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomialsOfDegree(ideal.nvars(), d))
    if (!ideal.contains(m))
      out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> idealMonomials(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomialsOfDegree(ideal.nvars(), d))
    if (ideal.contains(m))
      out.push_back(std::move(m));
  return out;
}

HilbertFunction HilbertFunction::truncated(int d) const {
  if (d > dmax())
    fail(ErrorKind::InvalidInput, "cannot truncate a Hilbert function beyond its length");
  return HilbertFunction(std::vector<long long>(values.begin(), values.begin() + d + 1));
}

HilbertFunction hilbertFunctionMonomial(const MonomialIdeal& ideal, int dmax) {
  if (dmax < 0)
    fail(ErrorKind::InvalidInput, "dmax must be nonnegative");
  std::vector<long long> values(static_cast<std::size_t>(dmax) + 1, 0);
  for (int d = 0; d <= dmax; ++d) {
    long long count = 0;
    for (const auto& m : monomialsOfDegree(ideal.nvars(), d))
      if (!ideal.contains(m))
        ++count;
    values[static_cast<std::size_t>(d)] = count;
  }
  return HilbertFunction(std::move(values));
}

std::vector<long long> hilbertSeriesNumerator(const MonomialIdeal& ideal) {
  // The numerator has degree at most deg lcm(generators), so the truncated
  // product HF * (1-z)^n up to that degree is the whole numerator.
  Monomial top = Monomial::one(ideal.nvars());
  for (const auto& g : ideal.generators())
    top = top.lcm(g);
  const HilbertFunction h = hilbertFunctionMonomial(ideal, top.degree());
  std::vector<long long> out = seriesTransform(h, static_cast<int>(ideal.nvars())).values;
  while (out.size() > 1 && out.back() == 0)
    out.pop_back();
  return out;
}

std::vector<MonomialIdeal> sliceLastVariable(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (n == 0)
    fail(ErrorKind::InvalidInput, "cannot slice an ideal in zero variables");
  int top = 0;
  for (const auto& g : ideal.generators())
    top = std::max(top, g[n - 1]);
  std::vector<MonomialIdeal> slices;
  slices.reserve(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators())
      if (g[n - 1] <= d) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end() - 1);
        gens.emplace_back(std::move(e));
      }
    slices.push_back(minimalize(std::move(gens), n - 1));
  }
  return slices;
}

bool isXnStable(const MonomialIdeal& ideal, std::optional<int> e) {
  const std::size_t n = ideal.nvars();
  if (n == 0)
    fail(ErrorKind::InvalidInput, "stability needs at least one variable");
  if (e) {
    if (*e < 1)
      fail(ErrorKind::InvalidInput, "e must be positive");
    if (!ideal.contains(Monomial::variable(n, n - 1, *e)))
      fail(ErrorKind::InvalidInput, "x_n^e is not in the ideal");
  }
  const auto slices = sliceLastVariable(ideal);
  const int last = static_cast<int>(slices.size()) - 1;
  auto slice = [&](int k) -> const MonomialIdeal& { return slices[static_cast<std::size_t>(std::min(k, last))]; };
  // Beyond the stabilization index consecutive slices coincide and the
  // inclusion is automatic.
  int kMax = last - 1;
  if (e)
    kMax = std::min(kMax, *e - 2);
  for (int k = 0; k <= kMax; ++k) {
    const MonomialIdeal& upper = slice(k + 1);
    const MonomialIdeal& lower = slice(k);
    for (const auto& g : upper.generators())
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (!lower.contains(g * Monomial::variable(n - 1, i)))
          return false;
  }
  return true;
}

HilbertFunction seriesTransform(const HilbertFunction& h, int r) {
  std::vector<long long> v = h.values;
  if (r >= 0) {
    for (int t = 0; t < r; ++t)
      for (std::size_t d = v.size(); d-- > 1;)
        v[d] -= v[d - 1];
  } else {
    for (int t = 0; t < -r; ++t)
      for (std::size_t d = 1; d < v.size(); ++d)
        v[d] += v[d - 1];
  }
  return HilbertFunction(std::move(v));
}

std::string toString(const Monomial& m) {
  if (m.isOne())
    return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0)
      continue;
    if (!first)
      out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (m[i] > 1)
      out << '^' << m[i];
  }
  return out.str();
}

std::string toString(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    out << (i ? ", " : "") << toString(ideal.generators()[i]);
  out << ')';
  return out.str();
}

Monomial parseMonomial(const std::string& text, std::size_t n) {
  std::vector<int> e(n, 0);
  std::size_t pos = 0;
  auto skipSpace = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto readInt = [&]() -> long long {
    skipSpace();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos || pos - start > 9)
      fail(ErrorKind::InvalidInput, "expected a number in monomial '" + text + "'");
    return std::stoll(text.substr(start, pos - start));
  };
  skipSpace();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skipSpace();
    if (pos != text.size())
      fail(ErrorKind::InvalidInput, "trailing characters in monomial '" + text + "'");
    return Monomial(std::move(e));
  }
  while (true) {
    skipSpace();
    if (pos >= text.size() || text[pos] != 'x')
      fail(ErrorKind::InvalidInput, "expected a variable in monomial '" + text + "'");
    ++pos;
    long long var = readInt();
    if (var < 1 || static_cast<std::size_t>(var) > n)
      fail(ErrorKind::InvalidInput, "variable index out of range in '" + text + "'");
    long long power = 1;
    skipSpace();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = readInt();
    }
    e[static_cast<std::size_t>(var - 1)] += static_cast<int>(power);
    skipSpace();
    if (pos == text.size())
      break;
    if (text[pos] != '*')
      fail(ErrorKind::InvalidInput, "unexpected character in monomial '" + text + "'");
    ++pos;
  }
  return Monomial(std::move(e));
}

} // namespace lexdist
