#include "lexdist/distraction.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <string>

namespace lexdist {

bool LinearForm::isZero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](Coeff c) { return c == 0; });
}

Polynomial LinearForm::toPolynomial(const PrimeField& field) const {
  const std::size_t n = coefficients.size();
  std::vector<Term> terms;
  for (std::size_t k = 0; k < n; ++k)
    if (coefficients[k] != 0)
      terms.push_back({Monomial::variable(n, k), coefficients[k]});
  return Polynomial(n, field, std::move(terms));
}

LinearForm variableForm(std::size_t n, std::size_t i) {
  LinearForm f{std::vector<Coeff>(n, 0)};
  f.coefficients[i] = 1;
  return f;
}

DistractionMatrix::DistractionMatrix(std::size_t n, PrimeField field, std::vector<std::vector<LinearForm>> rows)
  : mN(n), mField(field), mRows(std::move(rows)) {
  if (mRows.size() != n)
    fail(ErrorKind::InvalidInput, "a distraction needs exactly one row per variable");
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = mRows[i];
    if (row.empty())
      fail(ErrorKind::InvalidInput, "distraction row " + std::to_string(i + 1) + " is empty");
    for (auto& form : row) {
      if (form.coefficients.size() != n)
        fail(ErrorKind::InvalidInput, "linear form in row " + std::to_string(i + 1) + " has the wrong length");
      for (auto& c : form.coefficients)
        c %= field.characteristic();
      if (form.isZero())
        fail(ErrorKind::InvalidInput, "linear form in row " + std::to_string(i + 1) + " is zero");
    }
    while (row.size() > 1 && row[row.size() - 1] == row[row.size() - 2])
      row.pop_back();
  }
}

DistractionMatrix DistractionMatrix::identity(std::size_t n, PrimeField field) {
  std::vector<std::vector<LinearForm>> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back({variableForm(n, i)});
  return DistractionMatrix(n, field, std::move(rows));
}

const LinearForm& DistractionMatrix::entry(std::size_t i, std::size_t j) const {
  const auto& row = mRows.at(i);
  return row[std::min(j, row.size() - 1)];
}

std::size_t DistractionMatrix::stabilization() const {
  std::size_t s = 0;
  for (const auto& row : mRows)
    s = std::max(s, row.size() - 1);
  return s;
}

DistractionCheck validateDistraction(const DistractionMatrix& d) {
  const std::size_t n = d.nvars();
  DistractionCheck result;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        m.at(i, k) = d.entry(i, pick[i]).coefficients[k];
    if (m.rank(d.field()) < n) {
      result.valid = false;
      result.failingSelection = pick;
      return result;
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == d.rows()[i].size())
      pick[i++] = 0;
    if (i == n)
      return result;
  }
}

Polynomial applyDistraction(const DistractionMatrix& d, const Monomial& m) {
  const std::size_t n = d.nvars();
  if (m.nvars() != n)
    fail(ErrorKind::InvalidInput, "monomial does not live in the distraction's ring");
  Polynomial product = Polynomial::constant(n, d.field(), 1);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < m[i]; ++j)
      product = product * d.entry(i, static_cast<std::size_t>(j)).toPolynomial(d.field());
  return product;
}

Ideal distractIdeal(const DistractionMatrix& d, const MonomialIdeal& ideal) {
  if (ideal.nvars() != d.nvars())
    fail(ErrorKind::InvalidInput, "ideal does not live in the distraction's ring");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(applyDistraction(d, g));
  return Ideal(d.nvars(), d.field(), std::move(gens));
}

DistractionMatrix induceBar(const DistractionMatrix& d) {
  const std::size_t n = d.nvars();
  if (n < 2)
    fail(ErrorKind::InvalidInput, "induced distraction needs at least two variables");
  const LinearForm& head = d.entry(n - 1, 0);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (head.coefficients[k] != 0)
      fail(ErrorKind::InvalidInput, "the first entry of the last row must be a multiple of x_n");
  std::vector<std::vector<LinearForm>> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto& row = rows.emplace_back();
    for (const auto& form : d.rows()[i]) {
      LinearForm reduced{std::vector<Coeff>(form.coefficients.begin(), form.coefficients.end() - 1)};
      if (reduced.isZero())
        fail(ErrorKind::InternalError, "induced distraction has a zero entry in row " + std::to_string(i + 1));
      row.push_back(std::move(reduced));
    }
  }
  DistractionMatrix bar(n - 1, d.field(), std::move(rows));
  if (!validateDistraction(bar).valid)
    fail(ErrorKind::InternalError, "induced rows do not form a distraction");
  return bar;
}

DistractionMatrix randomDistraction(std::size_t n, PrimeField field, std::size_t length, std::mt19937_64& rng) {
  if (n == 0 || length == 0)
    fail(ErrorKind::InvalidInput, "random distraction needs n >= 1 and length >= 1");
  const std::uint32_t p = field.characteristic();
  std::uniform_int_distribution<std::uint32_t> nonzero(1, p - 1);
  std::uniform_int_distribution<std::uint32_t> any(0, p - 1);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  while (true) {
    std::vector<std::vector<LinearForm>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < length; ++j) {
        LinearForm f{std::vector<Coeff>(n, 0)};
        f.coefficients[i] = nonzero(rng);
        const std::size_t k = var(rng);
        f.coefficients[k] = field.add(f.coefficients[k], any(rng));
        if (f.isZero())
          f.coefficients[i] = 1;
        rows[i].push_back(std::move(f));
      }
    DistractionMatrix d(n, field, std::move(rows));
    if (validateDistraction(d).valid)
      return d;
  }
}

namespace {

PolarizationResult polarizeCore(const MonomialIdeal& ideal, const PrimeField& field) {
  const std::size_t n = ideal.nvars();
  PolarizationResult p;
  p.baseVars = n;
  p.r.assign(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i)
      p.r[i] = std::max(p.r[i], g[i]);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    p.offset.push_back(total);
    total += static_cast<std::size_t>(p.r[i]);
  }
  p.extendedVarCount = n + total;
  const std::size_t big = p.extendedVarCount;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(big, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < g[i]; ++j)
        e[p.variableIndex(i, static_cast<std::size_t>(j))] = 1;
    gens.emplace_back(std::move(e));
  }
  p.polarizedIdeal = minimalize(std::move(gens), big);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < p.r[i]; ++j) {
      const std::size_t x = p.variableIndex(i, static_cast<std::size_t>(j));
      p.specializationX.push_back(Polynomial(
          big, field, {{Monomial::variable(big, i), 1}, {Monomial::variable(big, x), field.neg(1)}}));
    }
  return p;
}

} // namespace

PolarizationResult polarize(const MonomialIdeal& ideal, PrimeField field) { return polarizeCore(ideal, field); }

PolarizationResult polarize(const MonomialIdeal& ideal, const DistractionMatrix& d) {
  if (ideal.nvars() != d.nvars())
    fail(ErrorKind::InvalidInput, "ideal does not live in the distraction's ring");
  PolarizationResult p = polarizeCore(ideal, d.field());
  const std::size_t n = ideal.nvars();
  const std::size_t big = p.extendedVarCount;
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < p.r[i]; ++j) {
      const LinearForm& l = d.entry(i, static_cast<std::size_t>(j));
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k)
        terms.push_back({Monomial::variable(big, k), l.coefficients[k]});
      terms.push_back({Monomial::variable(big, p.variableIndex(i, static_cast<std::size_t>(j))), d.field().neg(1)});
      p.specializationL.emplace_back(big, d.field(), std::move(terms));
    }
  return p;
}

MonomialIdeal specializeX(const PolarizationResult& p) {
  std::vector<Monomial> gens;
  for (const auto& g : p.polarizedIdeal.generators()) {
    std::vector<int> e(p.baseVars, 0);
    for (std::size_t i = 0; i < p.baseVars; ++i) {
      e[i] += g[i];
      for (int j = 0; j < p.r[i]; ++j)
        e[i] += g[p.variableIndex(i, static_cast<std::size_t>(j))];
    }
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), p.baseVars);
}

std::vector<Polynomial> specializeL(const PolarizationResult& p, const DistractionMatrix& d) {
  const std::size_t n = p.baseVars;
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < p.extendedVarCount; ++v)
    images.push_back(Polynomial::monomial(Monomial::variable(n, v < n ? v : 0), d.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < p.r[i]; ++j)
      images[p.variableIndex(i, static_cast<std::size_t>(j))] =
          d.entry(i, static_cast<std::size_t>(j)).toPolynomial(d.field());
  std::vector<Polynomial> out;
  for (const auto& g : p.polarizedIdeal.generators())
    out.push_back(Polynomial::monomial(g, d.field()).substitute(images));
  return out;
}

} // namespace lexdist
