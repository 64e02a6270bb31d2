#include "lexdist/groebner.hpp"

#include "lexdist/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lexdist {

namespace {

/// Terms sorted by descending monomial order; the working representation
/// of the reduction engine.
struct OrderedPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

OrderedPoly toOrdered(const Polynomial& f, const MonomialOrder& order) {
  OrderedPoly p{f.terms()};
  std::sort(p.terms.begin(), p.terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return p;
}

Polynomial fromOrdered(const OrderedPoly& p, std::size_t n, const PrimeField& field) {
  return Polynomial(n, field, p.terms);
}

/// Returns a[from..] - c * m * b, both sorted for `order`.
std::vector<Term> subtractMultiple(const std::vector<Term>& a, std::size_t from, Coeff c, const Monomial& m,
                                   const std::vector<Term>& b, const MonomialOrder& order,
                                   const PrimeField& field) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial shifted = b[j].monomial * m;
    int cmp = i == a.size() ? -1 : order.compare(a[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), field.neg(field.mul(c, b[j].coeff))});
      ++j;
    } else {
      Coeff v = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (v != 0)
        out.push_back({std::move(shifted), v});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of f by monic divisors.
OrderedPoly reduceFully(OrderedPoly f, const std::vector<OrderedPoly>& divisors, const MonomialOrder& order,
                        const PrimeField& field) {
  OrderedPoly remainder;
  std::vector<Term> work = std::move(f.terms);
  std::size_t head = 0;
  while (head < work.size()) {
    const Term lead = work[head];
    const OrderedPoly* divisor = nullptr;
    for (const auto& g : divisors)
      if (g.lead().monomial.divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      remainder.terms.push_back(lead);
      ++head;
      continue;
    }
    const Coeff c = field.mul(lead.coeff, field.inv(divisor->lead().coeff));
    work = subtractMultiple(work, head, c, lead.monomial.divide(divisor->lead().monomial), divisor->terms,
                            order, field);
    head = 0;
  }
  return remainder;
}

OrderedPoly makeMonic(OrderedPoly p, const PrimeField& field) {
  if (p.empty())
    return p;
  const Coeff s = field.inv(p.lead().coeff);
  for (auto& t : p.terms)
    t.coeff = field.mul(t.coeff, s);
  return p;
}

OrderedPoly sPolynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order,
                        const PrimeField& field) {
  const Monomial l = f.lead().monomial.lcm(g.lead().monomial);
  // Both inputs are monic.
  std::vector<Term> scaledF;
  const Monomial mf = l.divide(f.lead().monomial);
  scaledF.reserve(f.terms.size());
  for (const auto& t : f.terms)
    scaledF.push_back({t.monomial * mf, t.coeff});
  OrderedPoly s{subtractMultiple(scaledF, 0, 1, l.divide(g.lead().monomial), g.terms, order, field)};
  return s;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<OrderedPoly> groebnerCore(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                      const PrimeField& field) {
  std::vector<OrderedPoly> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pendingKeys;

  auto addElement = [&](OrderedPoly p) {
    const std::size_t k = basis.size();
    basis.push_back(makeMonic(std::move(p), field));
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, basis[i].lead().monomial.lcm(basis[k].lead().monomial)});
      pendingKeys.insert({i, k});
    }
  };

  {
    // Seed with the input in ascending order, each reduced by the previous.
    std::vector<OrderedPoly> seeds;
    for (const auto& g : gens)
      if (!g.isZero())
        seeds.push_back(toOrdered(g, order));
    std::sort(seeds.begin(), seeds.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
      return order.compare(a.lead().monomial, b.lead().monomial) < 0;
    });
    for (auto& s : seeds) {
      OrderedPoly r = reduceFully(std::move(s), basis, order, field);
      if (!r.empty())
        addElement(std::move(r));
    }
  }

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree())
        return a.lcm.degree() < b.lcm.degree();
      int cmp = order.compare(a.lcm, b.lcm);
      if (cmp != 0)
        return cmp < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair pair = *best;
    pending.erase(best);
    pendingKeys.erase({pair.i, pair.j});

    const Monomial& li = basis[pair.i].lead().monomial;
    const Monomial& lj = basis[pair.j].lead().monomial;
    if (li.gcd(lj).isOne())
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || !basis[k].lead().monomial.divides(pair.lcm))
        continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pendingKeys.count(key(pair.i, k)) && !pendingKeys.count(key(pair.j, k));
    }
    if (chain)
      continue;
    OrderedPoly r = reduceFully(sPolynomial(basis[pair.i], basis[pair.j], order, field), basis, order, field);
    if (!r.empty())
      addElement(std::move(r));
  }

  // Inter-reduce to the reduced basis.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j)
        continue;
      const Monomial& a = basis[j].lead().monomial;
      const Monomial& b = basis[i].lead().monomial;
      redundant = a.divides(b) && (a != b || j < i);
    }
    if (!redundant)
      minimal.push_back(basis[i]);
  }
  std::vector<OrderedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    OrderedPoly tail{std::vector<Term>(minimal[i].terms.begin() + 1, minimal[i].terms.end())};
    OrderedPoly r = reduceFully(std::move(tail), others, order, field);
    OrderedPoly full;
    full.terms.push_back(minimal[i].lead());
    full.terms.insert(full.terms.end(), r.terms.begin(), r.terms.end());
    reduced.push_back(makeMonic(std::move(full), field));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.compare(a.lead().monomial, b.lead().monomial) < 0;
  });
  return reduced;
}

Polynomial permuteVariables(const Polynomial& f, std::size_t a, std::size_t b) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e = t.monomial.exponents();
    std::swap(e[a], e[b]);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(f.nvars(), f.field(), std::move(terms));
}

/// Generators with x_i last-variable degrevlex basis, each divided by the
/// largest power of x_i (all powers when `once` is false, one otherwise).
std::vector<Polynomial> divideOutVariable(const Ideal& ideal, std::size_t i, bool once) {
  const std::size_t n = ideal.nvars();
  const std::size_t last = n - 1;
  std::vector<Polynomial> swapped;
  for (const auto& g : ideal.generators())
    swapped.push_back(permuteVariables(g, i, last));
  Ideal permuted(n, ideal.field(), std::move(swapped));
  std::vector<Polynomial> out;
  for (const auto& g : permuted.groebnerBasis(MonomialOrder::degrevlex())) {
    int common = g.terms().front().monomial[last];
    for (const auto& t : g.terms())
      common = std::min(common, t.monomial[last]);
    if (once)
      common = std::min(common, 1);
    Polynomial q = g;
    if (common > 0) {
      std::vector<Term> terms;
      const Monomial divisor = Monomial::variable(n, last, common);
      for (const auto& t : g.terms())
        terms.push_back({t.monomial.divide(divisor), t.coeff});
      q = Polynomial(n, g.field(), std::move(terms));
    }
    out.push_back(permuteVariables(q, i, last));
  }
  return out;
}

} // namespace

Ideal::Ideal(std::size_t n, PrimeField field, std::vector<Polynomial> generators)
  : mN(n), mField(field), mCache(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.nvars() != n)
      fail(ErrorKind::InvalidInput, "generator has the wrong number of variables");
    if (g.field() != field)
      fail(ErrorKind::InvalidInput, "generator lives over a different field");
    if (!g.isHomogeneous())
      fail(ErrorKind::InvalidInput, "ideal generators must be homogeneous: " + toString(g));
    if (!g.isZero())
      mGens.push_back(std::move(g));
  }
}

Ideal Ideal::fromMonomialIdeal(const MonomialIdeal& ideal, PrimeField field) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(Polynomial::monomial(g, field));
  return Ideal(ideal.nvars(), field, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebnerBasis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(mCache->mutex);
  for (const auto& [o, basis] : mCache->entries)
    if (o == order)
      return *basis;
  auto basis = std::make_shared<const std::vector<Polynomial>>(detail::reducedGroebnerBasis(mGens, order));
  mCache->entries.emplace_back(order, basis);
  return *basis;
}

namespace detail {

std::vector<Polynomial> reducedGroebnerBasis(std::vector<Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty())
    return {};
  const std::size_t n = gens.front().nvars();
  const PrimeField field = gens.front().field();
  std::vector<Polynomial> out;
  for (const auto& p : groebnerCore(gens, order, field))
    out.push_back(fromOrdered(p, n, field));
  return out;
}

} // namespace detail

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  std::vector<OrderedPoly> ordered;
  for (const auto& g : divisors) {
    if (g.nvars() != f.nvars() || g.field() != f.field())
      fail(ErrorKind::InvalidInput, "divisor lives in a different ring");
    if (!g.isZero())
      ordered.push_back(toOrdered(g, order));
  }
  return fromOrdered(reduceFully(toOrdered(f, order), ordered, order, f.field()), f.nvars(), f.field());
}

std::vector<Polynomial> buchberger(const Ideal& ideal, const MonomialOrder& order) {
  return ideal.groebnerBasis(order);
}

MonomialIdeal initialIdeal(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebnerBasis(order))
    leads.push_back(g.leadingTerm(order).monomial);
  return minimalize(std::move(leads), ideal.nvars());
}

Polynomial initialForm(const Polynomial& f, const std::vector<long long>& weight) {
  if (f.isZero())
    return f;
  const MonomialOrder w = MonomialOrder::weighted(weight);
  long long top = w.weightOf(f.terms().front().monomial);
  for (const auto& t : f.terms())
    top = std::max(top, w.weightOf(t.monomial));
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (w.weightOf(t.monomial) == top)
      terms.push_back(t);
  return Polynomial(f.nvars(), f.field(), std::move(terms));
}

Ideal initialFormsIdeal(const Ideal& ideal, const std::vector<long long>& weight) {
  if (weight.size() != ideal.nvars())
    fail(ErrorKind::InvalidInput, "weight vector length does not match the ring");
  const MonomialOrder order = MonomialOrder::weighted(weight, MonomialOrder::Kind::Degrevlex);
  std::vector<Polynomial> forms;
  for (const auto& g : ideal.groebnerBasis(order))
    forms.push_back(initialForm(g, weight));
  return Ideal(ideal.nvars(), ideal.field(), std::move(forms));
}

HilbertFunction hilbertFunctionGeneral(const Ideal& ideal, int dmax) {
  return hilbertFunctionMonomial(initialIdeal(ideal, MonomialOrder::degrevlex()), dmax);
}

bool idealContains(const Ideal& ideal, const Polynomial& f) {
  const MonomialOrder order = MonomialOrder::degrevlex();
  return normalForm(f, ideal.groebnerBasis(order), order).isZero();
}

bool isSubideal(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators())
    if (!idealContains(b, g))
      return false;
  return true;
}

Ideal idealSum(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars() || a.field() != b.field())
    fail(ErrorKind::InvalidInput, "ideals live in different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.nvars(), a.field(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars() || a.field() != b.field())
    fail(ErrorKind::InvalidInput, "ideals live in different rings");
  const std::size_t n = a.nvars();
  const PrimeField& field = a.field();
  // t*a + (1-t)*b in one extra (last) variable t, eliminated by weight.
  auto lift = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms())
      terms.push_back({t.monomial.resized(n + 1), t.coeff});
    return Polynomial(n + 1, field, std::move(terms));
  };
  const Polynomial t = Polynomial::monomial(Monomial::variable(n + 1, n), field);
  const Polynomial oneMinusT = Polynomial::constant(n + 1, field, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    gens.push_back(t * lift(f));
  for (const auto& g : b.generators())
    gens.push_back(oneMinusT * lift(g));
  std::vector<long long> weight(n + 1, 0);
  weight[n] = 1;
  std::vector<Polynomial> result;
  for (const auto& g : detail::reducedGroebnerBasis(gens, MonomialOrder::weighted(weight))) {
    bool hasT = false;
    for (const auto& term : g.terms())
      hasT = hasT || term.monomial[n] > 0;
    if (hasT)
      continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms())
      terms.push_back({term.monomial.resized(n), term.coeff});
    result.emplace_back(n, field, std::move(terms));
  }
  return Ideal(n, field, std::move(result));
}

Ideal colonByVariable(const Ideal& ideal, std::size_t i) {
  if (i >= ideal.nvars())
    fail(ErrorKind::InvalidInput, "variable index out of range");
  return Ideal(ideal.nvars(), ideal.field(), divideOutVariable(ideal, i, true));
}

Ideal saturateByVariable(const Ideal& ideal, std::size_t i) {
  if (i >= ideal.nvars())
    fail(ErrorKind::InvalidInput, "variable index out of range");
  return Ideal(ideal.nvars(), ideal.field(), divideOutVariable(ideal, i, false));
}

Ideal saturateMaximal(const Ideal& ideal) {
  if (ideal.nvars() == 0)
    return ideal;
  Ideal result = saturateByVariable(ideal, 0);
  for (std::size_t i = 1; i < ideal.nvars(); ++i)
    result = intersect(result, saturateByVariable(ideal, i));
  return result;
}

HilbertFunction h0HilbertFunction(const Ideal& ideal, int dmax) {
  const HilbertFunction whole = hilbertFunctionGeneral(ideal, dmax);
  const HilbertFunction saturated = hilbertFunctionGeneral(saturateMaximal(ideal), dmax);
  std::vector<long long> values(whole.values.size());
  for (std::size_t d = 0; d < values.size(); ++d)
    values[d] = whole.values[d] - saturated.values[d];
  return HilbertFunction(std::move(values));
}

LinearChange LinearChange::identity(std::size_t n) {
  LinearChange g;
  g.matrix.assign(n, std::vector<Coeff>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    g.matrix[i][i] = 1;
  return g;
}

bool isInvertible(const LinearChange& g, const PrimeField& field) {
  const std::size_t n = g.matrix.size();
  FieldMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (g.matrix[r].size() != n)
      return false;
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = g.matrix[r][c] % field.characteristic();
  }
  return m.rank(field) == n;
}

Polynomial applyLinearChange(const LinearChange& g, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (g.matrix.size() != n)
    fail(ErrorKind::InvalidInput, "linear change has the wrong size");
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < n; ++k)
      terms.push_back({Monomial::variable(n, k), g.matrix[j][k]});
    images.emplace_back(n, f.field(), std::move(terms));
  }
  return f.substitute(images);
}

Ideal applyLinearChange(const LinearChange& g, const Ideal& ideal) {
  if (!isInvertible(g, ideal.field()))
    fail(ErrorKind::InvalidInput, "linear change of coordinates is singular");
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators())
    gens.push_back(applyLinearChange(g, f));
  return Ideal(ideal.nvars(), ideal.field(), std::move(gens));
}

} // namespace lexdist
