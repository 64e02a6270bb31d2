#include "lexdist/cli.hpp"
#include "lexdist/distraction.hpp"
#include "lexdist/error.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/json_io.hpp"
#include "lexdist/macaulay.hpp"
#include "lexdist/shakin.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lexdist;

using Exponents = std::vector<std::vector<int>>;
using Table = std::map<std::pair<int, int>, long long>;

namespace {

MonomialIdeal toIdeal(std::size_t n, const Exponents& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    if (g.size() != n)
      fail(ErrorKind::InvalidInput, "every exponent vector needs " + std::to_string(n) + " entries");
    for (int e : g)
      if (e < 0)
        fail(ErrorKind::InvalidInput, "exponents must be nonnegative");
    ms.emplace_back(g);
  }
  return minimalize(std::move(ms), n);
}

Exponents fromIdeal(const MonomialIdeal& ideal) {
  Exponents out;
  for (const auto& g : ideal.generators())
    out.push_back(g.exponents());
  return out;
}

ShakinIdeal toShakin(std::size_t n, const std::vector<std::pair<std::size_t, Exponents>>& pieces,
                     std::vector<int> powers) {
  std::vector<LexPiece> lex;
  for (const auto& [vars, gens] : pieces)
    lex.push_back({vars, toIdeal(vars, gens)});
  return makeShakin(makePiecewiseLex(n, std::move(lex)), std::move(powers));
}

Ideal toGeneralIdeal(std::size_t n, const std::vector<std::string>& gens, std::uint32_t p) {
  const PrimeField field(p);
  std::vector<Polynomial> polys;
  for (const auto& g : gens)
    polys.push_back(parsePolynomial(g, n, field));
  return Ideal(n, field, std::move(polys));
}

DistractionMatrix toDistraction(std::size_t n, const std::vector<std::vector<std::vector<long long>>>& rows,
                                std::uint32_t p) {
  const PrimeField field(p);
  std::vector<std::vector<LinearForm>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& c : row) {
      LinearForm form;
      for (long long v : c)
        form.coefficients.push_back(field.fromInt(v));
      r.push_back(std::move(form));
    }
  }
  return DistractionMatrix(n, field, std::move(out));
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys)
    out.push_back(toString(p));
  return out;
}

} // namespace

PYBIND11_MODULE(_lexdist, m) {
  m.doc() = "Monomial ideals, lex-embeddings, distractions and their homological invariants";

  static py::exception<Error> lexdistError(m, "LexdistError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = lexdistError;
      py::object instance = err(std::string(e.what()));
      instance.attr("kind") = errorKindName(e.kind());
      instance.attr("degree") = e.degree() >= 0 ? py::object(py::int_(e.degree())) : py::object(py::none());
      PyErr_SetObject(err.ptr(), instance.ptr());
    }
  });

  m.attr("DEFAULT_CHARACTERISTIC") = kDefaultCharacteristic;

  m.def(
      "minimalize", [](std::size_t n, const Exponents& gens) { return fromIdeal(toIdeal(n, gens)); }, py::arg("n"),
      py::arg("gens"));

  m.def(
      "hilbert_function",
      [](std::size_t n, const Exponents& gens, int dmax) { return hilbertFunctionMonomial(toIdeal(n, gens), dmax).values; },
      py::arg("n"), py::arg("gens"), py::arg("dmax"));

  m.def(
      "hilbert_function_general",
      [](std::size_t n, const std::vector<std::string>& gens, int dmax, std::uint32_t p) {
        return hilbertFunctionGeneral(toGeneralIdeal(n, gens, p), dmax).values;
      },
      py::arg("n"), py::arg("gens"), py::arg("dmax"), py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "is_o_sequence",
      [](const std::vector<long long>& h, std::size_t n) { return isOSequence(HilbertFunction(h), n); }, py::arg("h"),
      py::arg("n"));

  m.def(
      "lex_ideal",
      [](std::size_t n, const std::vector<long long>& h) { return fromIdeal(lexIdealForHF(n, HilbertFunction(h))); },
      py::arg("n"), py::arg("h"));

  m.def(
      "lex_embed",
      [](std::size_t n, const std::vector<std::pair<std::size_t, Exponents>>& pieces, std::vector<int> powers,
         const std::vector<long long>& h, std::optional<int> dmax) {
        const HilbertFunction hf(h);
        return fromIdeal(lexEmbed(toShakin(n, pieces, std::move(powers)), hf, dmax.value_or(hf.dmax())));
      },
      py::arg("n"), py::arg("pieces"), py::arg("powers"), py::arg("h"), py::arg("dmax") = py::none());

  m.def(
      "groebner_basis",
      [](std::size_t n, const std::vector<std::string>& gens, const std::string& order, std::uint32_t p) {
        const Ideal ideal = toGeneralIdeal(n, gens, p);
        if (order != "lex" && order != "degrevlex")
          fail(ErrorKind::InvalidInput, "order must be lex or degrevlex");
        return strings(ideal.groebnerBasis(order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex()));
      },
      py::arg("n"), py::arg("gens"), py::arg("order") = "degrevlex",
      py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "distract",
      [](std::size_t n, const std::vector<std::vector<std::vector<long long>>>& rows, const Exponents& gens,
         std::uint32_t p) {
        const auto d = toDistraction(n, rows, p);
        const auto check = validateDistraction(d);
        if (!check.valid)
          fail(ErrorKind::InvalidInput, "the rows do not form a distraction");
        return strings(distractIdeal(d, toIdeal(n, gens)).generators());
      },
      py::arg("n"), py::arg("rows"), py::arg("gens"), py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "polarize",
      [](std::size_t n, const Exponents& gens) {
        const auto p = polarize(toIdeal(n, gens));
        return py::make_tuple(p.extendedVarCount, fromIdeal(p.polarizedIdeal));
      },
      py::arg("n"), py::arg("gens"));

  m.def(
      "betti_numbers",
      [](std::size_t n, const Exponents& gens, int dmax, std::uint32_t p, const std::string& oracle) -> Table {
        const auto ideal = toIdeal(n, gens);
        if (oracle == "taylor")
          return taylorBettiOracle(ideal, dmax, PrimeField(p)).entries;
        if (oracle != "koszul")
          fail(ErrorKind::InvalidInput, "oracle must be koszul or taylor");
        return koszulBetti(ideal, dmax, PrimeField(p)).entries;
      },
      py::arg("n"), py::arg("gens"), py::arg("dmax"), py::arg("characteristic") = kDefaultCharacteristic,
      py::arg("oracle") = "koszul");

  m.def(
      "betti_numbers_general",
      [](std::size_t n, const std::vector<std::string>& gens, int dmax, std::uint32_t p) -> Table {
        return koszulBetti(toGeneralIdeal(n, gens, p), dmax).entries;
      },
      py::arg("n"), py::arg("gens"), py::arg("dmax"), py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "local_cohomology",
      [](std::size_t n, const Exponents& gens, int jmin, int jmax, std::uint32_t p) -> Table {
        return localCohMonomial(toIdeal(n, gens), {jmin, jmax}, PrimeField(p)).entries;
      },
      py::arg("n"), py::arg("gens"), py::arg("jmin"), py::arg("jmax"),
      py::arg("characteristic") = kDefaultCharacteristic);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
