#include "lexdist/json_io.hpp"

#include "lexdist/error.hpp"

#include <string>

namespace lexdist {

namespace {

void checkVersion(const Json& j) {
  if (!j.is_object())
    fail(ErrorKind::InvalidInput, "expected a JSON object");
  if (j.contains("v") && j.at("v") != kSchemaVersion)
    fail(ErrorKind::InvalidInput, "unsupported schema version " + j.at("v").dump());
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key))
    fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::InvalidInput, std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Monomial> monomialsFromJson(const Json& gens, std::size_t n) {
  if (!gens.is_array())
    fail(ErrorKind::InvalidInput, "'gens' must be an array");
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (g.is_string()) {
      out.push_back(parseMonomial(g.get<std::string>(), n));
      continue;
    }
    std::vector<int> e;
    try {
      e = g.get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      fail(ErrorKind::InvalidInput, "generator " + g.dump() + " is not an exponent array");
    }
    if (e.size() != n)
      fail(ErrorKind::InvalidInput, "generator " + g.dump() + " does not have " + std::to_string(n) + " exponents");
    for (int x : e)
      if (x < 0)
        fail(ErrorKind::InvalidInput, "negative exponent in " + g.dump());
    out.emplace_back(std::move(e));
  }
  return out;
}

Json tableEntries(const std::map<std::pair<int, int>, long long>& entries) {
  Json out = Json::object();
  for (const auto& [key, value] : entries)
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  return out;
}

} // namespace

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json toJson(const Monomial& m) { return m.exponents(); }

Json toJson(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(toJson(g));
  return {{"v", kSchemaVersion}, {"n", ideal.nvars()}, {"gens", gens}};
}

MonomialIdeal monomialIdealFromJson(const Json& j) {
  checkVersion(j);
  const auto n = field<long long>(j, "n");
  if (n < 0 || n > 64)
    fail(ErrorKind::InvalidInput, "'n' must lie in 0..64");
  const auto size = static_cast<std::size_t>(n);
  return minimalize(monomialsFromJson(j.contains("gens") ? j.at("gens") : Json::array(), size), size);
}

Json toJson(const HilbertFunction& h) {
  return {{"v", kSchemaVersion}, {"dmax", h.dmax()}, {"values", h.values}};
}

HilbertFunction hilbertFunctionFromJson(const Json& j) {
  const Json& values = j.is_object() ? (checkVersion(j), j.contains("values") ? j.at("values") : Json())
                                     : j;
  if (!values.is_array() || values.empty())
    fail(ErrorKind::InvalidInput, "a Hilbert function is a nonempty array of integers");
  try {
    return HilbertFunction(values.get<std::vector<long long>>());
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::InvalidInput, "a Hilbert function is a nonempty array of integers");
  }
}

Json toJson(const ShakinIdeal& a) {
  Json pieces = Json::array();
  for (const auto& piece : a.lexPart().pieces()) {
    Json gens = Json::array();
    for (const auto& g : piece.ideal.generators())
      gens.push_back(toJson(g));
    pieces.push_back({{"i", piece.vars}, {"gens", gens}});
  }
  return {{"v", kSchemaVersion}, {"n", a.nvars()},         {"pieces", pieces},
          {"powers", a.powerDegrees()}, {"total", toJson(a.total())}};
}

ShakinIdeal shakinFromJson(const Json& j) {
  checkVersion(j);
  const auto n = field<long long>(j, "n");
  if (n < 1 || n > 64)
    fail(ErrorKind::InvalidInput, "'n' must lie in 1..64");
  const auto size = static_cast<std::size_t>(n);
  std::vector<LexPiece> pieces;
  if (j.contains("pieces")) {
    if (!j.at("pieces").is_array())
      fail(ErrorKind::InvalidInput, "'pieces' must be an array");
    for (const auto& p : j.at("pieces")) {
      checkVersion(p);
      const auto i = field<long long>(p, "i");
      if (i < 1 || i > n)
        fail(ErrorKind::InvalidInput, "piece subring index " + std::to_string(i) + " outside 1..n");
      const auto vars = static_cast<std::size_t>(i);
      pieces.push_back({vars, minimalize(monomialsFromJson(p.contains("gens") ? p.at("gens") : Json::array(), vars),
                                         vars)});
    }
  }
  std::vector<int> powers;
  if (j.contains("powers"))
    powers = field<std::vector<int>>(j, "powers");
  return makeShakin(makePiecewiseLex(size, std::move(pieces)), std::move(powers));
}

Json toJson(const DistractionMatrix& d) {
  Json rows = Json::array();
  for (const auto& row : d.rows()) {
    Json r = Json::array();
    for (const auto& form : row)
      r.push_back({{"c", form.coefficients}});
    rows.push_back(r);
  }
  return {{"v", kSchemaVersion}, {"n", d.nvars()}, {"char", d.field().characteristic()}, {"rows", rows}};
}

DistractionMatrix distractionFromJson(const Json& j, PrimeField fieldSpec) {
  checkVersion(j);
  const auto n = field<long long>(j, "n");
  if (n < 1 || n > 64)
    fail(ErrorKind::InvalidInput, "'n' must lie in 1..64");
  if (j.contains("char"))
    fieldSpec = PrimeField(field<std::uint32_t>(j, "char"));
  const Json& rowsJson = j.contains("rows") ? j.at("rows") : Json();
  if (!rowsJson.is_array())
    fail(ErrorKind::InvalidInput, "'rows' must be an array");
  std::vector<std::vector<LinearForm>> rows;
  for (const auto& r : rowsJson) {
    if (!r.is_array())
      fail(ErrorKind::InvalidInput, "each distraction row must be an array");
    auto& row = rows.emplace_back();
    for (const auto& entry : r) {
      std::vector<long long> c;
      if (entry.is_object())
        c = field<std::vector<long long>>(entry, "c");
      else
        fail(ErrorKind::InvalidInput, "distraction entries are objects {\"c\": [...]}");
      LinearForm form;
      for (long long v : c)
        form.coefficients.push_back(fieldSpec.fromInt(v));
      row.push_back(std::move(form));
    }
  }
  return DistractionMatrix(static_cast<std::size_t>(n), fieldSpec, std::move(rows));
}

Json toJson(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(toString(g));
  return {{"v", kSchemaVersion}, {"n", ideal.nvars()}, {"char", ideal.field().characteristic()}, {"gens", gens}};
}

Ideal idealFromJson(const Json& j, PrimeField fieldSpec) {
  checkVersion(j);
  const auto n = field<long long>(j, "n");
  if (n < 0 || n > 64)
    fail(ErrorKind::InvalidInput, "'n' must lie in 0..64");
  if (j.contains("char"))
    fieldSpec = PrimeField(field<std::uint32_t>(j, "char"));
  const auto size = static_cast<std::size_t>(n);
  const Json& gens = j.contains("gens") ? j.at("gens") : Json::array();
  if (!gens.is_array())
    fail(ErrorKind::InvalidInput, "'gens' must be an array");
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    if (g.is_string())
      polys.push_back(parsePolynomial(g.get<std::string>(), size, fieldSpec));
    else
      polys.push_back(Polynomial::monomial(monomialsFromJson(Json::array({g}), size).front(), fieldSpec));
  }
  return Ideal(size, fieldSpec, std::move(polys));
}

Json toJson(const GradedBettiTable& table) {
  return {{"v", kSchemaVersion},
          {"n", table.n},
          {"dmax", table.dmax},
          {"complete_through_degree", table.dmax},
          {"entries", tableEntries(table.entries)}};
}

Json toJson(const LocalCohTable& table) {
  Json out = {{"v", kSchemaVersion},
              {"n", table.n},
              {"window", {table.window.jmin, table.window.jmax}},
              {"entries", tableEntries(table.entries)},
              {"unbounded_below", table.unboundedBelow},
              {"window_truncated", table.windowTruncated}};
  out["support_max"] = table.supportMax ? Json(*table.supportMax) : Json();
  out["support_min"] = table.supportMin ? Json(*table.supportMin) : Json();
  return out;
}

Json toJson(const PolarizationResult& p) {
  Json spX = Json::array(), spL = Json::array();
  for (const auto& f : p.specializationX)
    spX.push_back(toString(f));
  for (const auto& f : p.specializationL)
    spL.push_back(toString(f));
  return {{"v", kSchemaVersion},
          {"n", p.baseVars},
          {"extended_n", p.extendedVarCount},
          {"r", p.r},
          {"polarized", toJson(p.polarizedIdeal)},
          {"specialization_x", spX},
          {"specialization_l", spL}};
}

Json toJson(const VerificationReport& report) {
  return {{"v", kSchemaVersion},
          {"theorem", report.theorem},
          {"status", report.status()},
          {"parameters", report.parameters},
          {"cases_checked", report.casesChecked},
          {"failures", report.failures},
          {"findings", report.findings},
          {"notes", report.notes}};
}

} // namespace lexdist
