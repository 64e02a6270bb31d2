#include "lexdist/cli.hpp"

#include "lexdist/distraction.hpp"
#include "lexdist/error.hpp"
#include "lexdist/homology.hpp"
#include "lexdist/json_io.hpp"
#include "lexdist/macaulay.hpp"
#include "lexdist/shakin.hpp"
#include "lexdist/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace lexdist::cli {

namespace {

struct Options {
  std::uint32_t characteristic = kDefaultCharacteristic;
  int dmax = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string order = "degrevlex";
  std::string window;
  long long budget = kDefaultBudget;
  std::string out;
  bool pretty = false;

  std::string ideal;
  std::string shakin;
  std::string hf;
  std::string distraction;
  std::string base;
  std::string oracle = "koszul";
  std::string mode = "coh";
  std::string theorem;
  int n = -1;
  int samples = 100;
  int maxDegree = 4;
};

Json loadJson(const std::string& source, const char* what) {
  if (source.empty())
    fail(ErrorKind::InvalidInput, std::string("missing --") + what);
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
    return parseJsonText(source);
  std::ifstream in(source);
  if (!in)
    fail(ErrorKind::InvalidInput, std::string("cannot read --") + what + " file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseJsonText(buffer.str());
}

bool isMonomialDocument(const Json& j) {
  if (!j.is_object() || !j.contains("gens") || !j.at("gens").is_array())
    return true;
  return std::none_of(j.at("gens").begin(), j.at("gens").end(), [](const Json& g) { return g.is_string(); });
}

MonomialOrder parseOrder(const std::string& name) {
  if (name == "lex")
    return MonomialOrder::lex();
  if (name == "degrevlex")
    return MonomialOrder::degrevlex();
  fail(ErrorKind::InvalidInput, "unknown order '" + name + "' (expected lex or degrevlex)");
}

CohWindow parseWindow(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorKind::InvalidInput, "window must look like jmin:jmax");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon)
      throw std::invalid_argument("window");
    const std::string rest = text.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size())
      throw std::invalid_argument("window");
    if (lo > hi)
      fail(ErrorKind::InvalidInput, "window must satisfy jmin <= jmax");
    return {lo, hi};
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidInput, "window must look like jmin:jmax");
  }
}

int requireDmax(const Options& o) {
  if (o.dmax < 0)
    fail(ErrorKind::InvalidInput, "--dmax is required and must be nonnegative");
  return o.dmax;
}

std::string renderTable(const std::map<std::pair<int, int>, long long>& entries, const std::string& title) {
  std::ostringstream out;
  if (entries.empty()) {
    out << title << ": all zero\n";
    return out.str();
  }
  int iMin = entries.begin()->first.first, iMax = iMin, jMin = entries.begin()->first.second, jMax = jMin;
  for (const auto& [ij, v] : entries) {
    iMin = std::min(iMin, ij.first);
    iMax = std::max(iMax, ij.first);
    jMin = std::min(jMin, ij.second);
    jMax = std::max(jMax, ij.second);
  }
  out << title << "\n" << std::setw(6) << "j\\i";
  for (int i = iMin; i <= iMax; ++i)
    out << std::setw(6) << i;
  out << "\n";
  for (int j = jMin; j <= jMax; ++j) {
    out << std::setw(6) << j;
    for (int i = iMin; i <= iMax; ++i) {
      auto it = entries.find({i, j});
      out << std::setw(6) << (it == entries.end() ? std::string("-") : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

/// Rendered output plus exit code of one subcommand.
struct Result {
  Json document;
  std::string prettyText;
  int code = kExitOk;
};

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::BudgetExceeded:
    return kExitBudget;
  case ErrorKind::NoSuchIdeal:
  case ErrorKind::NotAdmissible:
  case ErrorKind::InternalError:
    return kExitCounterexample;
  default:
    return kExitInvalidInput;
  }
}

Result reportResult(const VerificationReport& report) {
  Result r;
  r.document = toJson(report);
  std::ostringstream summary;
  summary << report.theorem << ": " << report.status() << " (" << report.casesChecked << " cases, "
          << report.failures.size() << " failures, " << report.findings.size() << " findings)\n";
  for (const auto& note : report.notes)
    summary << "note: " << note << "\n";
  r.prettyText = summary.str() + r.document.dump(2) + "\n";
  r.code = report.rejected ? kExitInvalidInput : report.passed() ? kExitOk : kExitCounterexample;
  return r;
}

DistractionMatrix distractionOrRandom(const Options& o, std::size_t n, int length, PrimeField field) {
  if (!o.distraction.empty())
    return distractionFromJson(loadJson(o.distraction, "distraction"), field);
  std::mt19937_64 rng(o.seed);
  return randomDistraction(n, field, static_cast<std::size_t>(std::max(1, length)), rng);
}

Result runHilbert(const Options& o) {
  const Json doc = loadJson(o.ideal, "ideal");
  const int dmax = requireDmax(o);
  const PrimeField field(o.characteristic);
  HilbertFunction h;
  if (isMonomialDocument(doc))
    h = hilbertFunctionMonomial(monomialIdealFromJson(doc), dmax);
  else
    h = hilbertFunctionMonomial(initialIdeal(idealFromJson(doc, field), parseOrder(o.order)), dmax);
  return {toJson(h), {}, kExitOk};
}

Result runLexify(const Options& o) {
  if (o.n < 1)
    fail(ErrorKind::InvalidInput, "--n is required and must be positive");
  const HilbertFunction h = hilbertFunctionFromJson(loadJson(o.hf, "hf"));
  return {toJson(lexIdealForHF(static_cast<std::size_t>(o.n), h)), {}, kExitOk};
}

Result runEmbed(const Options& o) {
  const ShakinIdeal a = shakinFromJson(loadJson(o.shakin, "shakin"));
  const HilbertFunction h = hilbertFunctionFromJson(loadJson(o.hf, "hf"));
  const int dmax = o.dmax >= 0 ? o.dmax : h.dmax();
  return {toJson(lexEmbed(a, h, dmax)), {}, kExitOk};
}

Result runDistract(const Options& o) {
  const PrimeField field(o.characteristic);
  const DistractionMatrix d = distractionFromJson(loadJson(o.distraction, "distraction"), field);
  const auto check = validateDistraction(d);
  if (!check.valid) {
    std::ostringstream what;
    what << "not a distraction over F_" << d.field().characteristic() << ": selection (";
    for (std::size_t i = 0; i < check.failingSelection.size(); ++i)
      what << (i ? "," : "") << check.failingSelection[i] + 1;
    what << ") does not span";
    fail(ErrorKind::InvalidInput, what.str());
  }
  const MonomialIdeal ideal = monomialIdealFromJson(loadJson(o.ideal, "ideal"));
  return {toJson(distractIdeal(d, ideal)), {}, kExitOk};
}

Result runPolarize(const Options& o) {
  const MonomialIdeal ideal = monomialIdealFromJson(loadJson(o.ideal, "ideal"));
  const PrimeField field(o.characteristic);
  if (o.distraction.empty())
    return {toJson(polarize(ideal, field)), {}, kExitOk};
  return {toJson(polarize(ideal, distractionFromJson(loadJson(o.distraction, "distraction"), field))), {}, kExitOk};
}

Result runBetti(const Options& o) {
  const Json doc = loadJson(o.ideal, "ideal");
  const int dmax = requireDmax(o);
  const PrimeField field(o.characteristic);
  GradedBettiTable table;
  if (o.oracle == "taylor") {
    if (!isMonomialDocument(doc))
      fail(ErrorKind::InvalidInput, "the Taylor oracle needs a monomial ideal");
    table = taylorBettiOracle(monomialIdealFromJson(doc), dmax, field);
  } else if (o.oracle == "koszul") {
    table = isMonomialDocument(doc) ? koszulBetti(monomialIdealFromJson(doc), dmax, field)
                                    : koszulBetti(idealFromJson(doc, field), dmax);
  } else {
    fail(ErrorKind::InvalidInput, "unknown oracle '" + o.oracle + "' (expected koszul or taylor)");
  }
  return {toJson(table), renderTable(table.entries, "graded Betti numbers beta_{i,j}"), kExitOk};
}

Result runLocalCoh(const Options& o) {
  const Json doc = loadJson(o.ideal, "ideal");
  if (!isMonomialDocument(doc))
    fail(ErrorKind::InvalidInput, "local cohomology is computed for monomial ideals only");
  const MonomialIdeal ideal = monomialIdealFromJson(doc);
  const PrimeField field(o.characteristic);
  CohWindow window;
  if (!o.window.empty())
    window = parseWindow(o.window);
  else
    window = defaultCohWindow(ideal, o.dmax >= 0 ? o.dmax : std::max(0, ideal.maxGeneratorDegree()));
  const auto table = localCohMonomial(ideal, window, field);
  std::string text = renderTable(table.entries, "dim H^i_m(A/I)_j");
  if (table.windowTruncated)
    text += "window truncated: nonzero values exist outside the window\n";
  return {toJson(table), text, kExitOk};
}

Result runVerify(const Options& o) {
  const PrimeField field(o.characteristic);
  const std::string& t = o.theorem;
  if (t == "macaulay-lex") {
    const int dmax = requireDmax(o);
    if (!o.base.empty())
      return reportResult(verifyMacaulayLexOver(monomialIdealFromJson(loadJson(o.base, "base")), dmax, o.budget));
    return reportResult(verifyMacaulayLex(shakinFromJson(loadJson(o.shakin, "shakin")), dmax, o.budget));
  }
  if (t == "betti-extremal")
    return reportResult(
        verifyBettiExtremal(shakinFromJson(loadJson(o.shakin, "shakin")), requireDmax(o), field, o.budget));
  if (t == "coh-extremal") {
    std::optional<CohWindow> window;
    if (!o.window.empty())
      window = parseWindow(o.window);
    return reportResult(
        verifyCohExtremal(shakinFromJson(loadJson(o.shakin, "shakin")), requireDmax(o), window, field, o.budget));
  }
  if (t == "distraction-hf" || t == "epsilon-d-extremal") {
    const ShakinIdeal a = shakinFromJson(loadJson(o.shakin, "shakin"));
    const int dmax = requireDmax(o);
    const DistractionMatrix d = distractionOrRandom(o, a.nvars(), dmax, field);
    if (t == "distraction-hf")
      return reportResult(verifyDistractionHF(a, d, dmax, o.samples, o.seed, o.budget));
    ExtremalMode mode;
    if (o.mode == "betti")
      mode = ExtremalMode::Betti;
    else if (o.mode == "coh")
      mode = ExtremalMode::Cohomology;
    else
      fail(ErrorKind::InvalidInput, "unknown mode '" + o.mode + "' (expected betti or coh)");
    return reportResult(verifyEpsilonDExtremal(a, d, dmax, o.samples, mode, o.seed, o.budget));
  }
  if (t == "betti-distraction-invariance" || t == "codistra-h0") {
    if (o.n < 1)
      fail(ErrorKind::InvalidInput, "--n is required and must be positive");
    const auto n = static_cast<std::size_t>(o.n);
    const int dmax = requireDmax(o);
    if (t == "betti-distraction-invariance")
      return reportResult(verifyBettiDistractionInvariance(n, o.samples, dmax, o.seed, o.maxDegree, field));
    return reportResult(verifyCodistraH0(n, o.samples, dmax, o.seed, o.maxDegree, field));
  }
  fail(ErrorKind::InvalidInput,
       "unknown theorem '" + t +
           "' (expected macaulay-lex, betti-extremal, coh-extremal, distraction-hf, betti-distraction-invariance, "
           "codistra-h0 or epsilon-d-extremal)");
}

void addCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--char", o.characteristic, "prime characteristic of the coefficient field")
      ->capture_default_str();
  cmd->add_option("--dmax", o.dmax, "truncation degree");
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--order", o.order, "monomial order: lex or degrevlex")->capture_default_str();
  cmd->add_option("--window", o.window, "degree window jmin:jmax (use --window=-3:2 for negative bounds)");
  cmd->add_option("--budget", o.budget, "enumeration budget")->capture_default_str();
  cmd->add_option("--out", o.out, "write the result to this file instead of stdout");
  cmd->add_flag("--pretty", o.pretty, "human-readable rendering");
  cmd->add_option("--n", o.n, "number of variables");
  cmd->add_option("--ideal", o.ideal, "ideal: JSON file or inline JSON");
  cmd->add_option("--shakin", o.shakin, "Shakin ideal: JSON file or inline JSON");
  cmd->add_option("--hf", o.hf, "Hilbert function: JSON file or inline JSON array");
  cmd->add_option("--distraction", o.distraction, "distraction matrix: JSON file or inline JSON");
  cmd->add_option("--samples", o.samples, "number of sampled cases")->capture_default_str();
  cmd->add_option("--max-degree", o.maxDegree, "largest generator degree of sampled ideals")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monomial ideals, lex-embeddings, distractions and their homological invariants", "lexdist"};
  app.require_subcommand(1);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of A/I up to --dmax");
  auto* lexify = app.add_subcommand("lexify", "lex-segment ideal with a given Hilbert function");
  auto* embed = app.add_subcommand("embed", "lex-embedding of a Hilbert function over a Shakin ideal");
  auto* distract = app.add_subcommand("distract", "apply a distraction to a monomial ideal");
  auto* polarizeCmd = app.add_subcommand("polarize", "polarization of a monomial ideal");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of A/I");
  auto* localcoh = app.add_subcommand("localcoh", "local cohomology Hilbert functions of A/I");
  auto* verify = app.add_subcommand("verify", "run a theorem check and emit a report");
  for (auto* cmd : {hilbert, lexify, embed, distract, polarizeCmd, betti, localcoh, verify})
    addCommon(cmd, o);
  betti->add_option("--oracle", o.oracle, "koszul or taylor")->capture_default_str();
  verify->add_option("theorem", o.theorem, "theorem tag")->required();
  verify->add_option("--base", o.base, "arbitrary monomial base ideal for macaulay-lex");
  verify->add_option("--mode", o.mode, "betti or coh (epsilon-d-extremal)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  Result result;
  try {
    if (hilbert->parsed())
      result = runHilbert(o);
    else if (lexify->parsed())
      result = runLexify(o);
    else if (embed->parsed())
      result = runEmbed(o);
    else if (distract->parsed())
      result = runDistract(o);
    else if (polarizeCmd->parsed())
      result = runPolarize(o);
    else if (betti->parsed())
      result = runBetti(o);
    else if (localcoh->parsed())
      result = runLocalCoh(o);
    else
      result = runVerify(o);
  } catch (const Error& e) {
    result.document = {{"v", kSchemaVersion}, {"error", errorKindName(e.kind())}, {"message", e.what()}};
    if (e.degree() >= 0)
      result.document["degree"] = e.degree();
    result.code = exitCodeFor(e.kind());
    err << "error (" << errorKindName(e.kind()) << "): " << e.what() << "\n";
  }

  const std::string text =
      o.pretty ? (result.prettyText.empty() ? result.document.dump(2) + "\n" : result.prettyText)
               : result.document.dump() + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error (invalid-input): cannot write '" << o.out << "'\n";
      return kExitInvalidInput;
    }
    file << text;
  }
  return result.code;
}

} // namespace lexdist::cli
