// Copyright 2026 The diamsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diamsieve/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "diamsieve/bounds.h"
#include "diamsieve/errors.h"
#include "diamsieve/graph.h"
#include "diamsieve/montecarlo.h"
#include "diamsieve/oracle.h"
#include "diamsieve/sieve.h"

namespace diamsieve::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kPrefix = {"family", "n", "shape", "p", "seed", "trials"};

std::vector<std::string> WithPrefix(std::initializer_list<std::string> tail) {
  std::vector<std::string> out = kPrefix;
  out.insert(out.end(), tail);
  return out;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& ColumnSets() {
  static const auto* sets = new std::map<std::string, std::vector<std::string>, std::less<>>{
      {"bounds", WithPrefix({"source", "directed", "asymptotic_only", "lower_raw", "upper_raw",
                             "lower", "upper", "trivial_lower", "trivial_upper"})},
      {"sieve", WithPrefix({"b_count", "sum_deg", "sum_joint", "lower_raw_exact",
                            "upper_raw_exact", "lower_exact", "upper_exact", "lower_raw",
                            "upper_raw", "lower", "upper", "trivial_lower", "trivial_upper"})},
      {"exact", WithPrefix({"target_diameter", "candidate_edges", "probability", "float"})},
      {"simulate", WithPrefix({"target_diameter", "successes", "p_hat", "wilson_lo", "wilson_hi",
                               "confidence", "std_error", "verified", "verify_mismatches",
                               "elapsed"})},
      {"sweep", WithPrefix({"source", "lower_raw", "upper_raw", "lower", "upper",
                            "trivial_lower", "trivial_upper", "successes", "p_hat", "wilson_lo",
                            "wilson_hi"})},
      {"threshold", WithPrefix({"form", "c", "c_observed", "source", "lower_raw", "upper_raw",
                                "lower", "upper", "trivial_lower", "trivial_upper",
                                "asymptotic_lower_ref", "asymptotic_upper_ref",
                                "successes", "p_hat", "wilson_lo", "wilson_hi"})},
  };
  return *sets;
}

// Rows are assembled by name so a handler cannot silently shift columns.
class RowBuilder {
 public:
  explicit RowBuilder(const std::vector<std::string>& columns)
      : columns_(columns), cells_(columns.size()) {}

  RowBuilder& Set(std::string_view name, Cell value) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == name) {
        cells_[i] = std::move(value);
        return *this;
      }
    }
    throw std::logic_error("unknown column " + std::string(name));
  }

  std::vector<Cell> Take() { return std::move(cells_); }

 private:
  const std::vector<std::string>& columns_;
  std::vector<Cell> cells_;
};

std::string FormatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string CellText(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double x) const { return FormatDouble(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json CellJson(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double x) const {
      if (std::isfinite(x)) return x;
      return FormatDouble(x);
    }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(std::uint64_t x) const { return x; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, cell);
}

// --- Run configuration --------------------------------------------------------

struct RunConfig {
  std::string subcommand;
  std::string family;
  std::vector<int> n;
  std::string shape;
  int k = 0;
  std::vector<std::string> p;
  std::optional<double> c;
  std::string form = "general";
  std::uint64_t trials = 0;
  bool trials_set = false;
  std::uint64_t seed = 1;
  int workers = 0;
  double confidence = 0.95;
  bool verify = false;
  int max_edges = EnumerationBudget{}.max_edges;
  std::string format = "csv";
  std::string output;
};

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw UsageError("malformed --shape '" + text + "'");
    sizes.push_back(value);
  }
  if (sizes.empty()) throw UsageError("empty --shape");
  return sizes;
}

GraphFamily ResolveFamily(const RunConfig& cfg, std::optional<int> n) {
  FamilyKind kind;
  try {
    kind = ParseFamilyKind(cfg.family);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  switch (kind) {
    case FamilyKind::kSimple:
    case FamilyKind::kDirected:
      if (!cfg.shape.empty() || cfg.k != 0) {
        throw UsageError("--shape and -k do not apply to family " + cfg.family);
      }
      if (!n) throw UsageError("family " + cfg.family + " needs -n");
      return kind == FamilyKind::kSimple ? GraphFamily::Simple(*n) : GraphFamily::Directed(*n);
    case FamilyKind::kKPartite:
    case FamilyKind::kDirectedKPartite:
    case FamilyKind::kBipartite:
    case FamilyKind::kDirectedBipartite: {
      const bool bipartite =
          kind == FamilyKind::kBipartite || kind == FamilyKind::kDirectedBipartite;
      if (!cfg.shape.empty()) {
        if (cfg.k != 0) throw UsageError("give either --shape or -k, not both");
        PartitionShape shape = MakeShape(ParseSizes(cfg.shape));
        if (n && *n != shape.total()) {
          throw UsageError("-n " + std::to_string(*n) + " disagrees with --shape " + cfg.shape);
        }
        return GraphFamily::Make(kind, shape);
      }
      if (!n) throw UsageError("family " + cfg.family + " needs --shape or -n");
      int k = cfg.k;
      if (bipartite) {
        if (k != 0 && k != 2) throw UsageError("bipartite families have k = 2");
        k = 2;
      } else if (k == 0) {
        throw UsageError("family " + cfg.family + " needs --shape or -n with -k");
      }
      return GraphFamily::Make(kind, TuranShape(*n, k));
    }
  }
  throw UsageError("unknown family " + cfg.family);
}

BoundForm ParseForm(const std::string& form) {
  if (form == "general") return BoundForm::kGeneral;
  if (form == "turan") return BoundForm::kTuran;
  throw UsageError("--form must be general or turan, got '" + form + "'");
}

// A probability resolved for one family.
struct ResolvedP {
  double value = 0.0;
  std::optional<Rational> exact;
  std::string text;
};

ResolvedP Resolve(const ProbabilitySpec& spec, const GraphFamily& family, BoundForm form) {
  ResolvedP r;
  if (spec.kind == ProbabilitySpec::Kind::kThreshold) {
    r.value = SolveThresholdP(family, spec.c, form).p;
    r.text = FormatDouble(r.value);
  } else {
    r.exact = spec.exact;
    r.value = ToDouble(spec.exact);
    r.text = ToString(spec.exact);
  }
  return r;
}

std::vector<ProbabilitySpec> ProbabilitySpecs(const RunConfig& cfg, bool allow_many) {
  if (cfg.p.empty()) throw UsageError(cfg.subcommand + " needs -p");
  if (!allow_many && cfg.p.size() != 1) throw UsageError(cfg.subcommand + " takes a single -p");
  std::vector<ProbabilitySpec> out;
  for (const auto& text : cfg.p) {
    try {
      out.push_back(ParseProbabilitySpec(text));
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::optional<int> SingleN(const RunConfig& cfg) {
  if (cfg.n.size() > 1) throw UsageError(cfg.subcommand + " takes a single -n");
  if (cfg.n.empty()) return std::nullopt;
  return cfg.n.front();
}

void SetPrefix(RowBuilder& row, const GraphFamily& family, const std::string& p,
               std::optional<std::uint64_t> seed, std::optional<std::uint64_t> trials) {
  row.Set("family", std::string(family.name()))
      .Set("n", static_cast<std::int64_t>(family.vertex_count()))
      .Set("shape", family.shape().ToString())
      .Set("p", p);
  if (seed) row.Set("seed", *seed);
  if (trials) row.Set("trials", *trials);
}

void SetBoundCells(RowBuilder& row, const BoundPair& b) {
  row.Set("source", std::string(BoundSourceName(b.source)))
      .Set("lower_raw", b.lower_raw)
      .Set("lower", b.lower)
      .Set("trivial_lower", b.trivial_lower());
  if (b.has_upper) {
    row.Set("upper_raw", b.upper_raw).Set("upper", b.upper).Set("trivial_upper", b.trivial_upper());
  }
}

EstimateOptions MakeEstimateOptions(const RunConfig& cfg) {
  EstimateOptions opts;
  opts.workers = cfg.workers;
  opts.verify = cfg.verify;
  return opts;
}

void SetEstimateCells(RowBuilder& row, const TrialEstimate& est) {
  row.Set("successes", est.successes)
      .Set("p_hat", est.p_hat)
      .Set("wilson_lo", est.wilson_lo)
      .Set("wilson_hi", est.wilson_hi);
}

// --- Subcommands ---------------------------------------------------------------

Table RunBounds(const RunConfig& cfg) {
  const GraphFamily family = ResolveFamily(cfg, SingleN(cfg));
  const ResolvedP p = Resolve(ProbabilitySpecs(cfg, false).front(), family, ParseForm(cfg.form));
  Table t{Columns("bounds"), {}};
  for (const BoundPair& b : ApplicableBounds(family, p.value)) {
    RowBuilder row(t.columns);
    SetPrefix(row, family, p.text, std::nullopt, std::nullopt);
    SetBoundCells(row, b);
    row.Set("directed", b.directed).Set("asymptotic_only", b.asymptotic_only);
    t.rows.push_back(row.Take());
  }
  return t;
}

Rational ExactP(const RunConfig& cfg) {
  const ProbabilitySpec spec = ProbabilitySpecs(cfg, false).front();
  if (spec.kind == ProbabilitySpec::Kind::kThreshold) {
    throw UsageError(cfg.subcommand + " needs an exact probability, not " + spec.text);
  }
  return spec.exact;
}

Table RunSieve(const RunConfig& cfg) {
  const GraphFamily family = ResolveFamily(cfg, SingleN(cfg));
  const Rational p = ExactP(cfg);
  const SieveResult s = SieveBounds(family, p);
  Table t{Columns("sieve"), {}};
  RowBuilder row(t.columns);
  SetPrefix(row, family, ToString(p), std::nullopt, std::nullopt);
  row.Set("b_count", static_cast<std::uint64_t>(s.stats.b_count))
      .Set("sum_deg", ToString(s.stats.sum_deg))
      .Set("sum_joint", ToString(s.stats.sum_joint))
      .Set("lower_raw_exact", ToString(s.lower_raw))
      .Set("upper_raw_exact", ToString(s.upper_raw))
      .Set("lower_exact", ToString(s.lower))
      .Set("upper_exact", ToString(s.upper))
      .Set("lower_raw", s.bounds.lower_raw)
      .Set("upper_raw", s.bounds.upper_raw)
      .Set("lower", s.bounds.lower)
      .Set("upper", s.bounds.upper)
      .Set("trivial_lower", s.bounds.trivial_lower())
      .Set("trivial_upper", s.bounds.trivial_upper());
  t.rows.push_back(row.Take());
  return t;
}

Table RunExact(const RunConfig& cfg) {
  const GraphFamily family = ResolveFamily(cfg, SingleN(cfg));
  const Rational p = ExactP(cfg);
  EnumerationBudget budget;
  budget.max_edges = cfg.max_edges;
  const Rational prob =
      ExactDiameterProb(family, p, family.target_diameter(), budget, cfg.workers);
  Table t{Columns("exact"), {}};
  RowBuilder row(t.columns);
  SetPrefix(row, family, ToString(p), std::nullopt, std::nullopt);
  row.Set("target_diameter", static_cast<std::int64_t>(family.target_diameter()))
      .Set("candidate_edges", static_cast<std::uint64_t>(family.CandidateEdgeCount()))
      .Set("probability", ToString(prob))
      .Set("float", ToDouble(prob));
  t.rows.push_back(row.Take());
  return t;
}

Table RunSimulate(const RunConfig& cfg, TrialEstimate* last) {
  const GraphFamily family = ResolveFamily(cfg, SingleN(cfg));
  const ResolvedP p = Resolve(ProbabilitySpecs(cfg, false).front(), family, ParseForm(cfg.form));
  const std::uint64_t trials = cfg.trials_set ? cfg.trials : 1000;
  const TrialEstimate est =
      Estimate(family, p.value, trials, cfg.seed, cfg.confidence, MakeEstimateOptions(cfg));
  *last = est;
  Table t{Columns("simulate"), {}};
  RowBuilder row(t.columns);
  SetPrefix(row, family, p.text, cfg.seed, trials);
  SetEstimateCells(row, est);
  row.Set("target_diameter", static_cast<std::int64_t>(family.target_diameter()))
      .Set("confidence", est.confidence)
      .Set("std_error", est.StandardError())
      .Set("verified", est.verified)
      .Set("verify_mismatches", est.verify_mismatches)
      .Set("elapsed", est.elapsed_seconds);
  t.rows.push_back(row.Take());
  return t;
}

std::vector<std::optional<int>> NGrid(const RunConfig& cfg) {
  std::vector<std::optional<int>> grid;
  for (int n : cfg.n) grid.emplace_back(n);
  if (grid.empty()) {
    if (cfg.shape.empty()) throw UsageError(cfg.subcommand + " needs -n or --shape");
    grid.emplace_back(std::nullopt);
  }
  return grid;
}

Table RunSweep(const RunConfig& cfg, TrialEstimate* last) {
  const auto specs = ProbabilitySpecs(cfg, true);
  const BoundForm form = ParseForm(cfg.form);
  Table t{Columns("sweep"), {}};
  for (const auto& n : NGrid(cfg)) {
    const GraphFamily family = ResolveFamily(cfg, n);
    for (const auto& spec : specs) {
      const ResolvedP p = Resolve(spec, family, form);
      RowBuilder row(t.columns);
      SetPrefix(row, family, p.text, cfg.trials_set ? std::optional(cfg.seed) : std::nullopt,
                cfg.trials_set ? std::optional(cfg.trials) : std::nullopt);
      SetBoundCells(row, TheoremBounds(family, p.value));
      if (cfg.trials_set) {
        *last = Estimate(family, p.value, cfg.trials, cfg.seed, cfg.confidence,
                         MakeEstimateOptions(cfg));
        SetEstimateCells(row, *last);
      }
      t.rows.push_back(row.Take());
    }
  }
  return t;
}

BoundPair FormBounds(const GraphFamily& family, double p, BoundForm form) {
  if (form == BoundForm::kGeneral) return TheoremBounds(family, p);
  for (const BoundPair& b : ApplicableBounds(family, p)) {
    if (b.source == BoundSource::kKPartiteTuranTheorem ||
        b.source == BoundSource::kBipartiteTuranTheorem) {
      return b;
    }
  }
  throw DomainError("no Turan-form theorem applies to " + std::string(family.name()) + " " +
                    family.shape().ToString());
}

Table RunThreshold(const RunConfig& cfg, TrialEstimate* last) {
  if (!cfg.c) throw UsageError("threshold needs --c");
  if (!cfg.p.empty()) throw UsageError("threshold takes --c, not -p");
  const BoundForm form = ParseForm(cfg.form);
  Table t{Columns("threshold"), {}};
  for (const auto& n : NGrid(cfg)) {
    const GraphFamily family = ResolveFamily(cfg, n);
    const ThresholdSpec th = SolveThresholdP(family, *cfg.c, form);
    RowBuilder row(t.columns);
    SetPrefix(row, family, FormatDouble(th.p),
              cfg.trials_set ? std::optional(cfg.seed) : std::nullopt,
              cfg.trials_set ? std::optional(cfg.trials) : std::nullopt);
    SetBoundCells(row, FormBounds(family, th.p, form));
    row.Set("form", cfg.form)
        .Set("c", th.c)
        .Set("c_observed", th.c_observed)
        .Set("asymptotic_lower_ref", 1.0 - std::exp(th.c))
        .Set("asymptotic_upper_ref", std::exp(-th.c));
    if (cfg.trials_set) {
      *last = Estimate(family, th.p, cfg.trials, cfg.seed, cfg.confidence,
                       MakeEstimateOptions(cfg));
      SetEstimateCells(row, *last);
    }
    t.rows.push_back(row.Take());
  }
  return t;
}

int DefaultWorkers() {
  const char* env = std::getenv("DIAMSIEVE_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  int value = 0;
  const char* last = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw UsageError("DIAMSIEVE_WORKERS must be a non-negative integer, got '" +
                     std::string(env) + "'");
  }
  return value;
}

std::string OneLine(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return out;
}

int Fail(std::ostream& err, int code, std::string_view category, std::string_view message) {
  err << "diamsieve: error[" << category << "]: " << OneLine(message) << "\n";
  return code;
}

void AddCommonOptions(CLI::App* sub, RunConfig& cfg, bool exact_sub) {
  sub->add_option("--family", cfg.family,
                  "simple, directed, kpartite, directed-kpartite, bipartite, directed-bipartite")
      ->required();
  sub->add_option("-n", cfg.n, "vertex count (comma list for sweep and threshold)")
      ->delimiter(',');
  sub->add_option("--shape", cfg.shape, "part sizes, e.g. 2,2,3");
  sub->add_option("-k", cfg.k, "number of parts; with -n selects the balanced shape")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", cfg.output, "write results here instead of stdout");
  sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  if (!exact_sub) {
    sub->add_option("--form", cfg.form, "threshold expression: general or turan");
  }
}

void AddSamplingOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--trials", cfg.trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber)
      ->each([&cfg](const std::string&) { cfg.trials_set = true; });
  sub->add_option("--seed", cfg.seed, "64-bit seed");
  sub->add_option("--confidence", cfg.confidence, "Wilson interval level")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_flag("--verify", cfg.verify, "re-check 1% of trials with BFS");
}

}  // namespace

const std::vector<std::string>& Columns(std::string_view subcommand) {
  const auto& sets = ColumnSets();
  auto it = sets.find(subcommand);
  if (it == sets.end()) throw InvalidArgument("unknown subcommand " + std::string(subcommand));
  return it->second;
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void WriteCsv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << CsvField(table.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << CsvField(CellText(row[i]));
    }
    out << "\r\n";
  }
}

void WriteJson(const Table& table, std::ostream& out) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = CellJson(row[i]);
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << "\n";
}

ProbabilitySpec ParseProbabilitySpec(std::string_view text) {
  ProbabilitySpec spec;
  spec.text = std::string(text);
  if (text.rfind("c=", 0) == 0) {
    const std::string_view rest = text.substr(2);
    double c = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), c);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || !std::isfinite(c)) {
      throw InvalidArgument("malformed threshold probability '" + spec.text + "'");
    }
    spec.kind = ProbabilitySpec::Kind::kThreshold;
    spec.c = c;
    return spec;
  }
  spec.kind = text.find('/') != std::string_view::npos ? ProbabilitySpec::Kind::kFraction
                                                        : ProbabilitySpec::Kind::kDecimal;
  spec.exact = ParseRational(text);
  return spec;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.workers = DefaultWorkers();
  } catch (const UsageError& e) {
    return Fail(err, kUsage, "usage", e.what());
  }

  CLI::App app{"Diameter probabilities of random graphs: sieve bounds, exact enumeration, "
               "Monte Carlo",
               "diamsieve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "diamsieve 0.1.0");

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds, one row per source");
  AddCommonOptions(bounds, cfg, false);
  bounds->add_option("-p", cfg.p, "edge probability: 0.3, 1/3 or c=<real>")->required();

  auto* sieve = app.add_subcommand("sieve", "exact rational sieve bounds");
  AddCommonOptions(sieve, cfg, true);
  sieve->add_option("-p", cfg.p, "edge probability: 1/3 or an exact decimal")->required();

  auto* exact = app.add_subcommand("exact", "exact probability by exhaustive enumeration");
  AddCommonOptions(exact, cfg, true);
  exact->add_option("-p", cfg.p, "edge probability: 1/3 or an exact decimal")->required();
  exact->add_option("--max-edges", cfg.max_edges, "enumeration budget in candidate edges")
      ->check(CLI::Range(1, 40));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
  AddCommonOptions(simulate, cfg, false);
  AddSamplingOptions(simulate, cfg);
  simulate->add_option("-p", cfg.p, "edge probability: 0.3, 1/3 or c=<real>")->required();

  auto* sweep = app.add_subcommand("sweep", "theorem bounds over an n x p grid");
  AddCommonOptions(sweep, cfg, false);
  AddSamplingOptions(sweep, cfg);
  sweep->add_option("-p", cfg.p, "comma list of probabilities")->delimiter(',')->required();

  auto* threshold = app.add_subcommand("threshold", "solve p(n) for a threshold constant");
  AddCommonOptions(threshold, cfg, false);
  AddSamplingOptions(threshold, cfg);
  threshold->add_option("--c", cfg.c, "threshold constant")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("diamsieve");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "diamsieve 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return Fail(err, kUsage, "usage", e.what());
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    TrialEstimate last;
    Table table;
    if (cfg.subcommand == "bounds") table = RunBounds(cfg);
    else if (cfg.subcommand == "sieve") table = RunSieve(cfg);
    else if (cfg.subcommand == "exact") table = RunExact(cfg);
    else if (cfg.subcommand == "simulate") table = RunSimulate(cfg, &last);
    else if (cfg.subcommand == "sweep") table = RunSweep(cfg, &last);
    else table = RunThreshold(cfg, &last);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) return Fail(err, kInternal, "io", "cannot open " + cfg.output);
      sink = &file;
    }
    if (cfg.format == "json") WriteJson(table, *sink);
    else WriteCsv(table, *sink);
    sink->flush();
    if (!*sink) return Fail(err, kInternal, "io", "write failed");
    if (last.verify_mismatches > 0) {
      return Fail(err, kInternal, "verify",
                  std::to_string(last.verify_mismatches) +
                      " trials disagree between the bitset predicate and BFS");
    }
    return kOk;
  } catch (const UsageError& e) {
    return Fail(err, kUsage, "usage", e.what());
  } catch (const ResourceError& e) {
    return Fail(err, kResource, "resource", e.what());
  } catch (const InvalidArgument& e) {
    return Fail(err, kDomain, "invalid", e.what());
  } catch (const DomainError& e) {
    return Fail(err, kDomain, "domain", e.what());
  } catch (const PreconditionError& e) {
    return Fail(err, kDomain, "precondition", e.what());
  } catch (const std::exception& e) {
    return Fail(err, kInternal, "internal", e.what());
  }
}

int Main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace diamsieve::cli
