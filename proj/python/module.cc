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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diamsieve/bounds.h"
#include "diamsieve/cli.h"
#include "diamsieve/errors.h"
#include "diamsieve/graph.h"
#include "diamsieve/montecarlo.h"
#include "diamsieve/oracle.h"
#include "diamsieve/sieve.h"

namespace py = pybind11;
using namespace diamsieve;

namespace {

// Accepts Fraction, int or a string such as "1/3" or "0.25".
Rational ToRational(const py::handle& value) {
  return ParseRational(py::str(value).cast<std::string>());
}

py::object ToFraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(ToString(r));
}

py::dict BoundDict(const BoundPair& b) {
  py::dict d;
  d["source"] = std::string(BoundSourceName(b.source));
  d["lower_raw"] = b.lower_raw;
  d["upper_raw"] = b.upper_raw;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["second_term"] = b.second_term;
  d["directed"] = b.directed;
  d["asymptotic_only"] = b.asymptotic_only;
  d["has_upper"] = b.has_upper;
  d["trivial_lower"] = b.trivial_lower();
  d["trivial_upper"] = b.trivial_upper();
  return d;
}

py::dict StatsDict(const IncidenceStats& s) {
  py::dict d;
  d["sum_deg"] = ToFraction(s.sum_deg);
  d["sum_joint"] = ToFraction(s.sum_joint);
  d["b_count"] = s.b_count;
  return d;
}

BoundForm ParseForm(const std::string& form) {
  if (form == "general") return BoundForm::kGeneral;
  if (form == "turan") return BoundForm::kTuran;
  throw InvalidArgument("form must be 'general' or 'turan'");
}

py::dict ThresholdDict(const ThresholdSpec& t) {
  py::dict d;
  d["n"] = t.n;
  d["p"] = t.p;
  d["c"] = t.c;
  d["c_observed"] = t.c_observed;
  return d;
}

AdjacencyMatrix FromEdgeList(const GraphFamily& family,
                             const std::vector<std::pair<int, int>>& edges) {
  AdjacencyBuilder builder(family.vertex_count(), family.directed());
  for (const auto& [u, v] : edges) {
    if (!family.IsCandidate(u, v)) {
      throw InvalidArgument("(" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not a candidate edge of the family");
    }
    builder.Add(u, v);
  }
  return std::move(builder).Build();
}

}  // namespace

PYBIND11_MODULE(_diamsieve, m) {
  m.doc() = "Diameter probabilities of random graphs";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<GraphFamily>(m, "GraphFamily")
      .def(py::init([](const std::string& kind, std::vector<int> sizes) {
             return GraphFamily::Make(ParseFamilyKind(kind), MakeShape(std::move(sizes)));
           }),
           py::arg("kind"), py::arg("sizes"))
      .def_static("simple", &GraphFamily::Simple, py::arg("n"))
      .def_static("directed", &GraphFamily::Directed, py::arg("n"))
      .def_property_readonly("kind", [](const GraphFamily& f) { return std::string(f.name()); })
      .def_property_readonly("sizes", [](const GraphFamily& f) { return f.shape().sizes(); })
      .def_property_readonly("n", &GraphFamily::vertex_count)
      .def_property_readonly("target_diameter", &GraphFamily::target_diameter)
      .def_property_readonly("is_directed", &GraphFamily::directed)
      .def("candidate_edges", &GraphFamily::CandidateEdges)
      .def("__repr__", [](const GraphFamily& f) {
        return "GraphFamily('" + std::string(f.name()) + "', [" + f.shape().ToString() + "])";
      });

  m.def("make_shape", [](std::vector<int> sizes) { return MakeShape(std::move(sizes)).sizes(); },
        py::arg("sizes"));
  m.def("turan_shape", [](int n, int k) { return TuranShape(n, k).sizes(); }, py::arg("n"),
        py::arg("k"));

  m.def("sample_edges",
        [](const GraphFamily& family, double p, std::uint64_t seed, std::uint64_t trial) {
          return SampleGraph(family, p, seed, trial).Edges();
        },
        py::arg("family"), py::arg("p"), py::arg("seed"), py::arg("trial") = 0);
  m.def("meets_target_diameter",
        [](const GraphFamily& family, const std::vector<std::pair<int, int>>& edges) {
          return MeetsTargetDiameter(FromEdgeList(family, edges), family);
        },
        py::arg("family"), py::arg("edges"));
  m.def("graph_diameter",
        [](const GraphFamily& family,
           const std::vector<std::pair<int, int>>& edges) -> std::optional<int> {
          const Diameter d = GraphDiameter(FromEdgeList(family, edges));
          if (d.is_infinite()) return std::nullopt;
          return d.value();
        },
        py::arg("family"), py::arg("edges"), "None when disconnected.");

  m.def("gnp_bounds", [](int n, double p) { return BoundDict(GnpBounds(n, p)); }, py::arg("n"),
        py::arg("p"));
  m.def("gnp_half_lower", &GnpHalfLower, py::arg("n"));
  m.def("gnp_asymptotic_bounds",
        [](int n, double p) { return BoundDict(GnpAsymptoticBounds(n, p)); }, py::arg("n"),
        py::arg("p"));
  m.def("kpartite_bounds",
        [](std::vector<int> sizes, double p) {
          return BoundDict(KPartiteBounds(MakeShape(std::move(sizes)), p));
        },
        py::arg("sizes"), py::arg("p"));
  m.def("bipartite_bounds",
        [](std::vector<int> sizes, double p) {
          return BoundDict(BipartiteBounds(MakeShape(std::move(sizes)), p));
        },
        py::arg("sizes"), py::arg("p"));
  m.def("theorem_bounds",
        [](const GraphFamily& family, double p) { return BoundDict(TheoremBounds(family, p)); },
        py::arg("family"), py::arg("p"));
  m.def("applicable_bounds",
        [](const GraphFamily& family, double p) {
          py::list out;
          for (const auto& b : ApplicableBounds(family, p)) out.append(BoundDict(b));
          return out;
        },
        py::arg("family"), py::arg("p"));
  m.def("threshold_c",
        [](const GraphFamily& family, double p, const std::string& form) {
          return ThresholdDict(ThresholdC(family, p, ParseForm(form)));
        },
        py::arg("family"), py::arg("p"), py::arg("form") = "general");
  m.def("solve_threshold_p",
        [](const GraphFamily& family, double c, const std::string& form) {
          return ThresholdDict(SolveThresholdP(family, c, ParseForm(form)));
        },
        py::arg("family"), py::arg("c"), py::arg("form") = "general");

  m.def("incidence_stats",
        [](const GraphFamily& family, const py::object& p) {
          return StatsDict(ComputeIncidenceStats(family, ToRational(p)));
        },
        py::arg("family"), py::arg("p"));
  m.def("sieve_bounds",
        [](const GraphFamily& family, const py::object& p) {
          const SieveResult s = SieveBounds(family, ToRational(p));
          py::dict d = StatsDict(s.stats);
          d["lower_raw"] = ToFraction(s.lower_raw);
          d["upper_raw"] = ToFraction(s.upper_raw);
          d["lower"] = ToFraction(s.lower);
          d["upper"] = ToFraction(s.upper);
          return d;
        },
        py::arg("family"), py::arg("p"));
  m.def("exact_diameter_prob",
        [](const GraphFamily& family, const py::object& p, int max_edges, int workers) {
          EnumerationBudget budget;
          budget.max_edges = max_edges;
          Rational r;
          {
            const Rational pr = ToRational(p);
            py::gil_scoped_release release;
            r = ExactDiameterProb(family, pr, family.target_diameter(), budget, workers);
          }
          return ToFraction(r);
        },
        py::arg("family"), py::arg("p"), py::arg("max_edges") = EnumerationBudget{}.max_edges,
        py::arg("workers") = 0);
  m.def("brute_incidence_stats",
        [](const GraphFamily& family, const py::object& p) {
          return StatsDict(BruteIncidenceStats(family, ToRational(p)));
        },
        py::arg("family"), py::arg("p"));

  m.def("wilson_interval",
        [](std::uint64_t successes, std::uint64_t trials, double confidence) {
          const WilsonBounds w = WilsonInterval(successes, trials, confidence);
          return std::make_pair(w.lo, w.hi);
        },
        py::arg("successes"), py::arg("trials"), py::arg("confidence") = 0.95);
  m.def("estimate",
        [](const GraphFamily& family, double p, std::uint64_t trials, std::uint64_t seed,
           double confidence, int workers, bool verify) {
          EstimateOptions opts;
          opts.workers = workers;
          opts.verify = verify;
          TrialEstimate e;
          {
            py::gil_scoped_release release;
            e = Estimate(family, p, trials, seed, confidence, opts);
          }
          py::dict d;
          d["successes"] = e.successes;
          d["trials"] = e.trials;
          d["p_hat"] = e.p_hat;
          d["wilson_lo"] = e.wilson_lo;
          d["wilson_hi"] = e.wilson_hi;
          d["confidence"] = e.confidence;
          d["seed"] = e.seed;
          d["p"] = e.p;
          d["elapsed"] = e.elapsed_seconds;
          d["verified"] = e.verified;
          d["verify_mismatches"] = e.verify_mismatches;
          return d;
        },
        py::arg("family"), py::arg("p"), py::arg("trials"), py::arg("seed"),
        py::arg("confidence") = 0.95, py::arg("workers") = 0, py::arg("verify") = false);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli::Run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
