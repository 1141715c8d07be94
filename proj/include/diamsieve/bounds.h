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

#ifndef DIAMSIEVE_BOUNDS_H_
#define DIAMSIEVE_BOUNDS_H_

#include <string_view>
#include <vector>

#include "diamsieve/graph.h"

namespace diamsieve {

// Which closed form produced a BoundPair.
enum class BoundSource {
  kGnpTheorem,
  kGnpHalfCorollary,
  kGnpAsymptotic,
  kGnpAsymptoticProofExponent,
  kKPartiteTheorem,
  kKPartiteHalfCorollary,
  kKPartiteAsymptotic,
  kKPartiteTuranTheorem,
  kKPartiteTuranHalfCorollary,
  kKPartiteTuranAsymptotic,
  kBipartiteTheorem,
  kBipartiteHalfCorollary,
  kBipartiteAsymptotic,
  kBipartiteTuranTheorem,
  kBipartiteTuranHalfCorollary,
  kBipartiteTuranAsymptotic,
  kExactSieve,
};

std::string_view BoundSourceName(BoundSource source);

// Lower/upper bracket on P(diameter <= target). Every lower bound has the
// form 1 - second_term; raw values may leave [0,1] (or be +-inf) and the
// clamped values are what a probability can use.
struct BoundPair {
  double lower_raw = 0.0;
  double upper_raw = 1.0;
  double lower = 0.0;
  double upper = 1.0;
  double second_term = 1.0;
  BoundSource source = BoundSource::kGnpTheorem;
  bool directed = false;
  // o(1) factors taken as 0 (or as the explicit constants, where stated).
  bool asymptotic_only = false;
  // False for corollaries that only state a lower bound; upper_raw is +inf.
  bool has_upper = true;

  bool trivial_lower() const { return lower_raw <= 0.0; }
  bool trivial_upper() const { return upper_raw >= 1.0; }
};

// Builds a pair from the lower bound's second term and the raw upper bound.
BoundPair MakeBoundPair(double second_term, double upper_raw, BoundSource source);

// --- G(n,p), diameter <= 2 ---------------------------------------------------

// lower = 1 - n^2 (1-p^2)^(n-2) (1-p) / 2
// upper = 2 / ((n-1)^2 (1-p^2)^n (1-p)) + (8/n) (1 + p^3/(1-p)^2)^n
// Requires n >= 3, 0 < p < 1.
BoundPair GnpBounds(int n, double p);

// max(0, 1 - 4 n^2 (3/4)^n / 9).
double GnpHalfLower(int n);
BoundPair GnpHalfCorollary(int n);

// lower = 1 - (1 + 4p^2) (n^2/2) e^{-np^2}
// upper = (1 + eps) (2/n^2) e^{np^2} (1 + 4n e^{np^2 (p^2-1)}),
//   eps = (4 log^2 n + 2)/n + p + 3 e^8 (2 log n)^{3/2} / sqrt(n).
// The explicit constants are only valid for n >= 200, p <= 1/2; anything
// else throws PreconditionError.
BoundPair GnpAsymptoticBounds(int n, double p);
// Same, with e^{np^2 (p-1)} in the upper bound's correction term.
BoundPair GnpAsymptoticBoundsProofExponent(int n, double p);

// --- k-partite, k >= 3, diameter <= 2 ---------------------------------------

BoundPair KPartiteBounds(const PartitionShape& shape, double p);
BoundPair KPartiteHalfCorollary(const PartitionShape& shape);
// Requires k >= 3 and n > 2k. Exponents use the real n/k.
BoundPair KPartiteTuranBounds(int n, int k, double p);
BoundPair KPartiteTuranHalfCorollary(int n, int k);
BoundPair KPartiteAsymptoticBounds(const PartitionShape& shape, double p);
BoundPair KPartiteTuranAsymptoticBounds(int n, int k, double p);

// --- bipartite, diameter <= 3 -----------------------------------------------

BoundPair BipartiteBounds(const PartitionShape& shape, double p);
BoundPair BipartiteHalfCorollary(const PartitionShape& shape);
// Requires n >= 4. Exponents (n-1)/2 and n/2 are used for both parities.
BoundPair BipartiteTuranBounds(int n, double p);
BoundPair BipartiteTuranHalfCorollary(int n);
BoundPair BipartiteAsymptoticBounds(const PartitionShape& shape, double p);
BoundPair BipartiteTuranAsymptoticBounds(int n, double p);

// --- directed families ------------------------------------------------------

// Second term of the lower bound doubled, upper bound halved. `kind` must be
// a directed kind; throws PreconditionError if `b` is already adjusted.
BoundPair DirectedAdjust(const BoundPair& b, FamilyKind kind);

// --- threshold constants ------------------------------------------------------

enum class BoundForm { kGeneral, kTuran };

struct ThresholdSpec {
  FamilyKind kind = FamilyKind::kSimple;
  BoundForm form = BoundForm::kGeneral;
  int n = 0;
  double p = 0.0;
  // Target constant (equals c_observed when computed from p).
  double c = 0.0;
  // Finite-n value of the family's defining expression at (n, p).
  double c_observed = 0.0;
};

// Simple:          2 log n - n p^2 - log 2
// k-partite:       2 log n_k - p^2 (n - n_k) - log 2 + log(1 + (2 n_{k-1}/n_k) e^{p^2 n_{k-1}})
// k-partite Turan: 2 log n - log k - n p^2 (1 - 1/k) - log 2 + log(1 + (k-1) e^{n p^2 / k})
// bipartite:       2 log n_2 - n_1 p^2 - log 2
// bipartite Turan: 2 log n - log 4 - n p^2 / 2
// Directed kinds add log 2. The Turan form requires the family's shape to
// be the Turan shape.
ThresholdSpec ThresholdC(const GraphFamily& family, double p,
                         BoundForm form = BoundForm::kGeneral);

// Inverts ThresholdC for p in (0,1) by bisection (the expressions are
// strictly decreasing in p). Throws DomainError when c is out of reach.
ThresholdSpec SolveThresholdP(const GraphFamily& family, double c,
                              BoundForm form = BoundForm::kGeneral);

// Every theorem, corollary and proposition that applies to (family, p):
// corollaries only at p == 1/2, the explicit asymptotic window only where
// it is valid, Turan forms only when the shape is the Turan shape.
std::vector<BoundPair> ApplicableBounds(const GraphFamily& family, double p);

// The theorem-level bound for a family (general form).
BoundPair TheoremBounds(const GraphFamily& family, double p);

}  // namespace diamsieve

#endif  // DIAMSIEVE_BOUNDS_H_
