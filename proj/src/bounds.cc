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

#include "diamsieve/bounds.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "diamsieve/errors.h"

namespace diamsieve {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);
const double kLogThreeQuarters = std::log(3.0) - std::log(4.0);

// log(1 + e^x) without overflow.
double Log1pExp(double x) {
  if (x > 35.0) return x;
  if (x < -745.0) return 0.0;
  return std::log1p(std::exp(x));
}

// log(sum_i e^{x_i}).
double LogSumExp(std::initializer_list<double> xs) {
  double hi = -kInf;
  for (double x : xs) hi = std::max(hi, x);
  if (hi == -kInf || hi == kInf) return hi;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - hi);
  return hi + std::log(sum);
}

double Log(int x) { return std::log(static_cast<double>(x)); }

void RequireProbability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("edge probability must lie in (0,1), got " + std::to_string(p));
  }
}

// Shared logarithms of the recurring bases.
struct LogBases {
  explicit LogBases(double p)
      : p(p),
        q(std::log1p(-p * p)),
        one_minus_p(std::log1p(-p)),
        star(std::log1p(p * p * p / ((1.0 - p) * (1.0 - p)))),
        dagger(std::log1p(p * p * p / (1.0 - p))) {}
  double p;
  double q;            // log(1 - p^2)
  double one_minus_p;  // log(1 - p)
  double star;         // log(1 + p^3/(1-p)^2)
  double dagger;       // log(1 + p^3/(1-p))
};

void RequireKPartite(const PartitionShape& shape) {
  if (!shape.IsKPartiteValid()) {
    throw DomainError("k-partite bound needs k >= 3, n_{k-1} >= 2, n >= k + 2; got (" +
                      shape.ToString() + ")");
  }
}

void RequireBipartite(const PartitionShape& shape) {
  if (!shape.IsBipartiteValid()) {
    throw DomainError("bipartite bound needs 2 <= n_1 <= n_2; got (" + shape.ToString() + ")");
  }
}

void RequireTuranKPartite(int n, int k) {
  if (k < 3 || n <= 2 * k) {
    throw DomainError("Turan k-partite bound needs k >= 3 and n > 2k; got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
}

void RequireTuranBipartite(int n) {
  if (n < 4) throw DomainError("Turan bipartite bound needs n >= 4; got " + std::to_string(n));
}

// n_k, n_{k-1}, n_{k-2} of a k-partite shape.
struct TopParts {
  explicit TopParts(const PartitionShape& shape)
      : k(shape.parts()),
        n(shape.total()),
        nk(shape.size(k - 1)),
        nk1(shape.size(k - 2)),
        nk2(shape.size(k - 3)) {}
  int k, n, nk, nk1, nk2;
};

BoundPair LowerOnly(double second_term, BoundSource source) {
  BoundPair b = MakeBoundPair(second_term, kInf, source);
  b.has_upper = false;
  return b;
}

BoundPair Asymptotic(BoundPair b) {
  b.asymptotic_only = true;
  return b;
}

}  // namespace

std::string_view BoundSourceName(BoundSource source) {
  switch (source) {
    case BoundSource::kGnpTheorem: return "gnp_theorem";
    case BoundSource::kGnpHalfCorollary: return "gnp_half_corollary";
    case BoundSource::kGnpAsymptotic: return "gnp_asymptotic";
    case BoundSource::kGnpAsymptoticProofExponent: return "gnp_asymptotic_proof_exponent";
    case BoundSource::kKPartiteTheorem: return "kpartite_theorem";
    case BoundSource::kKPartiteHalfCorollary: return "kpartite_half_corollary";
    case BoundSource::kKPartiteAsymptotic: return "kpartite_asymptotic";
    case BoundSource::kKPartiteTuranTheorem: return "kpartite_turan_theorem";
    case BoundSource::kKPartiteTuranHalfCorollary: return "kpartite_turan_half_corollary";
    case BoundSource::kKPartiteTuranAsymptotic: return "kpartite_turan_asymptotic";
    case BoundSource::kBipartiteTheorem: return "bipartite_theorem";
    case BoundSource::kBipartiteHalfCorollary: return "bipartite_half_corollary";
    case BoundSource::kBipartiteAsymptotic: return "bipartite_asymptotic";
    case BoundSource::kBipartiteTuranTheorem: return "bipartite_turan_theorem";
    case BoundSource::kBipartiteTuranHalfCorollary: return "bipartite_turan_half_corollary";
    case BoundSource::kBipartiteTuranAsymptotic: return "bipartite_turan_asymptotic";
    case BoundSource::kExactSieve: return "exact_sieve";
  }
  return "unknown";
}

BoundPair MakeBoundPair(double second_term, double upper_raw, BoundSource source) {
  if (std::isnan(second_term) || std::isnan(upper_raw)) {
    throw DomainError("bound evaluation produced NaN for " +
                      std::string(BoundSourceName(source)));
  }
  BoundPair b;
  b.second_term = second_term;
  b.lower_raw = 1.0 - second_term;
  b.upper_raw = upper_raw;
  b.lower = std::clamp(b.lower_raw, 0.0, 1.0);
  b.upper = std::clamp(b.upper_raw, 0.0, 1.0);
  b.source = source;
  return b;
}

// --- G(n,p) -----------------------------------------------------------------

BoundPair GnpBounds(int n, double p) {
  if (n < 3) throw DomainError("gnp bound needs n >= 3; got " + std::to_string(n));
  RequireProbability(p);
  const LogBases lb(p);
  const double second = std::exp(2 * Log(n) + (n - 2) * lb.q + lb.one_minus_p - kLog2);
  const double upper = std::exp(kLog2 - 2 * Log(n - 1) - n * lb.q - lb.one_minus_p) +
                       std::exp(Log(8) - Log(n) + n * lb.star);
  return MakeBoundPair(second, upper, BoundSource::kGnpTheorem);
}

BoundPair GnpHalfCorollary(int n) {
  if (n < 3) throw DomainError("gnp corollary needs n >= 3; got " + std::to_string(n));
  return LowerOnly(std::exp(Log(4) + 2 * Log(n) + n * kLogThreeQuarters - Log(9)),
                   BoundSource::kGnpHalfCorollary);
}

double GnpHalfLower(int n) { return GnpHalfCorollary(n).lower; }

namespace {

BoundPair GnpAsymptoticImpl(int n, double p, bool proof_exponent) {
  if (n < 200 || !(p > 0.0 && p <= 0.5)) {
    throw PreconditionError(
        "explicit asymptotic constants need n >= 200 and 0 < p <= 1/2; got n=" +
        std::to_string(n) + " p=" + std::to_string(p));
  }
  const double ln = Log(n);
  const double np2 = n * p * p;
  const double second = std::exp(std::log1p(4 * p * p) + 2 * ln - kLog2 - np2);
  const double eps = (4 * ln * ln + 2) / n + p +
                     3 * std::exp(8.0) * std::pow(2 * ln, 1.5) / std::sqrt(static_cast<double>(n));
  const double tail_exponent = proof_exponent ? np2 * (p - 1) : np2 * (p * p - 1);
  const double upper =
      std::exp(std::log1p(eps) + kLog2 - 2 * ln + np2 + Log1pExp(Log(4) + ln + tail_exponent));
  return Asymptotic(MakeBoundPair(second, upper,
                                  proof_exponent ? BoundSource::kGnpAsymptoticProofExponent
                                                 : BoundSource::kGnpAsymptotic));
}

}  // namespace

BoundPair GnpAsymptoticBounds(int n, double p) { return GnpAsymptoticImpl(n, p, false); }

BoundPair GnpAsymptoticBoundsProofExponent(int n, double p) {
  return GnpAsymptoticImpl(n, p, true);
}

// --- k-partite ----------------------------------------------------------------

namespace {

// Lower bound second term of the k-partite theorem with log(1-p^2) = lq.
double KPartiteSecondTerm(const TopParts& t, double lq) {
  const double a = Log(2) + Log(t.nk1) - t.nk1 * lq - Log(t.nk);
  const double b = Log(7) + 2 * Log(t.k) + 2 * Log(t.nk1) + (t.nk - t.nk1 - t.nk2) * lq -
                   Log(3) - 2 * Log(t.nk);
  return std::exp(2 * Log(t.nk) - kLog2 + (t.n - t.nk) * lq + LogSumExp({0.0, a, b}));
}

}  // namespace

BoundPair KPartiteBounds(const PartitionShape& shape, double p) {
  RequireKPartite(shape);
  RequireProbability(p);
  const TopParts t(shape);
  const LogBases lb(p);
  const double second = KPartiteSecondTerm(t, lb.q);
  const double damp = LogSumExp(
      {0.0, Log(2) + Log(t.nk1) - t.nk1 * lb.q + lb.one_minus_p - Log(t.nk - 1)});
  const double upper =
      std::exp(kLog2 - Log(t.nk) - Log(t.nk - 1) - (t.n - t.nk) * lb.q - damp) +
      std::exp(Log(3) + 3 * Log(t.k) + (t.n - t.nk) * lb.dagger - 2 * lb.q - Log(t.nk1 - 1));
  return MakeBoundPair(second, upper, BoundSource::kKPartiteTheorem);
}

BoundPair KPartiteHalfCorollary(const PartitionShape& shape) {
  RequireKPartite(shape);
  return LowerOnly(KPartiteSecondTerm(TopParts(shape), kLogThreeQuarters),
                   BoundSource::kKPartiteHalfCorollary);
}

BoundPair KPartiteTuranBounds(int n, int k, double p) {
  RequireTuranKPartite(n, k);
  RequireProbability(p);
  const LogBases lb(p);
  const double nn = n;
  const double kk = k;
  const double outer = nn * (1 - 1 / kk);
  const double second =
      std::exp(2 * Log(n) + (outer - 1) * lb.q - Log(2 * k) +
               LogSumExp({0.0, Log(k - 1) + (-nn / kk - 1) * lb.q}) + std::log1p(kk / nn));
  const double shrink = std::log1p(-2 * kk / nn);  // log(1 - 2k/n)
  const double upper =
      std::exp(Log(2 * k) - 2 * Log(n) - (outer + 1) * lb.q -
               LogSumExp({0.0, Log(k - 1) + (1 - nn / kk) * lb.q + lb.one_minus_p}) - shrink) +
      std::exp(Log(4) + 3 * Log(k) + (outer + 1) * lb.dagger - 2 * lb.q - Log(n) - Log(k - 1) -
               4 * shrink);
  return MakeBoundPair(second, upper, BoundSource::kKPartiteTuranTheorem);
}

BoundPair KPartiteTuranHalfCorollary(int n, int k) {
  RequireTuranKPartite(n, k);
  const double nn = n;
  const double kk = k;
  const double second =
      std::exp(Log(4) + 2 * Log(n) + nn * (1 - 1 / kk) * kLogThreeQuarters - Log(6 * k) +
               LogSumExp({0.0, Log(k - 1) - (nn / kk + 1) * kLogThreeQuarters}) +
               std::log1p(kk / nn));
  return LowerOnly(second, BoundSource::kKPartiteTuranHalfCorollary);
}

BoundPair KPartiteAsymptoticBounds(const PartitionShape& shape, double p) {
  RequireKPartite(shape);
  RequireProbability(p);
  const TopParts t(shape);
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double inner = Log1pExp(Log(7) + 2 * Log(t.k) + Log(t.nk1) - p2 * (t.nk - t.nk2) -
                                Log(6) - Log(t.nk));
  const double second =
      std::exp(2 * Log(t.nk) - kLog2 - p2 * (t.n - t.nk) +
               Log1pExp(Log(2) + Log(t.nk1) - Log(t.nk) + p2 * t.nk1 + inner));
  const double decay = (p3 - p2) * (t.n - t.nk);
  const double upper =
      std::exp(kLog2 + p2 * (t.n - t.nk) - 2 * Log(t.nk) -
               Log1pExp(Log(2) + Log(t.nk1) - Log(t.nk) + p2 * t.nk1) +
               LogSumExp({0.0,
                          Log(3) + 3 * Log(t.k) + 2 * Log(t.nk) + decay - kLog2 - Log(t.nk1 - 1),
                          Log(3) + 3 * Log(t.k) + Log(t.nk) + Log(t.nk1) + decay + p2 * t.nk1 -
                              Log(t.nk1 - 1)}));
  return Asymptotic(MakeBoundPair(second, upper, BoundSource::kKPartiteAsymptotic));
}

BoundPair KPartiteTuranAsymptoticBounds(int n, int k, double p) {
  RequireTuranKPartite(n, k);
  RequireProbability(p);
  const double kk = k;
  const double x = n * p * p;
  const double spread = Log1pExp(Log(k - 1) + x / kk);
  const double second = std::exp(2 * Log(n) - x * (1 - 1 / kk) - Log(2 * k) + spread);
  const double decay = (x * p - x) * (1 - 1 / kk);
  const double upper = std::exp(
      Log(2 * k) + x * (1 - 1 / kk) - 2 * Log(n) - spread +
      LogSumExp({0.0, Log(2) + 2 * Log(k) + Log(n) + decay - Log(k - 1),
                 Log(2) + 2 * Log(k) + Log(n) + decay + x / kk}));
  return Asymptotic(MakeBoundPair(second, upper, BoundSource::kKPartiteTuranAsymptotic));
}

// --- bipartite ----------------------------------------------------------------

BoundPair BipartiteBounds(const PartitionShape& shape, double p) {
  RequireBipartite(shape);
  RequireProbability(p);
  const LogBases lb(p);
  const int n1 = shape.size(0);
  const int n2 = shape.size(1);
  const double second = std::exp(2 * Log(n2) + n1 * lb.q - kLog2 +
                                 Log1pExp(2 * Log(n1) + (n2 - n1) * lb.q - 2 * Log(n2)));
  const double shared =
      Log1pExp(Log(n1) + Log(n1 - 1) + (n2 - n1) * lb.q - Log(n2) - Log(n2 - 1));
  const double upper =
      std::exp(LogSumExp({kLog2 - Log(n2) - Log(n2 - 1) - n1 * lb.q,
                          n1 * lb.dagger - Log(n2) + std::log(8 + 8 / (1 - p))}) -
               shared);
  return MakeBoundPair(second, upper, BoundSource::kBipartiteTheorem);
}

BoundPair BipartiteHalfCorollary(const PartitionShape& shape) {
  RequireBipartite(shape);
  const int n1 = shape.size(0);
  const int n2 = shape.size(1);
  const double second =
      std::exp(2 * Log(n2) + n1 * kLogThreeQuarters - kLog2 +
               Log1pExp(2 * Log(n1) + (n2 - n1) * kLogThreeQuarters - 2 * Log(n2)));
  const double log_four_thirds = -kLogThreeQuarters;
  const double log_five_quarters = std::log(5.0) - std::log(4.0);
  const double upper = std::exp(
      LogSumExp({kLog2 + n1 * log_four_thirds - Log(n2) - Log(n2 - 1),
                 Log(24) + n1 * log_five_quarters - Log(n2)}) -
      Log1pExp(Log(n1) + Log(n1 - 1) + (n2 - n1) * kLogThreeQuarters - Log(n2) - Log(n2 - 1)));
  return MakeBoundPair(second, upper, BoundSource::kBipartiteHalfCorollary);
}

BoundPair BipartiteTuranBounds(int n, double p) {
  RequireTuranBipartite(n);
  RequireProbability(p);
  const LogBases lb(p);
  const double nn = n;
  const double second = std::exp(2 * Log(n + 1) + (nn - 1) / 2 * lb.q - Log(8));
  const double upper = std::exp(
      LogSumExp({Log(8) - Log(n) - Log(n - 2) - nn / 2 * lb.q,
                 Log(2) + nn / 2 * lb.dagger - Log(n) + std::log(8 + 8 / (1 - p))}) -
      std::log1p((nn - 3) * (1 - p * p) / (nn + 1)));
  return MakeBoundPair(second, upper, BoundSource::kBipartiteTuranTheorem);
}

BoundPair BipartiteTuranHalfCorollary(int n) {
  RequireTuranBipartite(n);
  return LowerOnly(
      std::exp(2 * Log(n + 1) + (n - 1) / 2.0 * kLogThreeQuarters - Log(4)),
      BoundSource::kBipartiteTuranHalfCorollary);
}

BoundPair BipartiteAsymptoticBounds(const PartitionShape& shape, double p) {
  RequireBipartite(shape);
  RequireProbability(p);
  const int n1 = shape.size(0);
  const int n2 = shape.size(1);
  const double p2 = p * p;
  const double balance = 2 * Log(n1) - 2 * Log(n2) - (n2 - n1) * p2;
  const double second = std::exp(2 * Log(n2) - n1 * p2 - kLog2 + Log1pExp(balance));
  const double upper = std::exp(kLog2 - 2 * Log(n2) + n1 * p2 - Log1pExp(balance) +
                                Log1pExp(Log(8) + Log(n2) + n1 * p2 * (p - 1)));
  return Asymptotic(MakeBoundPair(second, upper, BoundSource::kBipartiteAsymptotic));
}

BoundPair BipartiteTuranAsymptoticBounds(int n, double p) {
  RequireTuranBipartite(n);
  RequireProbability(p);
  const double half = n * p * p / 2;
  const double second = std::exp(2 * Log(n) - half - Log(4));
  const double upper =
      std::exp(Log(4) - 2 * Log(n) + half + Log1pExp(Log(8) + Log(n) + half * (p * p - 1)));
  return Asymptotic(MakeBoundPair(second, upper, BoundSource::kBipartiteTuranAsymptotic));
}

// --- directed -----------------------------------------------------------------

BoundPair DirectedAdjust(const BoundPair& b, FamilyKind kind) {
  if (!IsDirectedKind(kind)) {
    throw InvalidArgument("directed adjustment needs a directed family, got " +
                          std::string(FamilyKindName(kind)));
  }
  if (b.directed) {
    throw PreconditionError("bound " + std::string(BoundSourceName(b.source)) +
                            " is already adjusted for directed graphs");
  }
  BoundPair out = MakeBoundPair(2 * b.second_term, b.upper_raw / 2, b.source);
  out.directed = true;
  out.asymptotic_only = b.asymptotic_only;
  out.has_upper = b.has_upper;
  return out;
}

// --- thresholds ----------------------------------------------------------------

namespace {

void RequireTuranShape(const GraphFamily& family) {
  const PartitionShape& shape = family.shape();
  if (!family.partite() || !(shape == TuranShape(shape.total(), shape.parts()))) {
    throw InvalidArgument("Turan form needs a partite family with Turan shape; got " +
                          std::string(family.name()) + " (" + shape.ToString() + ")");
  }
}

double ThresholdExpression(const GraphFamily& family, double p, BoundForm form) {
  const PartitionShape& shape = family.shape();
  const int n = family.vertex_count();
  const double p2 = p * p;
  double value = 0.0;
  switch (UndirectedCounterpart(family.kind())) {
    case FamilyKind::kSimple:
      value = 2 * Log(n) - n * p2 - kLog2;
      break;
    case FamilyKind::kKPartite:
      if (form == BoundForm::kTuran) {
        const double k = shape.parts();
        value = 2 * Log(n) - std::log(k) - n * p2 * (1 - 1 / k) - kLog2 +
                Log1pExp(std::log(k - 1) + n * p2 / k);
      } else {
        const TopParts t(shape);
        value = 2 * Log(t.nk) - p2 * (t.n - t.nk) - kLog2 +
                Log1pExp(Log(2) + Log(t.nk1) - Log(t.nk) + p2 * t.nk1);
      }
      break;
    case FamilyKind::kBipartite:
      if (form == BoundForm::kTuran) {
        value = 2 * Log(n) - Log(4) - n * p2 / 2;
      } else {
        value = 2 * Log(shape.size(1)) - shape.size(0) * p2 - kLog2;
      }
      break;
    default:
      throw InvalidArgument("unsupported family for threshold constant");
  }
  return family.directed() ? value + kLog2 : value;
}

void CheckThresholdFamily(const GraphFamily& family, BoundForm form) {
  if (form == BoundForm::kTuran) {
    if (!family.partite()) {
      throw InvalidArgument("Turan form is defined for partite families only");
    }
    RequireTuranShape(family);
  }
}

}  // namespace

ThresholdSpec ThresholdC(const GraphFamily& family, double p, BoundForm form) {
  RequireProbability(p);
  CheckThresholdFamily(family, form);
  ThresholdSpec spec;
  spec.kind = family.kind();
  spec.form = form;
  spec.n = family.vertex_count();
  spec.p = p;
  spec.c_observed = ThresholdExpression(family, p, form);
  spec.c = spec.c_observed;
  return spec;
}

ThresholdSpec SolveThresholdP(const GraphFamily& family, double c, BoundForm form) {
  CheckThresholdFamily(family, form);
  double lo = 1e-300;
  double hi = std::nextafter(1.0, 0.0);
  const double at_lo = ThresholdExpression(family, lo, form) - c;
  const double at_hi = ThresholdExpression(family, hi, form) - c;
  if (!(at_lo >= 0.0 && at_hi <= 0.0)) {
    throw DomainError("threshold constant c=" + std::to_string(c) +
                      " is not reachable for p in (0,1) at n=" +
                      std::to_string(family.vertex_count()));
  }
  for (int iter = 0; iter < 2000 && std::nextafter(lo, 1.0) < hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ThresholdExpression(family, mid, form) - c > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double p = std::abs(ThresholdExpression(family, lo, form) - c) <=
                           std::abs(ThresholdExpression(family, hi, form) - c)
                       ? lo
                       : hi;
  ThresholdSpec spec = ThresholdC(family, p, form);
  spec.c = c;
  return spec;
}

// --- aggregation ----------------------------------------------------------------

BoundPair TheoremBounds(const GraphFamily& family, double p) {
  BoundPair b;
  switch (UndirectedCounterpart(family.kind())) {
    case FamilyKind::kSimple: b = GnpBounds(family.vertex_count(), p); break;
    case FamilyKind::kKPartite: b = KPartiteBounds(family.shape(), p); break;
    case FamilyKind::kBipartite: b = BipartiteBounds(family.shape(), p); break;
    default: throw InvalidArgument("unsupported family");
  }
  return family.directed() ? DirectedAdjust(b, family.kind()) : b;
}

std::vector<BoundPair> ApplicableBounds(const GraphFamily& family, double p) {
  RequireProbability(p);
  const PartitionShape& shape = family.shape();
  const int n = family.vertex_count();
  const bool half = p == 0.5;
  const bool turan = family.partite() && shape == TuranShape(n, shape.parts());
  std::vector<BoundPair> rows;
  switch (UndirectedCounterpart(family.kind())) {
    case FamilyKind::kSimple:
      rows.push_back(GnpBounds(n, p));
      if (half) rows.push_back(GnpHalfCorollary(n));
      if (n >= 200 && p <= 0.5) {
        rows.push_back(GnpAsymptoticBounds(n, p));
        rows.push_back(GnpAsymptoticBoundsProofExponent(n, p));
      }
      break;
    case FamilyKind::kKPartite: {
      const int k = shape.parts();
      rows.push_back(KPartiteBounds(shape, p));
      if (half) rows.push_back(KPartiteHalfCorollary(shape));
      rows.push_back(KPartiteAsymptoticBounds(shape, p));
      if (turan && n > 2 * k) {
        rows.push_back(KPartiteTuranBounds(n, k, p));
        if (half) rows.push_back(KPartiteTuranHalfCorollary(n, k));
        rows.push_back(KPartiteTuranAsymptoticBounds(n, k, p));
      }
      break;
    }
    case FamilyKind::kBipartite:
      rows.push_back(BipartiteBounds(shape, p));
      if (half) rows.push_back(BipartiteHalfCorollary(shape));
      rows.push_back(BipartiteAsymptoticBounds(shape, p));
      if (turan) {
        rows.push_back(BipartiteTuranBounds(n, p));
        if (half) rows.push_back(BipartiteTuranHalfCorollary(n));
        rows.push_back(BipartiteTuranAsymptoticBounds(n, p));
      }
      break;
    default:
      throw InvalidArgument("unsupported family");
  }
  if (family.directed()) {
    for (BoundPair& b : rows) b = DirectedAdjust(b, family.kind());
  }
  return rows;
}

}  // namespace diamsieve
