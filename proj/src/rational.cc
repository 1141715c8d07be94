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

#include "diamsieve/rational.h"

#include <cctype>

#include "diamsieve/errors.h"

namespace diamsieve {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InvalidArgument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash));
    BigInt den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
    BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part));
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational value(whole * scale + frac, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(ParseInteger(text));
}

std::string ToString(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Rational Pow(const Rational& base, std::uint64_t exponent) {
  Rational result(1);
  Rational factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

bool IsOpenUnitProbability(const Rational& p) { return p > 0 && p < 1; }

}  // namespace diamsieve
