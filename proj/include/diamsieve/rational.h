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

#ifndef DIAMSIEVE_RATIONAL_H_
#define DIAMSIEVE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace diamsieve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "r/s", an integer, or a plain decimal literal such as "0.25".
// Decimal literals are converted exactly (0.1 becomes 1/10).
// Throws InvalidArgument on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

Rational Pow(const Rational& base, std::uint64_t exponent);

// True iff 0 < p < 1.
bool IsOpenUnitProbability(const Rational& p);

}  // namespace diamsieve

#endif  // DIAMSIEVE_RATIONAL_H_
