// Copyright 2026 The moometrics Authors.
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

#ifndef MOOMETRICS_RATIONAL_H_
#define MOOMETRICS_RATIONAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace moometrics {

// Every ratio metric is kept exact; rounding happens only when rendering.
using Rational = boost::rational<std::int64_t>;

// Fixed-point decimal with `digits` fractional digits, rounding half to even.
// FormatDecimal(Rational(2, 3)) == "0.666667".
std::string FormatDecimal(const Rational& value, int digits = 6);

// Accepts integers ("5"), decimals ("0.75", "-1.5") and fractions ("3/4").
std::optional<Rational> ParseRational(std::string_view text);

}  // namespace moometrics

#endif  // MOOMETRICS_RATIONAL_H_
