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

#include "moometrics/rational.h"

#include <charconv>
#include <cstdlib>

namespace moometrics {
namespace {

__extension__ using Wide = __int128;

std::string WideToString(Wide value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + value % 10));
    value /= 10;
  }
  return digits;
}

std::optional<std::int64_t> ParseInt(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::string FormatDecimal(const Rational& value, int digits) {
  // boost::rational keeps the denominator positive.
  const bool negative = value.numerator() < 0;
  Wide num = value.numerator();
  if (negative) num = -num;
  const Wide den = value.denominator();
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  Wide scaled = num * scale;
  Wide quotient = scaled / den;
  const Wide remainder = scaled % den;
  if (2 * remainder > den || (2 * remainder == den && quotient % 2 == 1)) {
    ++quotient;
  }

  std::string out;
  if (negative && quotient != 0) out.push_back('-');
  out += WideToString(quotient / scale);
  if (digits > 0) {
    std::string frac = WideToString(quotient % scale);
    out.push_back('.');
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::optional<Rational> ParseRational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseInt(text.substr(0, slash));
    auto den = ParseInt(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (!AllDigits(frac) || frac.size() > 17) return std::nullopt;
    if (whole.empty()) whole = "0";
  }
  if (!AllDigits(whole)) return std::nullopt;

  auto whole_value = ParseInt(whole);
  if (!whole_value) return std::nullopt;
  Rational result(*whole_value);
  if (!frac.empty()) {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    result += Rational(*ParseInt(frac), den);
  }
  return negative ? -result : result;
}

}  // namespace moometrics
