// Copyright 2026 The Admission Auctions Authors.
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

#include "admission/rate.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "admission/error.hpp"

namespace admission {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void reject(std::string_view text) {
  throw InputError("malformed_number", "not an exact decimal or fraction: \"" +
                                           std::string(text) + "\"");
}

// The string constructor treats a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer(std::string(digits.substr(first)));
}

Integer pow10(unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rate parse_rate(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) reject(text);

  Rate value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    const Integer d = decimal_integer(den);
    if (d == 0) throw InputError("zero_denominator", "zero denominator in \"" + std::string(text) + "\"");
    value = Rate(decimal_integer(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) reject(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) reject(text);
    std::string digits = std::string(whole) + std::string(frac);
    value = Rate(decimal_integer(digits), pow10(static_cast<unsigned>(frac.size())));
  } else {
    if (!all_digits(body)) reject(text);
    value = Rate(decimal_integer(body));
  }
  return negative ? Rate(-value) : value;
}

bool is_terminating_decimal(const Rate& value) {
  Integer den = boost::multiprecision::denominator(value);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string format_fraction(const Rate& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_rate(const Rate& value) {
  if (!is_terminating_decimal(value)) return format_fraction(value);

  Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // den = 2^a 5^b; scale to 10^max(a, b).
  unsigned twos = 0, fives = 0;
  for (Integer d = den; d % 2 == 0; d /= 2) ++twos;
  for (Integer d = den; d % 5 == 0; d /= 5) ++fives;
  const unsigned places = std::max(twos, fives);
  const bool negative = num < 0;
  if (negative) num = -num;
  const Integer scaled = num * (pow10(places) / den);

  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  return negative ? "-" + digits : digits;
}

Rate rate_from_u64_fraction(std::uint64_t numerator) {
  static const Integer kTwoTo64 = Integer(1) << 64;
  return Rate(Integer(numerator), kTwoTo64);
}

double to_double(const Rate& value) { return value.convert_to<double>(); }

}  // namespace admission
