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

#ifndef ADMISSION_RATE_HPP_
#define ADMISSION_RATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace admission {

// Exact rational backed by GMP's mpq_t. Always held in lowest terms with a
// positive denominator.
using Rate = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "3", "0.4", "-1.25" or "3/7" exactly. Throws InputError on anything
// else, including a zero denominator.
Rate parse_rate(std::string_view text);

// Decimal rendering when the value terminates in base 10 ("0.4", "1"),
// otherwise "num/den" ("59/150").
std::string format_rate(const Rate& value);

// Always "num/den", or just "num" for integers.
std::string format_fraction(const Rate& value);

// True when the reduced denominator has no prime factors other than 2 and 5.
bool is_terminating_decimal(const Rate& value);

// value = numerator / 2^64.
Rate rate_from_u64_fraction(std::uint64_t numerator);

inline Rate make_rate(long num, long den = 1) { return Rate(num, den); }

inline bool in_unit_interval(const Rate& value) { return value >= 0 && value <= 1; }

// Lossy; for reporting only.
double to_double(const Rate& value);

}  // namespace admission

#endif  // ADMISSION_RATE_HPP_
