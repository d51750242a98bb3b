// Copyright 2026 The qcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcheb {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised when a denominator such as (1 - q^j b) or (1 + q^j) vanishes at the
/// requested parameter point.
class PoleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);

/// base^exponent; negative exponents invert (PoleError on 0^-k).
Rational power(const Rational& base, long exponent);

/// 1/r, or PoleError naming `what` when r is zero.
Rational inverse(const Rational& r, std::string_view what = "division");

/// Lowest-terms "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "num", "num/den" or "-num/den". Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Ordinary binomial coefficient over the integers; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace qcheb
