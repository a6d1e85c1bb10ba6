// Copyright 2026 The slfol Authors
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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace slfol {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a decimal literal such as "-0.25" (decimals are
/// read exactly, so "0.1" is 1/10).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// The exact value of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Representative of value mod 1 in [0, 1).
Rational fractional_part(const Rational& value);

Integer lcm(const Integer& a, const Integer& b);

/// Throws InvalidInput when the integer does not fit in 64 bits.
std::int64_t to_int64(const Integer& value);

}  // namespace slfol
