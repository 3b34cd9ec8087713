/*
   Copyright 2026 The torsiongate Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORSIONGATE_RATIONAL_HPP
#define TORSIONGATE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torsiongate {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or "-n/d". The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always emits "num/den", e.g. "-2/1".
std::string to_fraction_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace torsiongate

#endif  // TORSIONGATE_RATIONAL_HPP
