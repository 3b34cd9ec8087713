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


#ifndef TORSIONGATE_SRC_LINALG_HPP
#define TORSIONGATE_SRC_LINALG_HPP

#include <optional>
#include <vector>

#include "torsiongate/rational.hpp"

namespace torsiongate::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Solves A X = B for square nonsingular A (B given column by column).
/// Returns nullopt when A is singular.
std::optional<std::vector<std::vector<Rational>>> solve(Matrix A,
                                                        std::vector<std::vector<Rational>> rhs);

}  // namespace torsiongate::detail

#endif  // TORSIONGATE_SRC_LINALG_HPP
