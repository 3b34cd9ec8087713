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


#include "linalg.hpp"

namespace torsiongate::detail {

std::optional<std::vector<std::vector<Rational>>> solve(Matrix A,
                                                        std::vector<std::vector<Rational>> rhs) {
  std::size_t n = A.size();
  std::size_t k = rhs.size();
  // Augment.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j) A[r].push_back(rhs[j][r]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[c]);
    Rational inv = 1 / A[c][c];
    for (std::size_t j = c; j < n + k; ++j) A[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (std::size_t j = c; j < n + k; ++j)
        if (A[c][j] != 0) A[r][j] -= f * A[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(k, std::vector<Rational>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < n; ++r) out[j][r] = A[r][n + j];
  return out;
}

}  // namespace torsiongate::detail
