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

#ifndef TORSIONGATE_ERRORS_HPP
#define TORSIONGATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsiongate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (reducible field polynomial,
/// singular curve, wrong degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A field construction or factorization would exceed the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::string what, int degree, int cap)
      : Error(std::move(what) + " (degree " + std::to_string(degree) +
              " exceeds cap " + std::to_string(cap) + ")"),
        degree_(degree),
        cap_(cap) {}

  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Finite-group enumeration or point counting ran past its size cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace torsiongate

#endif  // TORSIONGATE_ERRORS_HPP
