/*
   Copyright 2026 The specpoly Authors

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

#ifndef SPECPOLY_ERRORS_HPP
#define SPECPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specpoly {

/// Base of every domain error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A coefficient a_k has degree greater than k, so L would not preserve P_n.
class DegreeViolation : public Error {
   public:
    DegreeViolation(std::size_t k, std::size_t degree)
        : Error("coefficient a_" + std::to_string(k) + " has degree " + std::to_string(degree) +
                " > " + std::to_string(k)),
          k_(k),
          degree_(degree) {}

    std::size_t k() const noexcept { return k_; }
    std::size_t degree() const noexcept { return degree_; }

   private:
    std::size_t k_;
    std::size_t degree_;
};

class EmptyOperator : public Error {
   public:
    EmptyOperator() : Error("operator has no nonzero coefficient") {}
};

/// Bad argument to an otherwise total operation (s = 0, lo > hi, malformed rational, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// Division by (x - root) left a nonzero remainder.
class NonzeroRemainder : public Error {
   public:
    NonzeroRemainder(const std::string& root, const std::string& remainder)
        : Error("polynomial does not vanish at " + root + " (remainder " + remainder + ")"),
          remainder_(remainder) {}

    const std::string& remainder() const noexcept { return remainder_; }

   private:
    std::string remainder_;
};

class UnsupportedLeadingCoefficient : public Error {
   public:
    using Error::Error;
};

class NotPolynomialReducible : public Error {
   public:
    using Error::Error;
};

class NonIntegrable : public Error {
   public:
    using Error::Error;
};

class NoConvergence : public Error {
   public:
    using Error::Error;
};

}  // namespace specpoly

#endif
