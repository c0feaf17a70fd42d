/*
   Copyright 2026 The hyperlab Authors

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


#ifndef HYPERLAB_ERROR_HPP
#define HYPERLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, element names, records).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& message)
      : Error(message + " at position " + std::to_string(position) + " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace hyperlab

#endif  // HYPERLAB_ERROR_HPP
