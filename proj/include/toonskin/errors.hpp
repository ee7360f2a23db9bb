// Copyright 2026 The Toonskin Authors. All Rights Reserved.
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

#ifndef TOONSKIN_ERRORS_HPP_
#define TOONSKIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace toonskin {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A width or height of zero was requested.
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

// Two images or masks that must be paired do not match.
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

// Image below the 3x3 minimum needed by the edge detector.
class TooSmallError : public Error {
 public:
  using Error::Error;
};

// File could not be read, decoded, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed user input: unknown classifier name, bad manifest line, etc.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace toonskin

#endif  // TOONSKIN_ERRORS_HPP_
