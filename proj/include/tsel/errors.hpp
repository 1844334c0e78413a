// Copyright 2026 The tsel Authors.
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

#include <stdexcept>
#include <string>

namespace tsel {

// Base of all errors raised by the library. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or configuration (exit code 1).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input data: bad encoding, misaligned parallel text (exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

// A translator failed or violated the line protocol (exit code 3).
class TranslatorError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsel
