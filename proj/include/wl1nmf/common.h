// Copyright 2026 The wl1nmf Authors.
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

#ifndef WL1NMF_COMMON_H_
#define WL1NMF_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wl1nmf {

// Row/column indices. 32 bits so that gathers can use the i32 forms.
using Index = std::int32_t;
// Offsets into the nonzero arrays.
using Offset = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad dimensions, lambda out of
// range, negative factor entries, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input data is malformed or violates the data model (negative matrix
// entries, parse failures, I/O errors).
class DataError : public Error {
 public:
  using Error::Error;
};

// A requested quantity is mathematically undefined for the given input,
// e.g. a relative error with ||X||_1 = 0.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace wl1nmf

#endif  // WL1NMF_COMMON_H_
