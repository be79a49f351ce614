// Copyright 2026 The sectiondim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECTIONDIM_ERRORS_HPP
#define SECTIONDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sectiondim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group spec, element literal or ring-element expression.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration grew past its configured element cap (or radius limit).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its domain: zero ring element where a nonzero
/// one is needed, element shape not matching the preset, empty window.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sectiondim

#endif  // SECTIONDIM_ERRORS_HPP
