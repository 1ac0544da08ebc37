// Copyright 2026 The agvpath Authors
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

#ifndef AGVPATH_ERRORS_HPP_
#define AGVPATH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace agvpath {

// Curve parameter outside [0, 1], or a range with u1 > u2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ||C'(u)|| vanished where a regular parameterization is required.
class SingularParameterizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Wheel layouts that do not define the requested quantity (e.g. coincident
// wheels for the differential offset).
class DegenerateGeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Velocity planning was requested on a path whose junctions do not admit
// smooth motion.
class DiscontinuousPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace agvpath

#endif  // AGVPATH_ERRORS_HPP_
