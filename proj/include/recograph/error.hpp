// Copyright 2026 The recograph Authors
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

#ifndef RECOGRAPH_ERROR_HPP_
#define RECOGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace recograph {

// Root of every exception thrown by the library. Each subclass maps to one
// failure kind of the public contract, so callers can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-loop or out-of-range endpoint.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

// The same (src, dst) pair claimed both Official and Biased.
class LabelConflict : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// A score vector that does not cover every edge of the graph it ranks.
class IncompleteScores : public Error {
 public:
  using Error::Error;
};

// ROC-style evaluation needs at least one positive and one negative.
class DegenerateTruth : public Error {
 public:
  using Error::Error;
};

// Malformed input file (edge list, names sidecar, config, scores).
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Thrown by a RecommendationOracle that cannot serve an item.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace recograph

#endif  // RECOGRAPH_ERROR_HPP_
