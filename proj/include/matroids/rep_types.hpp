// Copyright 2026 The Authors.
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

#ifndef MATROIDS_REP_TYPES_HPP_
#define MATROIDS_REP_TYPES_HPP_

#include <vector>

#include "matroids/subset.hpp"

namespace matroids {

// Matrix over GF(prime), stored column-major: one column per element.
struct LinearRep {
  int prime = 2;
  int rows = 0;
  std::vector<std::vector<int>> columns;

  bool operator==(const LinearRep&) const = default;
};

struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

// Multigraph; loops and parallel edges allowed. Edge i is ground element i.
struct GraphRep {
  int vertices = 0;
  std::vector<Edge> edges;

  bool operator==(const GraphRep&) const = default;
};

// Binary matroid of the incidence matrix of `graph` with the characteristic
// row of `odd` appended.
struct EvenCycleRep {
  GraphRep graph;
  Subset odd = 0;

  bool operator==(const EvenCycleRep&) const = default;
};

// Ternary matroid with column b_u + b_v for odd edges and b_u - b_v for the
// rest; the stored endpoint order fixes the orientation.
struct SignedGraphRep {
  GraphRep graph;
  Subset odd = 0;

  bool operator==(const SignedGraphRep&) const = default;
};

struct UniformSpec {
  int rank = 0;
  int size = 0;

  bool operator==(const UniformSpec&) const = default;
};

struct WhirlSpec {
  int rank = 0;

  bool operator==(const WhirlSpec&) const = default;
};

}  // namespace matroids

#endif  // MATROIDS_REP_TYPES_HPP_
