// Copyright 2026 The orthox Authors
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

#include <chrono>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "orthox/lattice.hpp"
#include "orthox/ortho_basis.hpp"

namespace orthox {

struct SearchBudget {
  long coord_bound = 1;
  std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
  std::chrono::milliseconds timeout{std::chrono::hours(1)};

  /// Throws PreconditionError unless every field is positive.
  void validate() const;
};

/// Result of a bounded search for the largest orthoregular extension.
struct ExtensionReport {
  OrthoBasis input;
  std::size_t achieved = 0;  // vectors added to the input
  OrthoBasis witness;        // input followed by the added vectors
  /// True when the value is exact: the coordinate box contains every vector
  /// of the right norm and no budget limit was hit. Otherwise `achieved` is
  /// only a lower bound.
  bool exhausted = false;
  std::size_t candidates = 0;  // norm-L vectors orthogonal to the input
  std::uint64_t nodes = 0;     // search nodes visited
};

/// Searches integer vectors with coordinates in [-bound, bound], norm equal
/// to the input length and orthogonal to the input, for the largest set that
/// extends `s` orthoregularly. Each added vector has its first nonzero
/// coordinate positive; among maximal extensions the lexicographically first
/// (in candidate order) is reported. Fans out over first-level candidates
/// with OpenMP; the result matches serial::extend_search whenever the search
/// completes within budget.
ExtensionReport extend_search(const OrthoBasis& s, const SearchBudget& budget);

namespace serial {
/// Single-threaded reference for extend_search.
ExtensionReport extend_search(const OrthoBasis& s, const SearchBudget& budget);
}  // namespace serial

/// Record of the parity argument showing that a vector in odd dimension
/// with only odd coordinates has no orthogonal integer vector of equal
/// length.
struct ParityCertificate {
  IntVector v;
  int length_sq_parity = 1;      // |v|^2 mod 2, equals n mod 2
  int orthogonal_norm_parity = 0;  // forced parity of |v'|^2 for (v, v') = 0
  std::vector<std::string> steps;
};

/// Throws PreconditionError unless dim(v) is odd and every coordinate is odd.
ParityCertificate all_odd_obstruction(const IntVector& v);

/// For odd n, a full orthoregular basis of Z^n has integral length; returns
/// whether length_sq is a perfect square. Throws for even n.
bool integrality_obstruction(std::size_t n, const BigInt& length_sq);

}  // namespace orthox
