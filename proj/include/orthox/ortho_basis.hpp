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

#include <span>
#include <vector>

#include "orthox/lattice.hpp"

namespace orthox {

/// k <= n integer vectors in Z^n, pairwise orthogonal with one common
/// nonzero norm. Construction validates; instances are always orthoregular.
class OrthoBasis {
 public:
  /// Throws PreconditionError if `vectors` is not orthoregular or k > n.
  explicit OrthoBasis(std::vector<IntVector> vectors);

  std::size_t size() const { return vectors_.size(); }
  std::size_t dim() const { return vectors_.front().dim(); }
  bool is_full() const { return size() == dim(); }
  const BigInt& length_sq() const { return length_sq_; }
  const std::vector<IntVector>& vectors() const { return vectors_; }
  const IntVector& operator[](std::size_t i) const { return vectors_[i]; }

  /// det of the matrix with the vectors as columns; requires a full basis.
  BigInt determinant() const;

  /// Copy with `v` appended; throws if the result is not orthoregular.
  OrthoBasis with(const IntVector& v) const;

  friend bool operator==(const OrthoBasis&, const OrthoBasis&) = default;

 private:
  std::vector<IntVector> vectors_;
  BigInt length_sq_;
};

}  // namespace orthox
