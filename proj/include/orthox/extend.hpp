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

#include <optional>
#include <vector>

#include "orthox/lattice.hpp"
#include "orthox/ortho_basis.hpp"
#include "orthox/quadform.hpp"

namespace orthox {

/// Proper: det = +l^3 (a point of SO(3)). Improper: last vector negated.
enum class Orientation { Proper, Improper };

/// What each stage of extend3 chose, for logging and tests.
struct ExtendTrace {
  BigInt content;            // gcd of the input coordinates
  IntVector primitive;       // input / content
  BigInt primitive_length;   // |primitive|
  std::optional<KernelBasis> kernel;
  std::optional<QuadForm> form;
  std::optional<Representation> representation;
  SolveTrace solve;
};

struct ExtendResult {
  OrthoBasis basis;
  ExtendTrace trace;
};

/// Completes v in Z^3 with |v| integral to an orthoregular basis
/// {v, w, x} of Z^3. The first vector is v itself.
/// Throws PreconditionError for the zero vector or wrong dimension and
/// InfeasibleError(NonIntegerNorm) when |v|^2 is not a perfect square.
OrthoBasis extend3(const IntVector& v, Orientation orientation = Orientation::Proper);
ExtendResult extend3_traced(const IntVector& v, Orientation orientation = Orientation::Proper);

/// One basis for every representation of l^2 by the kernel form found within
/// the oracle's proven search bound. Same errors as extend3.
std::vector<OrthoBasis> extend3_all(const IntVector& v,
                                    Orientation orientation = Orientation::Proper);

/// Columns are the basis vectors divided by the common length.
struct RationalOrthogonalMatrix {
  BigInt denominator;
  IntMatrix numerators;

  BigRational entry(std::size_t i, std::size_t j) const {
    BigRational q(numerators(i, j), denominator);
    q.canonicalize();
    return q;
  }
};

/// Throws PreconditionError for a non-full basis or a non-integral length.
/// Verifies M^T M = I exactly before returning.
RationalOrthogonalMatrix to_rational_orthogonal(const OrthoBasis& basis);

/// Primitive (a, b, c) with 0 <= a <= b <= c, integral norm, streamed in
/// order of (norm, a, b, c). With a limit, only c <= limit is produced and
/// the stream ends; without one it is infinite.
class IntegerNormEnumerator {
 public:
  explicit IntegerNormEnumerator(std::optional<long> limit = std::nullopt);
  std::optional<IntVector> next();

 private:
  void fill_next_shell();

  std::optional<long> limit_;
  long length_ = 0;
  std::vector<IntVector> shell_;
  std::size_t pos_ = 0;
};

/// All vectors from IntegerNormEnumerator(limit). Requires limit >= 1.
std::vector<IntVector> enumerate_integer_norm(long limit);

}  // namespace orthox
