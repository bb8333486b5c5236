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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orthox/lattice.hpp"
#include "orthox/quadform.hpp"

namespace orthox {

/// Outcome of extending every primitive v in [0, bound]^3 with integral norm.
struct TheoremSweepReport {
  std::size_t vectors = 0;       // vectors extended
  std::size_t failures = 0;      // any check failed (basis, length, det = +l^3)
  std::size_t gram_checks = 0;   // kernel bases with det(gram) = |v|^2 verified
  std::size_t gram_failures = 0;
  BigInt digest = 0;             // order-independent checksum of every basis
  std::vector<std::string> messages;  // first few failures, sorted

  friend bool operator==(const TheoremSweepReport&, const TheoremSweepReport&) = default;
};

/// OpenMP over the first coordinate.
TheoremSweepReport theorem_sweep(long bound);

/// Random valid forms: half from kernel Gram matrices of random integer-norm
/// vectors under a random change of basis, half synthetic (a | l^2 + b^2) so
/// that non-representable forms occur.
struct AgreementReport {
  std::size_t forms = 0;
  std::size_t representable = 0;
  std::size_t disagreements = 0;      // solve vs oracle presence, or vs is_representable
  std::size_t equation_failures = 0;  // a returned (x, y) fails the equation or identity
  std::vector<std::string> messages;

  friend bool operator==(const AgreementReport&, const AgreementReport&) = default;
};

/// Kernel: Gram forms of random kernel bases. Synthetic: a | l^2 + b^2 picked
/// directly, so non-representable forms occur. Mixed alternates the two.
enum class FormSource { Kernel, Synthetic, Mixed };

AgreementReport quadform_agreement(std::uint64_t seed, std::size_t count, long max_a,
                                   FormSource source = FormSource::Mixed);

/// Random (v, w) with |v| integral and (v, w) = 0; counts primes q = 3 mod 4
/// dividing |w|^2 to an odd power.
struct ValuationReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;

  friend bool operator==(const ValuationReport&, const ValuationReport&) = default;
};

ValuationReport orthogonal_pair_valuations(std::uint64_t seed, std::size_t count);

namespace serial {
TheoremSweepReport theorem_sweep(long bound);
AgreementReport quadform_agreement(std::uint64_t seed, std::size_t count, long max_a,
                                   FormSource source = FormSource::Mixed);
ValuationReport orthogonal_pair_valuations(std::uint64_t seed, std::size_t count);
}  // namespace serial

/// Deterministic per-item generator used by the sweeps.
std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform-ish random v in Z^3 with integral norm and |coords| <= ~2r^2,
/// from the (m, n, p, q) parametrization, made primitive, with random
/// coordinate signs and order.
IntVector random_integer_norm_vector(std::mt19937_64& rng, long r);

}  // namespace orthox
