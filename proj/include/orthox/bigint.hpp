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

#include <gmpxx.h>

#include <string>

namespace orthox {

/// Arbitrary-precision integer. Never bind GMP expressions to `auto`.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace orthox
