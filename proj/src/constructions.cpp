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

#include "orthox/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/extend.hpp"

namespace orthox {
namespace {

// Same content as data/hurwitz_tables.txt; a unit test diffs the two.
constexpr const char* kTables = R"(2 2: -1 +0
4 2: -1 +0 -3 +2
4 3: -2 +3 +0 -1
4 4: -3 -2 +1 +0
8 2: -1 +0 -3 +2 -5 +4 +7 -6
8 3: -2 +3 +0 -1 -6 -7 +4 +5
8 4: -3 -2 +1 +0 -7 +6 -5 +4
8 5: -4 +5 +6 +7 +0 -1 -2 -3
8 6: -5 -4 +7 -6 +1 +0 +3 -2
8 7: -6 -7 -4 +5 +2 -3 +0 +1
8 8: -7 +6 -5 -4 +3 +2 -1 +0
)";

const std::array<MultiplicationTable, 3>& compiled_tables() {
  static const std::array<MultiplicationTable, 3> tables = [] {
    std::istringstream in(kTables);
    auto parsed = parse_tables(in);
    if (parsed.size() != 3) throw InternalError("compiled multiplication tables are malformed");
    return std::array<MultiplicationTable, 3>{parsed[0], parsed[1], parsed[2]};
  }();
  return tables;
}

}  // namespace

IntVector MultiplicationTable::apply(std::size_t generator, const IntVector& v) const {
  if (v.dim() != static_cast<std::size_t>(dimension))
    throw PreconditionError("MultiplicationTable::apply: dimension mismatch");
  const auto& g = generators.at(generator);
  std::vector<BigInt> out(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) out[r] = g[r].sign * v[g[r].index];
  return IntVector(std::move(out));
}

std::vector<MultiplicationTable> parse_tables(std::istream& in) {
  std::map<int, MultiplicationTable> by_dim;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n = 0, k = 0;
    char colon = 0;
    if (!(ls >> n >> k >> colon) || colon != ':')
      throw PreconditionError("parse_tables: bad header in '" + line + "'");
    std::vector<SignedIndex> gen;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
        throw PreconditionError("parse_tables: bad entry '" + tok + "'");
      gen.push_back({tok[0] == '-' ? -1 : 1, std::stoul(tok.substr(1))});
    }
    if (gen.size() != static_cast<std::size_t>(n))
      throw PreconditionError("parse_tables: row length differs from dimension in '" + line + "'");
    auto& t = by_dim[n];
    t.dimension = n;
    if (static_cast<int>(t.generators.size()) + 2 != k)
      throw PreconditionError("parse_tables: generators out of order in '" + line + "'");
    t.generators.push_back(std::move(gen));
  }
  std::vector<MultiplicationTable> out;
  for (auto& [n, t] : by_dim) out.push_back(std::move(t));
  return out;
}

std::string format_tables() {
  std::string out;
  for (const auto& t : compiled_tables()) {
    for (std::size_t k = 0; k < t.generators.size(); ++k) {
      out += std::to_string(t.dimension) + " " + std::to_string(k + 2) + ":";
      for (const auto& e : t.generators[k])
        out += std::string(" ") + (e.sign < 0 ? "-" : "+") + std::to_string(e.index);
      out += "\n";
    }
  }
  return out;
}

const MultiplicationTable& multiplication_table(int n) {
  switch (n) {
    case 2: return compiled_tables()[0];
    case 4: return compiled_tables()[1];
    case 8: return compiled_tables()[2];
    default:
      throw PreconditionError("multiplication_table: no table in dimension " + std::to_string(n));
  }
}

OrthoBasis hurwitz_basis(const IntVector& v) {
  const auto& table = multiplication_table(static_cast<int>(v.dim()));
  if (v.is_zero()) throw PreconditionError("hurwitz_basis: zero vector");
  std::vector<IntVector> out{v};
  for (std::size_t k = 0; k < table.generators.size(); ++k) out.push_back(table.apply(k, v));
  return OrthoBasis(std::move(out));
}

OrthoBasis lift(const OrthoBasis& s) {
  auto l = isqrt_exact(s.length_sq());
  if (!l)
    throw PreconditionError("lift: length^2 " + s.length_sq().get_str() + " is not a square");
  IntVector head = IntVector::zero(s.dim() + 1);
  head[0] = *l;
  std::vector<IntVector> out{head};
  for (const auto& v : s.vectors()) out.push_back(concat(IntVector{0}, v));
  return OrthoBasis(std::move(out));
}

OrthoBasis compose_direct_sum(const std::vector<Block>& parts) {
  std::size_t count = 0;
  for (const auto& p : parts) {
    if (const auto* b = std::get_if<OrthoBasis>(&p)) {
      if (count && b->size() != count)
        throw PreconditionError("compose_direct_sum: parts carry " + std::to_string(count) +
                                " and " + std::to_string(b->size()) + " vectors");
      count = b->size();
    }
  }
  if (!count) throw PreconditionError("compose_direct_sum: every block is zero");

  std::vector<IntVector> out(count);
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < count; ++j) {
      const IntVector piece = std::holds_alternative<OrthoBasis>(p)
                                  ? std::get<OrthoBasis>(p)[j]
                                  : IntVector::zero(std::get<ZeroBlock>(p).dim);
      out[j] = concat(out[j], piece);
    }
  }
  try {
    return OrthoBasis(std::move(out));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("compose_direct_sum: result is not orthoregular: ") + e.what());
  }
}

OrthoBasis compose_extend(const IntVector& v, const std::vector<std::size_t>& sizes) {
  std::size_t total = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw PreconditionError("compose_extend: empty block");
    total += s;
  }
  if (total != v.dim())
    throw PreconditionError("compose_extend: block sizes sum to " + std::to_string(total) +
                            ", vector has dimension " + std::to_string(v.dim()));
  if (v.is_zero()) throw PreconditionError("compose_extend: zero vector");

  std::vector<Block> parts;
  std::size_t offset = 0, count = SIZE_MAX;
  for (std::size_t s : sizes) {
    IntVector block(std::vector<BigInt>(v.coords().begin() + offset,
                                        v.coords().begin() + offset + s));
    offset += s;
    if (block.is_zero()) {
      parts.emplace_back(ZeroBlock{s});
      continue;
    }
    std::vector<IntVector> ext;
    if (s == 2 || s == 4 || s == 8) {
      ext = hurwitz_basis(block).vectors();
    } else if (s == 3 && isqrt_exact(block.norm_sq())) {
      ext = extend3(block).vectors();
    } else {
      ext = {block};
    }
    count = std::min(count, ext.size());
    parts.emplace_back(OrthoBasis(std::move(ext)));
  }
  for (auto& p : parts) {
    if (auto* b = std::get_if<OrthoBasis>(&p)) {
      std::vector<IntVector> head(b->vectors().begin(), b->vectors().begin() + count);
      *b = OrthoBasis(std::move(head));
    }
  }
  return compose_direct_sum(parts);
}

OrthoBasis hurwitz_blocks(const IntVector& v, std::size_t d) {
  if (d != 2 && d != 4 && d != 8)
    throw PreconditionError("hurwitz_blocks: block size must be 2, 4 or 8");
  if (v.dim() == 0 || v.dim() % d != 0)
    throw PreconditionError("hurwitz_blocks: dimension " + std::to_string(v.dim()) +
                            " is not a multiple of " + std::to_string(d));
  return compose_extend(v, std::vector<std::size_t>(v.dim() / d, d));
}

OddSquareTuple odd_square_tuple(long n) {
  if (n < 1 || n % 8 != 1)
    throw PreconditionError("odd_square_tuple: n = " + std::to_string(n) + " is not 1 mod 8");
  // Smallest odd root with root^2 >= n.
  long root = static_cast<long>(BigInt(sqrt(BigInt(n))).get_si());
  if (root * root < n) ++root;
  if (root % 2 == 0) ++root;
  const long threes = (root * root - n) / 8;
  if (9 * n < root * root || threes > n)
    throw InternalError("odd_square_tuple: too many threes for n = " + std::to_string(n));

  std::vector<BigInt> entries(static_cast<std::size_t>(n), BigInt(1));
  std::fill_n(entries.begin(), threes, BigInt(3));
  OddSquareTuple out{IntVector(std::move(entries)), threes, root};
  if (out.entries.norm_sq() != root * root)
    throw InternalError("odd_square_tuple: square sum check failed");
  return out;
}

OrthoBasis pair_basis(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw PreconditionError("pair_basis: n = " + std::to_string(n) + " must be odd and >= 3");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    IntVector plus = IntVector::zero(n), minus = IntVector::zero(n);
    plus[i] = plus[i + 1] = minus[i] = 1;
    minus[i + 1] = -1;
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  return OrthoBasis(std::move(out));
}

}  // namespace orthox
