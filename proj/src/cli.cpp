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

#include "orthox/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <optional>
#include <random>
#include <utility>

#include "orthox/constructions.hpp"
#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/explorer.hpp"
#include "orthox/extend.hpp"
#include "orthox/quadform.hpp"
#include "orthox/sweep.hpp"

namespace orthox::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = ORTHOX_VERSION;

enum class Format { Text, Json };

// ORTHO_EXTEND_LOG=info|debug
struct Log {
  int level = 0;  // 0 off, 1 info, 2 debug
  std::ostream& err;

  explicit Log(std::ostream& e) : err(e) {
    if (const char* env = std::getenv("ORTHO_EXTEND_LOG")) {
      const std::string v = env;
      level = v == "debug" ? 2 : v == "info" ? 1 : 0;
    }
  }
  void info(const std::string& msg) const {
    if (level >= 1) err << "[info] " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level >= 2) err << "[debug] " << msg << "\n";
  }
};

struct Record {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::pair<std::string, bool>> verification;
  std::vector<std::string> text;

  void check(std::string name, bool ok) { verification.emplace_back(std::move(name), ok); }
  bool all_pass() const {
    for (const auto& [name, ok] : verification)
      if (!ok) return false;
    return true;
  }
};

Json num(const BigInt& x) { return x.get_str(); }

Json vec_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(num(c));
  return out;
}

Json vecs_json(std::span<const IntVector> vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vec_json(v));
  return out;
}

std::string join_vectors(std::span<const IntVector> vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + v.to_string();
  return out;
}

// Checks recomputed from the raw vectors, independent of OrthoBasis.
void check_orthoregular(Record& rec, std::span<const IntVector> vs, const std::string& prefix = "") {
  bool orthogonal = true, equal = true;
  const BigInt len = vs.empty() ? BigInt(0) : vs[0].norm_sq();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].norm_sq() != len) equal = false;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (dot(vs[i], vs[j]) != 0) orthogonal = false;
  }
  rec.check(prefix + "orthogonal", orthogonal);
  rec.check(prefix + "equal_length", equal && len != 0);
}

int emit(const Record& rec, Format format, std::ostream& out, std::ostream& err, int code) {
  if (format == Format::Json) {
    Json j;
    j["command"] = rec.command;
    j["input"] = rec.input;
    j["result"] = rec.result;
    Json ver = Json::object();
    for (const auto& [name, ok] : rec.verification) ver[name] = ok ? "pass" : "fail";
    j["verification"] = ver;
    j["version"] = kVersion;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : rec.text) out << line << "\n";
    err << "verification:";
    for (const auto& [name, ok] : rec.verification) err << " " << name << "=" << (ok ? "pass" : "fail");
    err << "\n";
  }
  if (!rec.all_pass()) {
    err << "error: verification failed\n";
    return kVerificationFailed;
  }
  return code;
}

BigInt parse_int(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  BigInt x;
  if (t.empty() || x.set_str(t, 10) != 0)
    throw PreconditionError("not an integer: '" + s + "'");
  return x;
}

std::vector<IntVector> parse_vectors(const std::vector<std::string>& texts) {
  std::vector<IntVector> out;
  for (const auto& t : texts) out.push_back(parse_vector(t));
  return out;
}

void require_same_dim(const std::vector<IntVector>& vs) {
  for (const auto& v : vs)
    if (v.dim() != vs.front().dim()) throw PreconditionError("vectors have different dimensions");
}

// ---- commands --------------------------------------------------------------

struct Options {
  std::string format = "text";
  // extend / solve-form
  std::string vector;
  bool all_solutions = false;
  std::string orientation = "so3";
  // enumerate
  long limit = 0;
  long count = 0;
  bool extend = false;
  // solve-form
  std::vector<std::string> coefficients;
  // hurwitz, odd-square, pair-basis
  long n = 0;
  bool table = false;
  // lift, compose, explore
  std::vector<std::string> vectors;
  std::vector<std::size_t> split;
  long bound = 0;
  std::uint64_t max_candidates = 0;
  long timeout_ms = 0;
  bool serial = false;
  bool experimental = false;
  // selftest
  std::uint64_t seed = 1;
  std::size_t selftest_count = 1000;
};

int cmd_extend(const Options& o, Format fmt, std::ostream& out, std::ostream& err, const Log& log) {
  const IntVector v = parse_vector(o.vector);
  if (v.dim() != 3) throw PreconditionError("extend expects a vector in Z^3");
  const Orientation orient = o.orientation == "o3" ? Orientation::Improper : Orientation::Proper;

  const ExtendResult r = extend3_traced(v, orient);
  const ExtendTrace& t = r.trace;
  log.info("content " + t.content.get_str() + ", primitive " + t.primitive.to_string() +
           ", length " + t.primitive_length.get_str());
  log.info("kernel basis " + t.kernel->w1.to_string() + " " + t.kernel->w2.to_string());
  log.info("form a=" + t.form->a().get_str() + " b=" + t.form->b().get_str() +
           " c=" + t.form->c().get_str() + " target " + t.form->target().get_str());
  if (t.solve.target_factorization.factors.empty()) {
    log.debug("l+ib factorization: unit i^" + std::to_string(t.solve.target_factorization.unit));
  } else {
    std::string f = "l+ib factorization: i^" + std::to_string(t.solve.target_factorization.unit);
    for (const auto& pp : t.solve.target_factorization.factors)
      f += " (" + pp.prime.to_string() + ")^" + std::to_string(pp.exponent);
    log.debug(f);
  }
  for (const auto& c : t.solve.exponent_choices) log.debug("exponents " + c);
  log.debug("u+iy = " + t.solve.u_plus_iy.to_string() + ", associate " +
            std::to_string(t.solve.associate));
  log.info("representation x=" + t.representation->x.get_str() +
           " y=" + t.representation->y.get_str());

  const OrthoBasis& basis = r.basis;
  const RationalOrthogonalMatrix m = to_rational_orthogonal(basis);
  const BigInt& l = m.denominator;

  Record rec;
  rec.command = "extend";
  rec.input["vector"] = vec_json(v);
  rec.input["orientation"] = o.orientation;
  rec.input["all_solutions"] = o.all_solutions;
  rec.result["length"] = num(l);
  rec.result["basis"] = vecs_json(basis.vectors());
  Json rm;
  rm["denominator"] = num(l);
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(num(m.numerators(i, j)));
    rows.push_back(row);
  }
  rm["numerators"] = rows;
  rec.result["rational_orthogonal"] = rm;
  Json pipe;
  pipe["content"] = num(t.content);
  pipe["kernel"] = vecs_json(std::vector<IntVector>{t.kernel->w1, t.kernel->w2});
  pipe["form"] = {{"a", num(t.form->a())}, {"b", num(t.form->b())}, {"c", num(t.form->c())},
                  {"l", num(t.form->l())}};
  pipe["representation"] = {{"x", num(t.representation->x)},
                            {"y", num(t.representation->y)},
                            {"u", num(t.representation->u)}};
  rec.result["pipeline"] = pipe;

  rec.text.push_back("basis of " + v.to_string() + " (length " + l.get_str() + "):");
  for (const auto& b : basis.vectors()) rec.text.push_back("  " + b.to_string());
  rec.text.push_back("rational orthogonal matrix: columns above divided by " + l.get_str());

  rec.check("first_vector_is_input", basis[0] == v);
  check_orthoregular(rec, basis.vectors());
  const BigInt l3 = l * l * l;
  rec.check("determinant", basis.determinant() == (orient == Orientation::Proper ? l3 : BigInt(-l3)));
  bool mtm = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      BigRational acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += m.entry(k, i) * m.entry(k, j);
      if (acc != (i == j ? 1 : 0)) mtm = false;
    }
  rec.check("rational_orthogonal", mtm);

  if (o.all_solutions) {
    const auto all = extend3_all(v, orient);
    Json arr = Json::array();
    bool all_ok = !all.empty();
    rec.text.push_back(std::to_string(all.size()) + " bases from all representations:");
    for (const auto& b : all) {
      arr.push_back(vecs_json(b.vectors()));
      rec.text.push_back("  " + join_vectors(b.vectors()));
      all_ok = all_ok && b[0] == v && is_orthoregular(b.vectors());
    }
    rec.result["all_bases"] = arr;
    rec.check("all_solutions", all_ok);
  }
  return emit(rec, fmt, out, err, kOk);
}

int cmd_enumerate(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  if (o.limit <= 0 && o.count <= 0)
    throw PreconditionError("enumerate needs --limit N or --count K (positive)");
  IntegerNormEnumerator gen(o.limit > 0 ? std::optional<long>(o.limit) : std::nullopt);
  std::vector<IntVector> vs;
  while (o.count <= 0 || static_cast<long>(vs.size()) < o.count) {
    auto v = gen.next();
    if (!v) break;
    vs.push_back(std::move(*v));
  }

  Record rec;
  rec.command = "enumerate";
  if (o.limit > 0) rec.input["limit"] = o.limit;
  if (o.count > 0) rec.input["count"] = o.count;
  rec.input["extend"] = o.extend;
  rec.result["vectors"] = vecs_json(vs);

  bool ordered = true, primitive = true, integral = true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    primitive = primitive && vs[i].content() == 1;
    integral = integral && isqrt_exact(vs[i].norm_sq()).has_value();
    if (i) {
      const BigInt pn = vs[i - 1].norm_sq(), cn = vs[i].norm_sq();
      ordered = ordered && (pn < cn || (pn == cn && vs[i - 1] < vs[i]));
    }
  }
  rec.check("ordered", ordered);
  rec.check("primitive", primitive);
  rec.check("integer_norm", integral);

  if (o.extend) {
    Json bases = Json::array();
    bool ok = true;
    for (const auto& v : vs) {
      const OrthoBasis b = extend3(v);
      bases.push_back(vecs_json(b.vectors()));
      rec.text.push_back(v.to_string() + " -> " + join_vectors(b.vectors()));
      const BigInt l = *isqrt_exact(b.length_sq());
      ok = ok && b[0] == v && is_orthoregular(b.vectors()) && b.determinant() == l * l * l;
    }
    rec.result["bases"] = bases;
    rec.check("extend", ok);
  } else {
    for (const auto& v : vs) rec.text.push_back(v.to_string());
  }
  return emit(rec, fmt, out, err, kOk);
}

int cmd_solve_form(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  if (o.coefficients.size() != 4) throw PreconditionError("solve-form expects a b c l");
  const QuadForm f(parse_int(o.coefficients[0]), parse_int(o.coefficients[1]),
                   parse_int(o.coefficients[2]), parse_int(o.coefficients[3]));
  Record rec;
  rec.command = "solve-form";
  rec.input = {{"a", num(f.a())}, {"b", num(f.b())}, {"c", num(f.c())}, {"l", num(f.l())}};
  const std::string eq = f.a().get_str() + "x^2 + " + BigInt(2 * f.b()).get_str() + "xy + " +
                         f.c().get_str() + "y^2 = " + f.target().get_str();

  const bool predicted = is_representable(f);
  const auto rep = solve(f);
  const auto orc = oracle_solve(f);
  rec.result["representable"] = predicted;
  rec.check("oracle_agrees", rep.has_value() == orc.has_value() && predicted == rep.has_value());
  if (rep) {
    rec.result["construction"] = {{"x", num(rep->x)}, {"y", num(rep->y)}, {"u", num(rep->u)}};
    rec.text.push_back(eq + ": (x, y) = (" + rep->x.get_str() + ", " + rep->y.get_str() +
                       "), u = " + rep->u.get_str());
    rec.check("form_equation", f.evaluate(rep->x, rep->y) == f.target());
    const BigInt s = f.a() * rep->x + f.b() * rep->y;
    rec.check("identity", s * s + f.l() * f.l() * rep->y * rep->y == f.a() * f.target());
  } else {
    rec.text.push_back(eq + ": not representable");
  }
  if (orc) {
    rec.result["oracle"] = {{"x", num(orc->x)}, {"y", num(orc->y)}};
    rec.text.push_back("oracle minimum: (" + orc->x.get_str() + ", " + orc->y.get_str() + ")");
  }
  if (o.all_solutions) {
    Json arr = Json::array();
    bool ok = true;
    for (const auto& r : oracle_all(f)) {
      arr.push_back({{"x", num(r.x)}, {"y", num(r.y)}});
      rec.text.push_back("  (" + r.x.get_str() + ", " + r.y.get_str() + ")");
      ok = ok && f.evaluate(r.x, r.y) == f.target();
    }
    rec.result["all"] = arr;
    rec.check("all_solutions", ok);
  }
  return emit(rec, fmt, out, err, rep ? kOk : kInfeasible);
}

int cmd_hurwitz(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  if (o.table) {
    out << format_tables();
    return kOk;
  }
  if (o.n != 2 && o.n != 4 && o.n != 8) throw PreconditionError("hurwitz: n must be 2, 4 or 8");
  if (o.vector.empty()) throw PreconditionError("hurwitz: missing vector");
  const IntVector v = parse_vector(o.vector);
  const OrthoBasis b = v.dim() == static_cast<std::size_t>(o.n)
                           ? hurwitz_basis(v)
                           : hurwitz_blocks(v, static_cast<std::size_t>(o.n));
  Record rec;
  rec.command = "hurwitz";
  rec.input = {{"n", o.n}, {"vector", vec_json(v)}};
  rec.result["length_sq"] = num(b.length_sq());
  rec.result["basis"] = vecs_json(b.vectors());
  for (const auto& w : b.vectors()) rec.text.push_back(w.to_string());
  rec.check("first_vector_is_input", b[0] == v);
  rec.check("count", b.size() == static_cast<std::size_t>(o.n));
  check_orthoregular(rec, b.vectors());
  return emit(rec, fmt, out, err, kOk);
}

int cmd_lift(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const auto vs = parse_vectors(o.vectors);
  require_same_dim(vs);
  const OrthoBasis s(vs);
  if (!isqrt_exact(s.length_sq()))
    throw InfeasibleError(InfeasibleError::Kind::Other,
                          "lift: length^2 " + s.length_sq().get_str() + " is not a square");
  const OrthoBasis b = lift(s);
  Record rec;
  rec.command = "lift";
  rec.input["vectors"] = vecs_json(vs);
  rec.result["length_sq"] = num(b.length_sq());
  rec.result["basis"] = vecs_json(b.vectors());
  for (const auto& w : b.vectors()) rec.text.push_back(w.to_string());
  rec.check("count", b.size() == vs.size() + 1);
  check_orthoregular(rec, b.vectors());
  return emit(rec, fmt, out, err, kOk);
}

int cmd_compose(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  if (o.vectors.size() != 1) throw PreconditionError("compose expects one vector");
  const IntVector v = parse_vector(o.vectors[0]);
  const std::vector<std::size_t> split = o.split.empty() ? std::vector<std::size_t>{v.dim()} : o.split;
  const OrthoBasis b = compose_extend(v, split);
  Record rec;
  rec.command = "compose";
  rec.input["vector"] = vec_json(v);
  Json sp = Json::array();
  for (auto s : split) sp.push_back(s);
  rec.input["split"] = sp;
  rec.result["length_sq"] = num(b.length_sq());
  rec.result["basis"] = vecs_json(b.vectors());
  for (const auto& w : b.vectors()) rec.text.push_back(w.to_string());
  rec.check("first_vector_is_input", b[0] == v);
  check_orthoregular(rec, b.vectors());
  return emit(rec, fmt, out, err, kOk);
}

int cmd_explore(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const auto vs = parse_vectors(o.vectors);
  require_same_dim(vs);
  const OrthoBasis s(vs);
  if (s.dim() >= 10 && !o.experimental)
    throw PreconditionError("explore: dimension >= 10 requires --experimental");
  SearchBudget budget;
  budget.coord_bound = o.bound;
  if (o.max_candidates) budget.max_candidates = o.max_candidates;
  if (o.timeout_ms) budget.timeout = std::chrono::milliseconds(o.timeout_ms);
  const ExtensionReport r = o.serial ? serial::extend_search(s, budget) : extend_search(s, budget);

  Record rec;
  rec.command = "explore";
  rec.input["vectors"] = vecs_json(vs);
  rec.input["bound"] = o.bound;
  rec.input["experimental"] = o.experimental;
  const std::vector<IntVector> added(r.witness.vectors().begin() + s.size(), r.witness.vectors().end());
  rec.result["achieved"] = r.achieved;
  rec.result["exhausted"] = r.exhausted;
  rec.result["status"] = r.exhausted ? "exact" : "lower bound";
  rec.result["extension_number"] = r.witness.size();
  rec.result["witness"] = vecs_json(added);
  rec.result["candidates"] = r.candidates;
  rec.result["nodes"] = r.nodes;

  rec.text.push_back("achieved " + std::to_string(r.achieved) + " (" +
                     (r.exhausted ? "exact" : "lower bound") + "), exhausted " +
                     (r.exhausted ? "true" : "false") + ", E(S) " + (r.exhausted ? "= " : ">= ") +
                     std::to_string(r.witness.size()));
  for (const auto& w : added) rec.text.push_back("  " + w.to_string());

  if (s.size() == 1 && s.dim() % 2 == 1) {
    bool all_odd = true;
    for (const auto& c : s[0].coords()) all_odd = all_odd && mpz_odd_p(c.get_mpz_t());
    if (all_odd) {
      const ParityCertificate cert = all_odd_obstruction(s[0]);
      Json steps = Json::array();
      for (const auto& st : cert.steps) steps.push_back(st);
      rec.result["parity_certificate"] = steps;
      for (const auto& st : cert.steps) rec.text.push_back("parity: " + st);
      rec.check("parity_consistent", !r.exhausted || r.achieved == 0);
    }
  }
  check_orthoregular(rec, r.witness.vectors(), "witness_");
  bool extends = true;
  for (std::size_t i = 0; i < s.size(); ++i) extends = extends && r.witness[i] == s[i];
  rec.check("witness_extends_input", extends);
  return emit(rec, fmt, out, err, r.exhausted ? kOk : kInconclusive);
}

int cmd_odd_square(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const OddSquareTuple t = odd_square_tuple(o.n);
  Record rec;
  rec.command = "odd-square";
  rec.input["n"] = o.n;
  rec.result["threes"] = t.threes;
  rec.result["ones"] = o.n - t.threes;
  rec.result["root"] = t.root;
  rec.result["entries"] = vec_json(t.entries);
  rec.text.push_back(std::to_string(t.threes) + " x 3, " + std::to_string(o.n - t.threes) +
                     " x 1: sum of squares " + std::to_string(t.root * t.root) + " = " +
                     std::to_string(t.root) + "^2");
  bool odd = true;
  for (const auto& c : t.entries.coords()) odd = odd && mpz_odd_p(c.get_mpz_t());
  rec.check("all_odd", odd);
  rec.check("square_sum", t.entries.norm_sq() == t.root * t.root);
  rec.check("enough_entries", 9 * o.n >= t.root * t.root);
  return emit(rec, fmt, out, err, kOk);
}

int cmd_pair_basis(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const OrthoBasis b = pair_basis(static_cast<std::size_t>(std::max(0L, o.n)));
  Record rec;
  rec.command = "pair-basis";
  rec.input["n"] = o.n;
  rec.result["basis"] = vecs_json(b.vectors());
  for (const auto& w : b.vectors()) rec.text.push_back(w.to_string());
  rec.check("count", b.size() + 1 == static_cast<std::size_t>(o.n));
  check_orthoregular(rec, b.vectors());
  rec.check("no_full_extension", !integrality_obstruction(b.dim(), b.length_sq()));
  return emit(rec, fmt, out, err, kOk);
}

int cmd_selftest(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  const std::size_t count = o.selftest_count;
  const AgreementReport agree = quadform_agreement(o.seed, count, 10000);
  const ValuationReport val = orthogonal_pair_valuations(o.seed, count);
  bool hurwitz_ok = true;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int n : {2, 4, 8}) {
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<BigInt> c(static_cast<std::size_t>(n));
      for (auto& x : c) x = coord(rng);
      IntVector v(std::move(c));
      if (v.is_zero()) continue;
      const OrthoBasis b = hurwitz_basis(v);
      hurwitz_ok = hurwitz_ok && b.is_full() && is_orthoregular(b.vectors());
    }
  }
  Record rec;
  rec.command = "selftest";
  rec.input = {{"seed", o.seed}, {"count", count}};
  rec.result["forms"] = agree.forms;
  rec.result["representable"] = agree.representable;
  rec.result["disagreements"] = agree.disagreements;
  rec.result["orthogonal_pairs"] = val.pairs;
  rec.result["valuation_violations"] = val.violations;
  rec.text.push_back("forms " + std::to_string(agree.forms) + " (representable " +
                     std::to_string(agree.representable) + "), disagreements " +
                     std::to_string(agree.disagreements));
  rec.text.push_back("orthogonal pairs " + std::to_string(val.pairs) + ", violations " +
                     std::to_string(val.violations));
  for (const auto& m : agree.messages) rec.text.push_back("  " + m);
  for (const auto& m : val.messages) rec.text.push_back("  " + m);
  rec.check("quadform_agreement", agree.disagreements == 0 && agree.equation_failures == 0);
  rec.check("orthogonal_pair_valuations", val.violations == 0);
  rec.check("hurwitz", hurwitz_ok);
  return emit(rec, fmt, out, err, kOk);
}

}  // namespace

IntVector parse_vector(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
    s = s.substr(1, s.size() - 2);
  if (s.empty()) throw PreconditionError("empty vector literal");
  std::vector<BigInt> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      coords.push_back(parse_int(tok));
    } catch (const PreconditionError&) {
      throw PreconditionError("bad vector literal '" + std::string(text) + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntVector(std::move(coords));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integral orthoregular bases: extension, constructions and bounded search"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.fallthrough();

  auto* extend = app.add_subcommand("extend", "Complete v in Z^3 with integral norm to a basis");
  extend->add_option("vector", o.vector, "e.g. 1,2,2")->required();
  extend->add_flag("--all-solutions", o.all_solutions, "One basis per form representation");
  extend->add_option("--orientation", o.orientation, "so3 (det > 0) or o3 (det < 0)")
      ->check(CLI::IsMember({"so3", "o3"}));

  auto* enumerate = app.add_subcommand("enumerate", "Primitive (a<=b<=c) with integral norm");
  enumerate->add_option("--limit", o.limit, "Largest coordinate");
  enumerate->add_option("--count", o.count, "Number of vectors");
  enumerate->add_flag("--extend", o.extend, "Also extend each vector");

  auto* solve_form = app.add_subcommand("solve-form", "Represent l^2 by ax^2 + 2bxy + cy^2");
  solve_form->add_option("coefficients", o.coefficients, "a b c l")->required()->expected(4);
  solve_form->add_flag("--all-solutions", o.all_solutions, "List every representation");

  auto* hurwitz = app.add_subcommand("hurwitz", "Full basis in dimension 2, 4, 8 (or blocks thereof)");
  hurwitz->add_option("n", o.n, "2, 4 or 8");
  hurwitz->add_option("vector", o.vector, "Vector in Z^n or Z^(kn)");
  hurwitz->add_flag("--table", o.table, "Print the multiplication tables");

  auto* lift_cmd = app.add_subcommand("lift", "Embed an orthoregular system one dimension up");
  lift_cmd->add_option("vectors", o.vectors)->required();

  auto* compose = app.add_subcommand("compose", "Blockwise extension and direct sum");
  compose->add_option("vector", o.vectors)->required();
  compose->add_option("--split", o.split, "Block sizes, e.g. 3,3")->delimiter(',');

  auto* explore = app.add_subcommand("explore", "Bounded search for the extension number E(S)");
  explore->add_option("vectors", o.vectors)->required();
  explore->add_option("--bound", o.bound, "Coordinate bound")->required();
  explore->add_option("--max-candidates", o.max_candidates, "Search node budget");
  explore->add_option("--timeout-ms", o.timeout_ms, "Wall-clock budget");
  explore->add_flag("--serial", o.serial, "Use the single-threaded reference search");
  explore->add_flag("--experimental", o.experimental, "Allow dimension >= 10");

  auto* odd_square = app.add_subcommand("odd-square", "n odd squares summing to a square, n = 1 mod 8");
  odd_square->add_option("n", o.n)->required();

  auto* pair = app.add_subcommand("pair-basis", "Maximal extension of (1,1,0,...,0) for odd n");
  pair->add_option("n", o.n)->required();

  auto* selftest = app.add_subcommand("selftest", "Randomized property checks");
  selftest->add_option("--seed", o.seed, "RNG seed");
  selftest->add_option("--count", o.selftest_count, "Samples per property");

  std::vector<const char*> argv{"orthox"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const Format fmt = o.format == "json" ? Format::Json : Format::Text;
  const Log log(err);
  try {
    if (*extend) return cmd_extend(o, fmt, out, err, log);
    if (*enumerate) return cmd_enumerate(o, fmt, out, err);
    if (*solve_form) return cmd_solve_form(o, fmt, out, err);
    if (*hurwitz) return cmd_hurwitz(o, fmt, out, err);
    if (*lift_cmd) return cmd_lift(o, fmt, out, err);
    if (*compose) return cmd_compose(o, fmt, out, err);
    if (*explore) return cmd_explore(o, fmt, out, err);
    if (*odd_square) return cmd_odd_square(o, fmt, out, err);
    if (*pair) return cmd_pair_basis(o, fmt, out, err);
    if (*selftest) return cmd_selftest(o, fmt, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace orthox::cli
