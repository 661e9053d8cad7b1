// Copyright 2026 The zdsolve Authors
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

#include "zdsolve/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zdsolve/errors.hpp"

namespace zds {

using Json = nlohmann::ordered_json;

namespace {

Json form_json(const std::vector<Integer>& c) {
  Json out = Json::array();
  for (const auto& v : c) out.push_back(integer_json(v));
  return out;
}

Json roots_json(const RootSet& rs) {
  Json out = Json::array();
  for (const auto& r : rs.roots) {
    Json j = box_json(r.box);
    j["multiplicity"] = r.multiplicity;
    out.push_back(std::move(j));
  }
  return out;
}

Json header(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  j["seed"] = c.seed;
  j["precision"] = c.precision_bits;
  return j;
}

Json elimination_json(const EliminationResult& e) {
  Json j;
  j["form"] = form_json(e.along.coefficients());
  j["polynomial"] = polynomial_json(e.polynomial);
  j["strong"] = to_string(e.strong);
  j["used_gcp"] = e.used_gcp;
  j["matrix_dimension"] = e.matrix_dimension;
  if (e.shear_lambda) j["shear_lambda"] = integer_json(*e.shear_lambda);
  return j;
}

void check_roots(const RootSet& rs) {
  for (const auto& r : rs.roots) {
    if (!rs.polynomial.eval(r.box).contains_zero()) {
      throw CheckFailure("a root box failed re-certification");
    }
  }
}

PolynomialSystem read_system(std::istream& in) {
  try {
    return parse_system(in);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

Json run_roots(const RunConfig& c, std::istream& in) {
  auto polys = parse_univariate_lines(in);
  if (polys.size() != 1) {
    throw ParseError("expected one univariate polynomial", 1, 1);
  }
  RootSet rs = isolate(polys[0], c.precision_bits);
  if (c.check) check_roots(rs);
  Json j = header(c);
  j["polynomial"] = polynomial_json(polys[0]);
  j["degree"] = polys[0].degree();
  j["distinct_roots"] = rs.size();
  j["roots"] = roots_json(rs);
  return j;
}

Json run_eliminate(const RunConfig& c, std::istream& in) {
  PolynomialSystem s = read_system(in);
  LinearForm l = c.form ? LinearForm::from_coefficients(*c.form)
                        : LinearForm::coordinate(0, s.num_vars());
  if (l.num_vars() != s.num_vars()) {
    throw PreconditionError("--form needs one coefficient per variable");
  }
  EliminationOracle oracle(s);
  EliminationResult e = oracle(l, c.seed);
  e.strong = certify_strong(e, s);
  Json j = header(c);
  j["oracle_calls"] = oracle.calls();
  Json body = elimination_json(e);
  for (auto& [k, v] : body.items()) j[k] = v;
  RootSet rs = isolate(squarefree_part(e.polynomial), c.precision_bits);
  if (c.check) check_roots(rs);
  j["roots"] = roots_json(rs);
  return j;
}

Json run_grid_sep(const RunConfig& c, std::istream& in) {
  auto polys = parse_univariate_lines(in);
  if (polys.size() != 2) {
    throw ParseError("expected two univariate polynomials", 1, 1);
  }
  RootSet x = isolate(squarefree_part(polys[0]), 2);
  RootSet y = isolate(squarefree_part(polys[1]), 2);
  Integer block = c.block.value_or(1);
  if (block < 1) throw PreconditionError("--block must be positive");
  SeparatingInterval sep = find_separating_block(x, y, block);
  Json j = header(c);
  j["x_roots"] = x.size();
  j["y_roots"] = y.size();
  j["s_star"] = integer_json(sep.s_star);
  j["block_length"] = integer_json(sep.block_length);
  j["search_range_max"] = integer_json(sep.search_range_max);
  j["level_counts"] = sep.level_counts;
  return j;
}

Json tree_json(const SlfTree& t) {
  Json nodes = Json::array();
  for (const auto& node : t.nodes) {
    Json n;
    n["lo"] = node.lo;
    n["hi"] = node.hi;
    n["level"] = node.level;
    n["form"] = form_json(node.form.coefficients());
    if (!node.is_leaf()) {
      n["s"] = integer_json(node.s);
      n["search_range_max"] = integer_json(node.separation.search_range_max);
    }
    if (node.elimination) {
      n["polynomial"] = polynomial_json(node.elimination->polynomial);
    }
    n["distinct_roots"] = node.roots.size();
    nodes.push_back(std::move(n));
  }
  Json j;
  j["coefficients"] = form_json(t.root_node().form.coefficients());
  j["oracle_calls"] = t.oracle_calls;
  j["max_coefficient"] = integer_json(t.max_coefficient());
  j["stated_bound"] = integer_json(t.stated_bound);
  j["derived_bound"] = integer_json(t.derived_bound);
  j["nodes"] = std::move(nodes);
  return j;
}

Json run_slf(const RunConfig& c, std::istream& in) {
  PolynomialSystem s = read_system(in);
  EliminationOracle oracle(s);
  Json j = header(c);
  if (!c.block) {
    Json tree = tree_json(build_slf_tree(oracle, c.seed));
    for (auto& [k, v] : tree.items()) j[k] = v;
    return j;
  }
  SlfFamily fam = build_slf_family(oracle, c.seed, *c.block);
  StrongSlf strong = select_strong_slf(fam, oracle, c.seed);
  Json tree = tree_json(strong.tree);
  for (auto& [k, v] : tree.items()) j[k] = v;
  Json f;
  f["base"] = form_json(fam.form.base);
  f["slope"] = form_json(fam.form.slope);
  f["s_star"] = integer_json(fam.s_star);
  f["block_length"] = integer_json(fam.block_length);
  j["family"] = std::move(f);
  j["strong"] = elimination_json(strong.elimination);
  return j;
}

Json run_solve(const RunConfig& c, std::istream& in) {
  PolynomialSystem s = read_system(in);
  SolveResult r = solve(s, c.precision_bits, c.seed);
  if (c.check) {
    for (const auto& b : r.solutions) {
      if (!certify_box(s, b)) throw CheckFailure("a solution box failed re-certification");
    }
  }
  Json j = header(c);
  j["num_vars"] = s.num_vars();
  j["count"] = r.solutions.size();
  Json sols = Json::array();
  for (const auto& b : r.solutions) {
    Json coords = Json::array();
    for (const auto& z : b.coordinates) coords.push_back(box_json(z));
    sols.push_back(std::move(coords));
  }
  j["solutions"] = std::move(sols);
  j["form"] = form_json(r.form.coefficients());
  j["elimination"] = polynomial_json(r.elimination);
  Json t;
  t["lambdas"] = form_json(r.transform.lambdas);
  t["rounds"] = r.infinity_rounds;
  t["gap_bits"] = r.gap_bits;
  t["dropped"] = r.dropped_at_infinity;
  j["infinity"] = std::move(t);
  j["oracle_calls"] = r.oracle_calls;
  return j;
}

void render_text(const Json& v, const std::string& indent, std::ostream& out);

bool is_scalar_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

void render_text(const Json& v, const std::string& indent, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      if (e.is_structured() && !is_scalar_array(e)) {
        out << indent << k << ":\n";
        render_text(e, indent + "  ", out);
      } else {
        out << indent << k << ": " << scalar_text(e) << "\n";
      }
    }
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_structured() && !is_scalar_array(v[i])) {
        out << indent << "[" << i << "]\n";
        render_text(v[i], indent + "  ", out);
      } else {
        out << indent << "[" << i << "] " << scalar_text(v[i]) << "\n";
      }
    }
    return;
  }
  out << indent << scalar_text(v) << "\n";
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::kRoots:
      return "roots";
    case Command::kEliminate:
      return "eliminate";
    case Command::kGridSep:
      return "grid-sep";
    case Command::kSlf:
      return "slf";
    case Command::kSolve:
      break;
  }
  return "solve";
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::kRoots, Command::kEliminate, Command::kGridSep,
                    Command::kSlf, Command::kSolve}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const InputError*>(&e)) return kExitParse;
  if (dynamic_cast<const PositiveDimensionalError*>(&e)) return kExitPositiveDimensional;
  if (dynamic_cast<const CertificationError*>(&e)) return kExitCertification;
  if (dynamic_cast<const NoPreimageError*>(&e)) return kExitCertification;
  return kExitUsage;
}

PolynomialSystem parse_system_file(const std::string& path) {
  if (path == "-") return read_system(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_system(in);
}

std::vector<UniPoly> parse_univariate_lines(std::istream& in) {
  std::vector<UniPoly> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string text = raw.substr(0, raw.find('#'));
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    MultiPoly f = parse_polynomial(text, 1, line_no);
    if (f.num_vars() != 1) {
      throw ParseError("a univariate polynomial may only use x or x1", line_no, 1);
    }
    if (f.is_zero()) throw ParseError("zero polynomial", line_no, 1);
    out.push_back(f.to_univariate(0));
  }
  if (out.empty()) throw ParseError("empty input", line_no + 1, 1);
  return out;
}

Json box_json(const ComplexBox& b) {
  Json j;
  j["re"] = {b.re().lo().to_string(), b.re().hi().to_string()};
  j["im"] = {b.im().lo().to_string(), b.im().hi().to_string()};
  return j;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str(10));
}

Json polynomial_json(const UniPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str(10));
  return out;
}

Json run_command(const RunConfig& config, std::istream& input) {
  if (config.precision_bits < 1) throw PreconditionError("--precision must be at least 1");
  auto start = std::chrono::steady_clock::now();
  Json j;
  switch (config.command) {
    case Command::kRoots:
      j = run_roots(config, input);
      break;
    case Command::kEliminate:
      j = run_eliminate(config, input);
      break;
    case Command::kGridSep:
      j = run_grid_sep(config, input);
      break;
    case Command::kSlf:
      j = run_slf(config, input);
      break;
    case Command::kSolve:
      j = run_solve(config, input);
      break;
  }
  if (config.check) j["checked"] = true;
  if (config.timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    j["timing"] = {{"seconds", dt.count()}};
  }
  return j;
}

std::string emit_report(const Json& report, Format format) {
  if (format == Format::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(report, "", out);
  return out.str();
}

}  // namespace zds
