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

// Text syntax for polynomials and systems.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "zdsolve/errors.hpp"
#include "zdsolve/polynomial.hpp"

namespace zds {

namespace {

constexpr std::size_t kMaxVars = 64;

struct RawTerm {
  Integer coeff;
  std::vector<std::pair<std::size_t, std::uint32_t>> powers;  // (var, exp)
};

class Lexer {
 public:
  Lexer(const std::string& text, std::size_t line)
      : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::uint32_t small_number(const char* what) {
    skip_ws();
    std::string d = digits();
    if (d.empty()) fail(std::string("expected ") + what);
    if (d.size() > 6) fail(std::string(what) + " too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }
  Integer integer() {
    skip_ws();
    std::string d = digits();
    if (d.empty()) fail("expected integer");
    return Integer(d, 10);
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  const std::string& text() const { return text_; }

 private:
  const std::string& text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// factor := integer | 'x' [digits] ['^' digits]
void parse_factor(Lexer& lx, RawTerm& t) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    t.coeff *= lx.integer();
    return;
  }
  if (c != 'x') lx.fail("expected coefficient or variable");
  lx.accept('x');
  std::size_t var = 1;
  std::size_t p = lx.pos();
  if (p < lx.text().size() &&
      std::isdigit(static_cast<unsigned char>(lx.text()[p]))) {
    std::string d = lx.digits();
    if (d.size() > 3 || std::stoul(d) == 0 || std::stoul(d) > kMaxVars) {
      lx.set_pos(p);
      lx.fail("variable index must be between 1 and " +
              std::to_string(kMaxVars));
    }
    var = std::stoul(d);
  }
  std::uint32_t e = 1;
  if (lx.accept('^')) e = lx.small_number("exponent");
  t.powers.emplace_back(var - 1, e);
}

RawTerm parse_term(Lexer& lx) {
  RawTerm t{Integer(1), {}};
  parse_factor(lx, t);
  while (lx.accept('*')) parse_factor(lx, t);
  return t;
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, std::size_t num_vars,
                           std::size_t line) {
  Lexer lx(text, line);
  if (lx.done()) lx.fail("empty polynomial");
  std::vector<RawTerm> terms;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (lx.accept('+')) {
      sign = 1;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    RawTerm t = parse_term(lx);
    if (sign < 0) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    first = false;
  }
  std::size_t n = num_vars;
  bool fixed = num_vars > 0;
  for (const auto& t : terms) {
    for (const auto& [v, e] : t.powers) {
      if (fixed && v >= num_vars) {
        throw ParseError("variable x" + std::to_string(v + 1) +
                             " exceeds declared count " +
                             std::to_string(num_vars),
                         line, 1);
      }
      n = std::max(n, v + 1);
    }
  }
  MultiPoly p(n);
  for (const auto& t : terms) {
    Monomial m(n, 0);
    for (const auto& [v, e] : t.powers) m[v] += e;
    p.add_term(m, t.coeff);
  }
  return p;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Integer>*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    auto da = total_degree(a->first);
    auto db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (const auto* t : order) {
    const Integer& c = t->second;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      std::uint32_t e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Integer a = abs(c);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

PolynomialSystem parse_system(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t declared = 0;
  bool seen_poly = false;
  std::vector<std::pair<std::string, std::size_t>> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string text = raw.substr(0, raw.find('#'));
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!seen_poly && declared == 0 && text.compare(first, 4, "vars") == 0) {
      std::istringstream ss(text.substr(first + 4));
      long n = 0;
      std::string rest;
      if (!(ss >> n) || n <= 0 || static_cast<std::size_t>(n) > kMaxVars ||
          (ss >> rest)) {
        throw ParseError("malformed 'vars' line", line_no, first + 1);
      }
      declared = static_cast<std::size_t>(n);
      continue;
    }
    seen_poly = true;
    lines.emplace_back(text, line_no);
  }
  if (lines.empty()) throw ParseError("empty system", line_no + 1, 1);
  std::vector<MultiPoly> polys;
  std::size_t n = declared;
  for (const auto& [text, ln] : lines) {
    polys.push_back(parse_polynomial(text, declared, ln));
    n = std::max(n, polys.back().num_vars());
  }
  for (auto& p : polys) p = p.extend(n);
  return PolynomialSystem(std::move(polys));
}

PolynomialSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

std::string to_string(const PolynomialSystem& s) {
  std::string out = "vars " + std::to_string(s.num_vars()) + "\n";
  for (const auto& p : s.polys()) out += to_string(p) + "\n";
  return out;
}

UniPoly parse_univariate(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::string body;
  std::size_t line_no = 0;
  std::size_t body_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string t = raw.substr(0, raw.find('#'));
    if (t.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!body.empty()) {
      throw ParseError("expected a single polynomial", line_no, 1);
    }
    body = t;
    body_line = line_no;
  }
  if (body.empty()) throw ParseError("empty input", line_no + 1, 1);
  MultiPoly p = parse_polynomial(body, 0, body_line);
  if (p.num_vars() > 1) {
    throw ParseError("expected a univariate polynomial in x1", body_line, 1);
  }
  if (p.num_vars() == 0) return UniPoly::constant(p.is_zero() ? Integer(0)
                                                              : p.coeff({}));
  return p.to_univariate(0);
}

}  // namespace zds
