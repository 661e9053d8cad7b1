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

#include "zdsolve/grid.hpp"

#include <algorithm>
#include <string>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

constexpr std::int64_t kMaxLiftPrecision = std::int64_t{1} << 22;

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// |z_i - z_j| to relative quality rho. The absolute quality is raised to
// B + rho + 6 once an upper bound B on the bit magnitude is known.
DiffEntry approx_distance(RootApproximator& a, std::size_t i, std::size_t j,
                          std::int64_t rho) {
  BoxRefiner diff = [&](std::int64_t q) { return a.box(i, q + 1) - a.box(j, q + 1); };
  std::int64_t p = rho + 8;
  while (true) {
    DyadicInterval m = abs_interval(diff(p), p, diff);
    if (m.lo().sign() > 0) {
      std::int64_t need =
          static_cast<std::int64_t>(bit_magnitude(m).value) + rho + 6;
      if (p >= need) {
        Dyadic approx = m.midpoint();
        return {approx, bit_magnitude(approx), i, j};
      }
      p = need;
    } else {
      p *= 2;
    }
  }
}

bool approx_less(const DiffEntry& a, const DiffEntry& b) {
  return a.approx < b.approx;
}

// Nearest integer to a/b for a, b > 0, ties toward the smaller one.
Integer nearest_tie_down(const Rational& q) {
  Rational shifted = q - Rational(1, 2);
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return n;
}

}  // namespace

GridParams grid_params(const RootSet& x, const RootSet& y, const Integer& c) {
  if (c < 1) throw PreconditionError("block length must be positive");
  GridParams p;
  p.d = std::max<std::int64_t>(
      {x.polynomial.degree(), y.polynomial.degree(), 1});
  Integer cap = int_pow(Integer(std::max<std::int64_t>(2, p.d)), 8);
  if (c > cap) {
    throw PreconditionError("block length " + c.get_str() +
                            " exceeds max(2,d)^8 = " + cap.get_str());
  }
  p.d4 = next_pow2(int_pow(Integer(p.d), 4));
  p.c = next_pow2(c);
  p.range = p.d4 * p.c;
  p.rho = ceil_log2(Integer(64 * p.range));
  return p;
}

DiffTable build_diff_table(const RootSet& x, std::int64_t rho) {
  RootApproximator a(x);
  DiffTable t;
  t.quality = rho;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      t.entries.push_back(approx_distance(a, i, j, rho));
    }
  }
  return t;
}

std::pair<DiffTable, DiffTable> build_diff_tables(const RootSet& x,
                                                  const RootSet& y,
                                                  const Integer& c) {
  if (x.size() == 0 || y.size() == 0) {
    throw PreconditionError("build_diff_tables: empty root set");
  }
  GridParams p = grid_params(x, y, c);
  return {sort_diffs(build_diff_table(x, p.rho)), build_diff_table(y, p.rho)};
}

DiffTable sort_diffs(DiffTable t, MergeStats* stats) {
  gallop_merge_sort(t.entries, approx_less, stats);
  t.sorted = true;
  return t;
}

RoundedFraction round_fraction(const Dyadic& nu, const Dyadic& delta,
                               const Integer& range) {
  if (nu.sign() <= 0 || delta.sign() <= 0) {
    throw PreconditionError("round_fraction: nonpositive distance");
  }
  std::int64_t e1 = nu.floor_log2();
  std::int64_t e2 = delta.floor_log2();
  if (e1 + 4 - e2 <= 0) return {false, Integer(0)};
  std::int64_t k = e1 - e2 - 1;
  if (k >= 0) {
    Integer limit = 8 * range;
    if (k > bit_length(limit) || (Integer(1) << static_cast<mp_bitcnt_t>(k)) >= limit) {
      return {true, Integer(0)};
    }
  }
  return {false, nearest_tie_down(nu.to_rational() / delta.to_rational())};
}

std::size_t preimage_count(const DiffTable& nu, const DiffTable& delta,
                           const Integer& s, const Integer& s2,
                           const Integer& range) {
  if (!nu.sorted) throw PreconditionError("preimage_count: table not sorted");
  if (s < 1 || s > s2 || s2 > range) {
    throw PreconditionError("preimage_count: range out of bounds");
  }
  const auto& n = nu.entries;
  std::size_t total = 0;
  for (const auto& dl : delta.entries) {
    auto first_ge = std::partition_point(n.begin(), n.end(), [&](const DiffEntry& e) {
      return !round_fraction(e.approx, dl.approx, range).at_least(s);
    });
    auto first_gt = std::partition_point(first_ge, n.end(), [&](const DiffEntry& e) {
      return round_fraction(e.approx, dl.approx, range).at_most(s2);
    });
    total += static_cast<std::size_t>(first_gt - first_ge);
  }
  return total;
}

SeparatingInterval find_separating_block(const RootSet& x, const RootSet& y,
                                         const Integer& c) {
  GridParams p = grid_params(x, y, c);
  SeparatingInterval out;
  out.block_length = c;
  out.search_range_max = p.range;
  if (x.size() < 2 || y.size() < 2) {
    out.s_star = 1;
    out.level_counts.push_back(0);
    return out;
  }
  auto [nu, delta] = build_diff_tables(x, y, c);
  Integer lo = 1;
  Integer hi = p.range;
  out.level_counts.push_back(preimage_count(nu, delta, lo, hi, p.range));
  while (hi - lo + 1 > p.c) {
    Integer theta = (lo + hi - 1) / 2;
    std::size_t left = preimage_count(nu, delta, lo, theta, p.range);
    std::size_t right = preimage_count(nu, delta, theta + 1, hi, p.range);
    if (left <= right) {
      hi = theta;
      out.level_counts.push_back(left);
    } else {
      lo = theta + 1;
      out.level_counts.push_back(right);
    }
  }
  if (out.level_counts.back() != 0) {
    throw CertificationError("bisection ended on a nonempty preimage");
  }
  out.s_star = lo;
  return out;
}

std::vector<LiftedPair> lift(RootApproximator& z,
                             const std::vector<std::size_t>& which,
                             RootApproximator& x, RootApproximator& y,
                             const Integer& s, std::int64_t quality) {
  if (s < 1) throw PreconditionError("lift: s must be positive");
  const std::int64_t s_bits = bit_length(s);
  const DyadicInterval s_iv(Dyadic(s, 0));
  std::vector<LiftedPair> out;
  out.reserve(which.size());
  for (std::size_t zi : which) {
    struct Candidate {
      std::size_t j;
      std::vector<std::size_t> xs;
    };
    std::vector<Candidate> cand;
    std::vector<std::size_t> all_x(x.size());
    for (std::size_t k = 0; k < all_x.size(); ++k) all_x[k] = k;
    for (std::size_t j = 0; j < y.size(); ++j) cand.push_back({j, all_x});

    for (std::int64_t level = 1;; level *= 2) {
      if (level > kMaxLiftPrecision) {
        throw CertificationError("lift did not separate the candidates");
      }
      const Dyadic bound = Dyadic(1).mul_2exp(-level);
      ComplexBox zb = z.box(zi, level + s_bits + 3);
      std::vector<Candidate> next;
      std::size_t survivors = 0;
      for (auto& c : cand) {
        ComplexBox w = zb - y.box(c.j, level + s_bits + 3).scale(s_iv);
        Candidate kept{c.j, {}};
        for (std::size_t xi : c.xs) {
          ComplexBox diff = w - x.box(xi, level + 3);
          if (diff.mig_lower(level + 2) < bound) kept.xs.push_back(xi);
        }
        if (!kept.xs.empty()) {
          survivors += kept.xs.size();
          next.push_back(std::move(kept));
        }
      }
      cand = std::move(next);
      if (survivors == 0) {
        throw NoPreimageError("no preimage for point " + std::to_string(zi),
                              zi);
      }
      // a lone survivor is accepted once it persists at the output quality,
      // so points without a preimage are rejected at that resolution
      if (survivors == 1 && level >= quality) break;
    }
    LiftedPair pair;
    pair.x_index = cand[0].xs[0];
    pair.y_index = cand[0].j;
    pair.x = x.box(pair.x_index, quality);
    pair.y = y.box(pair.y_index, quality);
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<LiftedPair> lift(const RootSet& z, const RootSet& x,
                             const RootSet& y, const Integer& s,
                             std::int64_t quality) {
  RootApproximator za(z);
  RootApproximator xa(x);
  RootApproximator ya(y);
  std::vector<std::size_t> which(z.size());
  for (std::size_t k = 0; k < which.size(); ++k) which[k] = k;
  return lift(za, which, xa, ya, s, quality);
}

}  // namespace zds
