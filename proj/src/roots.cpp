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

#include "zdsolve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

constexpr int kMaxQuadtreeLevels = 4096;
constexpr int kPelletGuardBits = 64;

struct GaussInt {
  Integer re;
  Integer im;
};

Integer scaled_int(const Dyadic& x, std::int64_t e) {
  // x * 2^-e, exact (e <= exponent of x)
  Integer r = x.mantissa();
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(),
               static_cast<mp_bitcnt_t>(x.exponent() - e));
  return r;
}

Integer isqrt_scaled(const Integer& n, bool up) {
  Integer s = n;
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), 2 * kPelletGuardBits);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (up && r * r < s) r += 1;
  return r;
}

// Floating-point screen for |G_k| > sum_{j != k} |G_j| given the squared
// moduli. Decides only when the margin dwarfs the rounding error of the
// double computation; otherwise defers to the exact comparison.
std::optional<bool> dominates_quick(const std::vector<Integer>& norms,
                                    std::size_t k) {
  long top = 0;
  bool any = false;
  std::vector<std::pair<double, long>> parts(norms.size());
  for (std::size_t j = 0; j < norms.size(); ++j) {
    if (sgn(norms[j]) == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, norms[j].get_mpz_t());
    parts[j] = {m, e};
    if (!any || e > top) top = e;
    any = true;
  }
  if (!any) return false;
  // sqrt(m 2^e) relative to 2^(top/2); terms far below the top are charged
  // a tiny positive amount rather than dropped.
  auto modulus = [&](std::size_t j) {
    if (sgn(norms[j]) == 0) return 0.0;
    long shift = parts[j].second - top;
    if (shift < -1800) return 1e-250;
    return std::sqrt(std::ldexp(parts[j].first, static_cast<int>(shift)));
  };
  double mk = modulus(k);
  double rest = 0;
  for (std::size_t j = 0; j < norms.size(); ++j) {
    if (j != k) rest += modulus(j);
  }
  const double margin = 1e-6;
  if (mk > rest * (1 + margin) + 1e-200) return true;
  if (mk < rest * (1 - margin)) return false;
  return std::nullopt;
}

Dyadic half(const Dyadic& x) { return x.mul_2exp(-1); }

// Squared-distance test: does the closed disk D(c, r) meet the closed
// square of half-width w around b?
bool disk_meets_square(const Dyadic& cre, const Dyadic& cim, const Dyadic& r,
                       const Dyadic& bre, const Dyadic& bim, const Dyadic& w) {
  auto gap = [&](const Dyadic& a, const Dyadic& b) {
    Dyadic d = (a - b).abs() - w;
    return d.sign() > 0 ? d : Dyadic();
  };
  Dyadic dx = gap(cre, bre);
  Dyadic dy = gap(cim, bim);
  return dx * dx + dy * dy <= r * r;
}

// Is the square of half-width w around b entirely outside the open disk?
bool square_outside_disk(const CertifiedDisk& d, const Dyadic& bre,
                         const Dyadic& bim, const Dyadic& w) {
  auto gap = [&](const Dyadic& a, const Dyadic& b) {
    Dyadic x = (a - b).abs() - w;
    return x.sign() > 0 ? x : Dyadic();
  };
  Dyadic dx = gap(d.re, bre);
  Dyadic dy = gap(d.im, bim);
  return dx * dx + dy * dy >= d.radius * d.radius;
}

bool disk_inside(const Dyadic& re, const Dyadic& im, const Dyadic& r,
                 const CertifiedDisk& outer) {
  Dyadic slack = outer.radius - r;
  if (slack.sign() < 0) return false;
  Dyadic dx = re - outer.re;
  Dyadic dy = im - outer.im;
  return dx * dx + dy * dy <= slack * slack;
}

// Uniform grid of square cells: cell (i, j) at level l has half-width
// w = base * 2^-l and center origin + (2i + 1) w (componentwise).
struct Grid {
  Dyadic origin_re;
  Dyadic origin_im;
  Dyadic w;

  Dyadic center_re(const Integer& i) const {
    return origin_re + w * Dyadic(Integer(2 * i + 1));
  }
  Dyadic center_im(const Integer& j) const {
    return origin_im + w * Dyadic(Integer(2 * j + 1));
  }
  Grid finer() const { return {origin_re, origin_im, half(w)}; }
};

struct Cell {
  Integer i;
  Integer j;
};

struct Component {
  std::vector<std::size_t> members;
  Integer i0, i1, j0, j1;
};

// 8-connected components of a set of cells on one grid level.
std::vector<Component> components(const std::vector<Cell>& cells) {
  std::map<std::pair<Integer, Integer>, std::size_t> where;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    where.emplace(std::make_pair(cells[k].i, cells[k].j), k);
  }
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        auto it = where.find({cells[k].i + di, cells[k].j + dj});
        if (it != where.end()) parent[find(k)] = find(it->second);
      }
    }
  }
  std::vector<Component> out;
  std::vector<std::ptrdiff_t> slot(cells.size(), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::size_t r = find(k);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(out.size());
      out.push_back({{}, cells[k].i, cells[k].i, cells[k].j, cells[k].j});
    }
    Component& c = out[static_cast<std::size_t>(slot[r])];
    c.members.push_back(k);
    c.i0 = std::min(c.i0, cells[k].i);
    c.i1 = std::max(c.i1, cells[k].i);
    c.j0 = std::min(c.j0, cells[k].j);
    c.j1 = std::max(c.j1, cells[k].j);
  }
  return out;
}

struct Hull {
  Dyadic re;
  Dyadic im;
  Dyadic half_width;  // of the bounding square
  Integer cells;      // side of the bounding square in cells
};

Hull bounding_square(const Grid& g, const Component& c) {
  Integer side = std::max(c.i1 - c.i0, c.j1 - c.j0) + 1;
  return {g.origin_re + g.w * Dyadic(Integer(c.i0 + c.i1 + 1)),
          g.origin_im + g.w * Dyadic(Integer(c.j0 + c.j1 + 1)),
          g.w * Dyadic(side), side};
}

std::vector<Cell> subdivide(const std::vector<Cell>& cells) {
  std::vector<Cell> out;
  out.reserve(cells.size() * 4);
  for (const auto& c : cells) {
    Integer i = 2 * c.i;
    Integer j = 2 * c.j;
    out.push_back({i, j});          // SW
    out.push_back({i + 1, j});      // SE
    out.push_back({i, j + 1});      // NW
    out.push_back({i + 1, j + 1});  // NE
  }
  return out;
}

Dyadic three_halves(const Dyadic& w) { return w + half(w); }

// Does the disk of the hull meet a cell of another component? Cells farther
// than `reach` cells away in index distance are skipped without arithmetic.
bool hull_touches(const Grid& g, const Hull& h, const Dyadic& r,
                  const Component& own, const std::vector<Cell>& cells,
                  const std::vector<std::size_t>& owner, std::size_t own_id) {
  Integer reach = 2 * h.cells + 2;
  Integer ci = (own.i0 + own.i1) / 2;
  Integer cj = (own.j0 + own.j1) / 2;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (owner[k] == own_id) continue;
    if (abs(cells[k].i - ci) > reach || abs(cells[k].j - cj) > reach) continue;
    if (disk_meets_square(h.re, h.im, r, g.center_re(cells[k].i),
                          g.center_im(cells[k].j), g.w)) {
      return true;
    }
  }
  return false;
}

// Quadtree isolation of the roots of a squarefree polynomial.
std::vector<CertifiedDisk> isolate_squarefree(const UniPoly& f) {
  std::vector<CertifiedDisk> found;
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  if (deg == 0) return found;
  Dyadic bound = Dyadic(1).mul_2exp(root_radius_bits(f));
  Grid g{-bound, -bound, bound};
  std::vector<Cell> active = {{Integer(0), Integer(0)}};
  struct Claimed {
    Dyadic re, im, w;
  };
  std::vector<Claimed> claimed;
  for (int level = 0; level < kMaxQuadtreeLevels; ++level) {
    std::vector<Cell> survivors;
    Dyadic r0 = three_halves(g.w);
    for (const auto& c : active) {
      if (!excludes_roots(f, g.center_re(c.i), g.center_im(c.j), r0)) {
        survivors.push_back(c);
      }
    }
    auto comps = components(survivors);
    std::vector<std::size_t> owner(survivors.size());
    for (std::size_t id = 0; id < comps.size(); ++id) {
      for (std::size_t k : comps[id].members) owner[k] = id;
    }
    std::vector<bool> done(survivors.size(), false);
    for (std::size_t id = 0; id < comps.size(); ++id) {
      const Component& comp = comps[id];
      Hull h = bounding_square(g, comp);
      if (h.cells > 4) continue;
      Dyadic r1 = three_halves(h.half_width);
      bool touches = hull_touches(g, h, r1, comp, survivors, owner, id);
      for (std::size_t k = 0; k < claimed.size() && !touches; ++k) {
        touches = disk_meets_square(h.re, h.im, r1, claimed[k].re,
                                    claimed[k].im, claimed[k].w);
      }
      if (touches || !pellet_test(f, h.re, h.im, r1, 1)) continue;
      found.push_back({h.re, h.im, r1, 0});
      for (std::size_t k : comp.members) {
        done[k] = true;
        claimed.push_back({g.center_re(survivors[k].i),
                           g.center_im(survivors[k].j), g.w});
      }
    }
    if (found.size() == deg) return found;
    std::vector<Cell> rest;
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      if (!done[k]) rest.push_back(survivors[k]);
    }
    if (rest.empty()) break;
    active = subdivide(rest);
    g = g.finer();
  }
  throw CertificationError("root isolation did not converge");
}

// Complex dyadic arithmetic rounded to the grid 2^-p (not certified; every
// result of it is verified by a Pellet test).
struct CDyadic {
  Dyadic re;
  Dyadic im;
};

CDyadic cmul(const CDyadic& a, const CDyadic& b, std::int64_t p) {
  return {(a.re * b.re - a.im * b.im).round_nearest(p),
          (a.re * b.im + a.im * b.re).round_nearest(p)};
}

std::optional<CDyadic> newton_step(const UniPoly& h, const CDyadic& z,
                                   std::int64_t p) {
  CDyadic v{Dyadic(), Dyadic()};
  CDyadic dv{Dyadic(), Dyadic()};
  const auto& c = h.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    dv = cmul(dv, z, p);
    dv.re = dv.re + v.re;
    dv.im = dv.im + v.im;
    v = cmul(v, z, p);
    v.re = v.re + Dyadic(c[k]);
  }
  Dyadic den = (dv.re * dv.re + dv.im * dv.im).round_nearest(2 * p);
  if (den.is_zero()) return std::nullopt;
  Dyadic nre = v.re * dv.re + v.im * dv.im;
  Dyadic nim = v.im * dv.re - v.re * dv.im;
  return CDyadic{div_down(nre, den, p), div_down(nim, den, p)};
}

// Tries Newton from the disk center, accepting a disk of radius `target`
// that lies inside `disk` and passes the one-root test.
std::optional<CertifiedDisk> newton_refine(const UniPoly& h,
                                           const CertifiedDisk& disk,
                                           const Dyadic& target) {
  std::int64_t goal = -target.floor_log2();
  std::int64_t spread = bit_length(h.max_norm()) + h.degree();
  for (std::int64_t p = goal + spread + 16; p <= 4 * (goal + spread + 16);
       p *= 2) {
    CDyadic z{disk.re, disk.im};
    Dyadic tiny = Dyadic(1).mul_2exp(-goal - 6);
    for (int it = 0; it < 200; ++it) {
      auto step = newton_step(h, z, p);
      if (!step) break;
      z.re = z.re - step->re;
      z.im = z.im - step->im;
      if (step->re.abs() <= tiny && step->im.abs() <= tiny) break;
      // wandered off: give up on this precision
      if (!disk_inside(z.re, z.im, Dyadic(), disk)) break;
    }
    if (disk_inside(z.re, z.im, target, disk) &&
        pellet_test(h, z.re, z.im, target, 1)) {
      return CertifiedDisk{z.re, z.im, target, disk.factor};
    }
  }
  return std::nullopt;
}

// Local subdivision inside a certified disk until a certified disk of at
// most half the radius is found.
CertifiedDisk shrink_by_subdivision(const UniPoly& f,
                                    const CertifiedDisk& disk) {
  Grid g{disk.re - disk.radius, disk.im - disk.radius, disk.radius};
  std::vector<Cell> active = {{Integer(0), Integer(0)}};
  Dyadic goal = half(disk.radius);
  for (int level = 0; level < kMaxQuadtreeLevels; ++level) {
    std::vector<Cell> survivors;
    for (const auto& c : active) {
      Dyadic re = g.center_re(c.i);
      Dyadic im = g.center_im(c.j);
      if (square_outside_disk(disk, re, im, g.w)) continue;
      if (pellet_test(f, re, im, three_halves(g.w), 0)) continue;
      survivors.push_back(c);
    }
    for (const auto& comp : components(survivors)) {
      Hull h = bounding_square(g, comp);
      Dyadic r1 = three_halves(h.half_width);
      if (r1 > goal) continue;
      if (disk_inside(h.re, h.im, r1, disk) &&
          pellet_test(f, h.re, h.im, r1, 1)) {
        return {h.re, h.im, r1, disk.factor};
      }
    }
    if (survivors.empty()) break;
    active = subdivide(survivors);
    g = g.finer();
  }
  throw CertificationError("root refinement did not converge");
}

CertifiedDisk refine_disk(const UniPoly& h, CertifiedDisk disk,
                          const Dyadic& target) {
  while (disk.radius > target) {
    if (auto d = newton_refine(h, disk, target)) return *d;
    disk = shrink_by_subdivision(h, disk);
  }
  return disk;
}

Dyadic radius_for_quality(std::int64_t quality) {
  return Dyadic(1).mul_2exp(-quality - 1);
}

// Boxes from disks, shrinking any pair whose boxes meet, then sorting.
void assemble(RootSet& rs) {
  auto box_of = [](const CertifiedDisk& d) {
    return ComplexBox::centered(d.re, d.im, d.radius);
  };
  while (true) {
    std::vector<bool> bad(rs.disks.size(), false);
    bool any = false;
    for (std::size_t a = 0; a < rs.disks.size(); ++a) {
      for (std::size_t b = a + 1; b < rs.disks.size(); ++b) {
        if (box_of(rs.disks[a]).intersects(box_of(rs.disks[b]))) {
          bad[a] = bad[b] = true;
          any = true;
        }
      }
    }
    if (!any) break;
    for (std::size_t a = 0; a < rs.disks.size(); ++a) {
      if (!bad[a]) continue;
      const CertifiedDisk& d = rs.disks[a];
      rs.disks[a] =
          refine_disk(rs.factors[d.factor], d, d.radius.mul_2exp(-4));
    }
  }
  std::vector<std::size_t> order(rs.disks.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<ComplexBox> boxes;
  for (const auto& d : rs.disks) boxes.push_back(box_of(d));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (boxes[a].re().lo() != boxes[b].re().lo()) {
      return boxes[a].re().lo() < boxes[b].re().lo();
    }
    return boxes[a].im().lo() < boxes[b].im().lo();
  });
  std::vector<CertifiedDisk> disks;
  rs.roots.clear();
  for (std::size_t k : order) {
    disks.push_back(rs.disks[k]);
    rs.roots.push_back(
        {boxes[k], rs.factor_multiplicity[rs.disks[k].factor]});
  }
  rs.disks = std::move(disks);
}

}  // namespace

ComplexBox RootSet::center(std::size_t i) const {
  return ComplexBox::point(disks[i].re, disks[i].im);
}

namespace {

// Coefficients of a positive multiple of f(c + r y), c = re + i im.
std::vector<GaussInt> taylor_scaled(const UniPoly& f, const Dyadic& re,
                                    const Dyadic& im, const Dyadic& radius) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::int64_t e = radius.exponent();
  if (!re.is_zero()) e = std::min(e, re.exponent());
  if (!im.is_zero()) e = std::min(e, im.exponent());
  Integer cr = re.is_zero() ? Integer(0) : scaled_int(re, e);
  Integer ci = im.is_zero() ? Integer(0) : scaled_int(im, e);
  Integer rr = scaled_int(radius, e);

  // b_j: coefficients of a positive multiple of f(2^e y).
  std::vector<GaussInt> b(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    Integer v = f[j];
    std::int64_t shift = e >= 0 ? e * static_cast<std::int64_t>(j)
                                : -e * static_cast<std::int64_t>(d - j);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    b[j].re = v;
    b[j].im = 0;
  }
  bool real_shift = sgn(ci) == 0;
  if (sgn(cr) != 0 || !real_shift) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = d; j-- > i;) {
        const GaussInt& up = b[j + 1];
        mpz_addmul(b[j].re.get_mpz_t(), up.re.get_mpz_t(), cr.get_mpz_t());
        mpz_addmul(b[j].im.get_mpz_t(), up.im.get_mpz_t(), cr.get_mpz_t());
        if (!real_shift) {
          mpz_submul(b[j].re.get_mpz_t(), up.im.get_mpz_t(), ci.get_mpz_t());
          mpz_addmul(b[j].im.get_mpz_t(), up.re.get_mpz_t(), ci.get_mpz_t());
        }
      }
    }
  }
  Integer rpow = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    rpow *= rr;
    b[j].re *= rpow;
    b[j].im *= rpow;
  }
  return b;
}

// |b_k| > sum_{j != k} |b_j|, decided exactly.
bool dominates(const std::vector<GaussInt>& b, std::size_t k) {
  std::vector<Integer> norms(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    norms[j] = b[j].re * b[j].re + b[j].im * b[j].im;
  }
  if (auto quick = dominates_quick(norms, k)) return *quick;
  Integer lower_k;
  Integer others = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j == k) {
      lower_k = isqrt_scaled(norms[j], false);
    } else if (sgn(norms[j]) != 0) {
      others += isqrt_scaled(norms[j], true);
    }
  }
  return lower_k > others;
}

// Split g(y) = e(y^2) + y o(y^2) into real and imaginary coefficient lists.
struct ComplexPoly {
  UniPoly re;
  UniPoly im;
};

ComplexPoly cmul_poly(const ComplexPoly& a, const ComplexPoly& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// One Graeffe step: G(y) = e(y)^2 - y o(y)^2 has the squared roots.
std::vector<GaussInt> graeffe(const std::vector<GaussInt>& b) {
  std::vector<Integer> er, ei, orr, oi;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j % 2 == 0) {
      er.push_back(b[j].re);
      ei.push_back(b[j].im);
    } else {
      orr.push_back(b[j].re);
      oi.push_back(b[j].im);
    }
  }
  ComplexPoly e{UniPoly(er), UniPoly(ei)};
  ComplexPoly o{UniPoly(orr), UniPoly(oi)};
  ComplexPoly e2 = cmul_poly(e, e);
  ComplexPoly o2 = cmul_poly(o, o);
  std::vector<GaussInt> out(b.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].re = e2.re.coeff(j);
    out[j].im = e2.im.coeff(j);
    if (j > 0) {
      out[j].re -= o2.re.coeff(j - 1);
      out[j].im -= o2.im.coeff(j - 1);
    }
  }
  return out;
}

}  // namespace

bool pellet_test(const UniPoly& f, const Dyadic& re, const Dyadic& im,
                 const Dyadic& radius, std::size_t k) {
  if (f.is_zero()) throw PreconditionError("pellet_test on zero polynomial");
  if (radius.sign() <= 0) throw PreconditionError("pellet_test: radius <= 0");
  if (k > static_cast<std::size_t>(f.degree())) return false;
  return dominates(taylor_scaled(f, re, im, radius), k);
}

bool excludes_roots(const UniPoly& f, const Dyadic& re, const Dyadic& im,
                    const Dyadic& radius) {
  if (f.degree() <= 0) return true;
  std::vector<GaussInt> b = taylor_scaled(f, re, im, radius);
  if (dominates(b, 0)) return true;
  // Roots at distance >= 2r from the center are squared past the Pellet
  // threshold after about log log d steps.
  std::int64_t iters = ceil_log2(Integer(ceil_log2(Integer(2 * f.degree())) + 1));
  for (std::int64_t t = 0; t < iters; ++t) {
    b = graeffe(b);
    if (dominates(b, 0)) return true;
  }
  return false;
}

std::int64_t root_radius_bits(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("root_radius_bits of zero polynomial");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (d == 0) return 0;
  // smallest g >= 0 with |a_d| 2^(gd) > sum_{i<d} |a_i| 2^(gi)
  auto holds = [&](std::int64_t g) {
    Integer lhs = abs(f[d]) << static_cast<mp_bitcnt_t>(g * static_cast<std::int64_t>(d));
    Integer rhs = 0;
    for (std::size_t i = 0; i < d; ++i) {
      rhs += abs(f[i]) << static_cast<mp_bitcnt_t>(g * static_cast<std::int64_t>(i));
    }
    return lhs > rhs;
  };
  std::int64_t lo = 0;
  std::int64_t hi = cauchy_bound(f).gamma;
  if (holds(lo)) return lo;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

RootApproximator::RootApproximator(const RootSet& rs)
    : rs_(&rs), disks_(rs.disks) {}

ComplexBox RootApproximator::box(std::size_t i, std::int64_t quality) {
  CertifiedDisk& d = disks_.at(i);
  Dyadic target = radius_for_quality(quality);
  if (d.radius > target) d = refine_disk(rs_->factors[d.factor], d, target);
  return ComplexBox::centered(d.re, d.im, d.radius);
}

ComplexBox RootApproximator::center(std::size_t i, std::int64_t quality) {
  box(i, quality);
  return ComplexBox::point(disks_[i].re, disks_[i].im);
}

MagnitudeBound cauchy_bound(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("cauchy_bound of zero polynomial");
  Rational q(f.max_norm(), abs(f.leading()));
  q += 1;
  return {std::max<std::int64_t>(ceil_log2(q), 1)};
}

std::int64_t mahler_bound(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("mahler_bound of zero polynomial");
  std::int64_t k = ceil_log2(norm2_squared(f));
  return (k + 1) / 2;
}

RootSet isolate(const UniPoly& f, std::int64_t quality) {
  if (f.is_zero()) throw PreconditionError("isolate: zero polynomial");
  if (quality < 1) throw PreconditionError("isolate: quality must be >= 1");
  RootSet rs;
  rs.polynomial = f;
  rs.quality = quality;
  for (auto& [h, k] : squarefree_decomposition(f)) {
    rs.factors.push_back(h);
    rs.factor_multiplicity.push_back(k);
  }
  Dyadic target = radius_for_quality(quality);
  for (std::size_t i = 0; i < rs.factors.size(); ++i) {
    for (CertifiedDisk d : isolate_squarefree(rs.factors[i])) {
      d.factor = i;
      rs.disks.push_back(refine_disk(rs.factors[i], d, target));
    }
  }
  assemble(rs);
  return rs;
}

RootSet refine(const RootSet& rs, std::int64_t quality) {
  if (quality <= rs.quality) return rs;
  RootSet out = rs;
  out.quality = quality;
  Dyadic target = radius_for_quality(quality);
  for (auto& d : out.disks) d = refine_disk(out.factors[d.factor], d, target);
  assemble(out);
  return out;
}

}  // namespace zds
