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

#include "zdsolve/modular.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& x, u64 p) {
  // mpz_fdiv_ui takes an unsigned long, which is 64 bits on supported targets
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

Integer from_u64(u64 v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

std::uint64_t mul_mod(u64 a, u64 b, u64 p) { return mulmod(a % p, b % p, p); }

std::uint64_t inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw PreconditionError("inv_mod: zero has no inverse");
  return invmod(a % p, p);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t modular_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<u64> pool;
  std::lock_guard<std::mutex> lock(mu);
  u64 next = pool.empty() ? (u64{1} << 62) - 1 : pool.back() - 2;
  while (pool.size() <= index) {
    while (!is_prime_u64(next)) next -= 2;
    pool.push_back(next);
    next -= 2;
  }
  return pool[index];
}

std::uint64_t det_mod(const IntMatrix& a, std::uint64_t p) {
  const std::size_t m = a.size();
  std::vector<std::vector<u64>> b(m, std::vector<u64>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) b[i][j] = reduce(a[i][j], p);
  }
  u64 det = 1 % p;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && b[piv][c] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != c) {
      std::swap(b[piv], b[c]);
      det = det == 0 ? 0 : p - det;
    }
    det = mulmod(det, b[c][c], p);
    u64 inv = invmod(b[c][c], p);
    for (std::size_t r = c + 1; r < m; ++r) {
      if (b[r][c] == 0) continue;
      u64 f = mulmod(b[r][c], inv, p);
      for (std::size_t k = c; k < m; ++k) {
        u64 sub = mulmod(f, b[c][k], p);
        b[r][k] = b[r][k] >= sub ? b[r][k] - sub : b[r][k] + p - sub;
      }
    }
  }
  return det;
}

std::vector<std::uint64_t> charpoly_mod(const IntMatrix& a, std::uint64_t p) {
  const std::size_t m = a.size();
  std::vector<std::vector<u64>> h(m, std::vector<u64>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) h[i][j] = reduce(a[i][j], p);
  }
  auto sub = [p](u64 x, u64 y) { return x >= y ? x - y : x + p - y; };
  auto add = [p](u64 x, u64 y) { return x >= p - y ? x - (p - y) : x + y; };
  // similarity transform to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < m; ++j) {
    std::size_t piv = j + 1;
    while (piv < m && h[piv][j] == 0) ++piv;
    if (piv == m) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    u64 inv = invmod(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < m; ++k) {
      if (h[k][j] == 0) continue;
      u64 u = mulmod(h[k][j], inv, p);
      for (std::size_t c = 0; c < m; ++c) h[k][c] = sub(h[k][c], mulmod(u, h[j + 1][c], p));
      for (std::size_t r = 0; r < m; ++r) h[r][j + 1] = add(h[r][j + 1], mulmod(u, h[r][k], p));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_{k-i,k} prod(subdiagonal) p_{k-i-1}
  std::vector<std::vector<u64>> pk(m + 1);
  pk[0] = {1 % p};
  for (std::size_t k = 1; k <= m; ++k) {
    auto& cur = pk[k];
    cur.assign(k + 1, 0);
    for (std::size_t e = 0; e < k; ++e) {
      cur[e + 1] = add(cur[e + 1], pk[k - 1][e]);
      cur[e] = sub(cur[e], mulmod(h[k - 1][k - 1], pk[k - 1][e], p));
    }
    u64 prod = 1 % p;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mulmod(prod, h[k - i][k - i - 1], p);
      if (prod == 0) break;
      u64 f = mulmod(h[k - i - 1][k - 1], prod, p);
      for (std::size_t e = 0; e < pk[k - i - 1].size(); ++e) {
        cur[e] = sub(cur[e], mulmod(f, pk[k - i - 1][e], p));
      }
    }
  }
  return pk[m];
}

std::vector<Integer> charpoly(const IntMatrix& a) {
  const std::size_t m = a.size();
  // every coefficient is a sum of at most 2^m principal minors, each
  // bounded by the product of max(1, row norm)
  Integer bound = 1;
  for (const auto& row : a) {
    Integer sq = 0;
    for (const auto& x : row) sq += x * x;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
    if (r * r < sq) r += 1;
    bound *= std::max(r, Integer(1));
  }
  bound <<= static_cast<mp_bitcnt_t>(m);
  const Integer need = 2 * bound + 1;
  std::vector<CrtAccumulator> acc(m + 1);
  for (std::size_t k = 0; acc[0].modulus() <= need; ++k) {
    u64 p = modular_prime(k);
    std::vector<u64> c = charpoly_mod(a, p);
    for (std::size_t e = 0; e <= m; ++e) acc[e].add(c[e], p);
  }
  std::vector<Integer> out;
  for (const auto& x : acc) out.push_back(x.value());
  return out;
}

Integer hadamard_bound(const IntMatrix& a) {
  Integer bound = 1;
  for (const auto& row : a) {
    Integer sq = 0;
    for (const auto& x : row) sq += x * x;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
    if (r * r < sq) r += 1;
    bound *= r;
  }
  return bound;
}

void CrtAccumulator::add(std::uint64_t residue, std::uint64_t prime) {
  // x = value + modulus * t with t = (residue - value) / modulus mod prime
  u64 v = reduce(value_, prime);
  u64 diff = residue >= v ? residue - v : residue + prime - v;
  u64 t = mulmod(diff, invmod(reduce(modulus_, prime), prime), prime);
  value_ += modulus_ * from_u64(t);
  modulus_ *= from_u64(prime);
}

Integer CrtAccumulator::value() const {
  if (2 * value_ > modulus_) return value_ - modulus_;
  return value_;
}

Integer det_crt(const IntMatrix& a) {
  if (a.empty()) return 1;
  Integer need = 2 * hadamard_bound(a) + 1;
  CrtAccumulator acc;
  for (std::size_t k = 0; acc.modulus() <= need; ++k) {
    u64 p = modular_prime(k);
    acc.add(det_mod(a, p), p);
  }
  return acc.value();
}

UniPoly interpolate(const std::vector<Integer>& xs,
                    const std::vector<Integer>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw PreconditionError("interpolate: mismatched or empty samples");
  }
  const std::size_t n = xs.size();
  // Newton divided differences
  std::vector<Rational> c(ys.begin(), ys.end());
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      Rational den(xs[i] - xs[i - k]);
      if (den == 0) throw PreconditionError("interpolate: repeated abscissa");
      c[i] = (c[i] - c[i - 1]) / den;
    }
  }
  std::vector<Rational> poly{c[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - xs[k]) + c[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(xs[k]);
    }
    next[0] += c[k];
    poly = std::move(next);
  }
  std::vector<Integer> out;
  out.reserve(poly.size());
  for (auto& q : poly) {
    q.canonicalize();
    if (q.get_den() != 1) {
      throw CertificationError("interpolated polynomial is not integral");
    }
    out.push_back(q.get_num());
  }
  return UniPoly(std::move(out));
}

}  // namespace zds
