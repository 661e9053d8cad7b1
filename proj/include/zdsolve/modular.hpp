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

// Exact integer linear algebra by word-size modular images and Chinese
// remaindering.

#ifndef ZDSOLVE_MODULAR_HPP_
#define ZDSOLVE_MODULAR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zdsolve/numerics.hpp"
#include "zdsolve/polynomial.hpp"

namespace zds {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The index-th prime below 2^62, scanning downward.
std::uint64_t modular_prime(std::size_t index);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
/// a^-1 mod p for a prime p and a != 0 mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// det(a) mod p for a prime p < 2^62.
std::uint64_t det_mod(const IntMatrix& a, std::uint64_t p);

/// Coefficients of det(tI - a) mod p, constant term first (Hessenberg
/// reduction).
std::vector<std::uint64_t> charpoly_mod(const IntMatrix& a, std::uint64_t p);

/// Exact coefficients of det(tI - a), constant term first.
std::vector<Integer> charpoly(const IntMatrix& a);

/// Product of the Euclidean row norms, rounded up; bounds |det a|.
Integer hadamard_bound(const IntMatrix& a);

/// Signed residue reconstruction from images modulo distinct primes.
class CrtAccumulator {
 public:
  void add(std::uint64_t residue, std::uint64_t prime);
  const Integer& modulus() const { return modulus_; }
  /// The unique value in (-modulus/2, modulus/2].
  Integer value() const;

 private:
  Integer value_ = 0;
  Integer modulus_ = 1;
};

/// Exact determinant from enough primes to exceed twice the Hadamard bound.
Integer det_crt(const IntMatrix& a);

/// The polynomial of degree < xs.size() through (xs[k], ys[k]); throws
/// CertificationError when it does not have integer coefficients.
UniPoly interpolate(const std::vector<Integer>& xs,
                    const std::vector<Integer>& ys);

}  // namespace zds

#endif  // ZDSOLVE_MODULAR_HPP_
