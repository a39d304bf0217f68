/*
 * Copyright 2026 The slimnoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SLIMNOC_FIELD_HPP
#define SLIMNOC_FIELD_HPP

#include <string>
#include <vector>

namespace slimnoc {

/// Finite field GF(q) as explicit operation tables.
///
/// Elements are dense ids 0..q-1. Id 0 is the additive zero and id 1 the
/// multiplicative one. For prime q an element id is the residue itself.
/// For q = p^m the field is GF(p)[t] modulo the smallest irreducible monic
/// polynomial of degree m, and an element id encodes the coefficient vector
/// in base p (id = c0 + c1*p + ... + c_{m-1}*p^{m-1}).
struct FieldTable {
  int q = 0;
  int characteristic = 0;  // p
  int degree = 0;          // m, q = p^m
  std::vector<int> modulus;  // non-leading coefficients of the reduction polynomial (empty for m=1)
  std::vector<int> add_tab;  // q*q row-major
  std::vector<int> mul_tab;  // q*q row-major
  std::vector<int> neg_tab;  // q

  int add(int a, int b) const { return add_tab[a * q + b]; }
  int mul(int a, int b) const { return mul_tab[a * q + b]; }
  int neg(int a) const { return neg_tab[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  std::string element_name(int id) const;
};

/// Returns true iff q = p^m for a prime p and m >= 1; outputs p and m if so.
bool is_prime_power(int q, int* p = nullptr, int* m = nullptr);

/// Builds GF(q). Throws Error(non_prime_power) if q < 2 or q has two
/// distinct prime factors.
FieldTable make_field(int q);

/// Multiplicative order of a nonzero element (0 for the zero element).
int multiplicative_order(const FieldTable& f, int e);

/// Smallest element id whose powers enumerate all q-1 nonzero elements.
int find_generator(const FieldTable& f);

/// Number of primitive elements; equals Euler's totient of q-1.
int count_generators(const FieldTable& f);

/// Generator sets driving the graph construction. X wires subgroups of type
/// 0, X' subgroups of type 1. Both are closed under negation so the
/// resulting intra-subgroup edges are undirected.
struct GeneratorSets {
  int xi = 0;                // primitive element used
  int u = 0;                 // the u in q = 4w + u
  std::vector<int> x;        // sorted element ids
  std::vector<int> x_prime;  // sorted element ids
};

/// Builds X and X' from a primitive element.
///
/// For q = 4w+1 the sets are the even and odd powers of xi (equivalently the
/// nonzero squares and the non-squares). For q = 4w and q = 4w-1 the even/odd
/// split does not yield negation-closed sets, so the first w exponents step
/// by two from 0 and the next w step by two from 2w-1, with X' = xi * X.
/// q = 2 is special-cased to X = X' = {1}.
/// Throws Error(not_primitive) if xi does not generate the nonzero elements.
GeneratorSets generator_sets(const FieldTable& f, int xi, int u);

}  // namespace slimnoc

#endif
