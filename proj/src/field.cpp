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

#include "slimnoc/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "slimnoc/errors.hpp"

namespace slimnoc {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime_power: return "NonPrimePower";
    case errc::not_primitive: return "NotPrimitive";
    case errc::invalid_q: return "InvalidQ";
    case errc::invalid_u: return "InvalidU";
    case errc::construction_invalid: return "ConstructionInvalid";
    case errc::not_slim_noc: return "NotSlimNoc";
    case errc::collision_detected: return "CollisionDetected";
    case errc::disconnected: return "Disconnected";
    case errc::insufficient_vcs: return "InsufficientVCs";
    case errc::setup_error: return "SetupError";
    case errc::stall_error: return "StallError";
    case errc::infeasible_n: return "InfeasibleN";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::missing_input: return "MissingInput";
    case errc::bad_input: return "BadInput";
  }
  return "Error";
}

bool is_prime_power(int q, int* p_out, int* m_out) {
  if (q < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q is prime
  int m = 0, x = q;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  if (x != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

namespace {

// Polynomials over GF(p), little-endian coefficient vectors.

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
  std::vector<int> res(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) res[i + j] = (res[i + j] + a[i] * b[j]) % p;
  }
  // reduce by the monic modulus of degree m
  size_t m = modulus.size() - 1;
  while (res.size() > m) {
    int c = res.back();
    size_t d = res.size() - 1;
    if (c != 0) {
      for (size_t k = 0; k <= m; ++k) {
        int idx = static_cast<int>(d - m + k);
        res[idx] = ((res[idx] - c * modulus[k]) % p + p) % p;
      }
    }
    res.pop_back();
  }
  res.resize(m, 0);
  return res;
}

// Remainder of a / b over GF(p).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  auto inverse = [&](int v) {
    int r = 1, base = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<int> bb = b;
  while (!bb.empty() && bb.back() == 0) bb.pop_back();
  int binv = inverse(bb.back());
  while (a.size() >= bb.size() && !a.empty()) {
    int c = a.back() * binv % p;
    size_t d = a.size() - bb.size();
    for (size_t k = 0; k < bb.size(); ++k) a[d + k] = ((a[d + k] - c * bb[k]) % p + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool poly_divides(const std::vector<int>& divisor, const std::vector<int>& poly, int p) {
  return poly_rem(poly, divisor, p).empty();
}

// Exhaustive irreducibility test: no monic divisor of degree 1..m/2.
bool is_irreducible(const std::vector<int>& poly, int p) {
  int m = static_cast<int>(poly.size()) - 1;
  if (m == 1) return true;
  for (int d = 1; 2 * d <= m; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      std::vector<int> cand(d + 1, 0);
      int t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, poly, p)) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree m over GF(p), candidates ordered by
// the base-p value of their non-leading coefficients.
std::vector<int> find_modulus(int p, int m) {
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int v = 0; v < count; ++v) {
    std::vector<int> poly(m + 1, 0);
    int t = v;
    for (int i = 0; i < m; ++i) {
      poly[i] = t % p;
      t /= p;
    }
    poly[m] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(errc::non_prime_power, "no irreducible polynomial found");
}

}  // namespace

std::string FieldTable::element_name(int id) const { return std::to_string(id); }

FieldTable make_field(int q) {
  int p = 0, m = 0;
  if (!is_prime_power(q, &p, &m)) {
    throw Error(errc::non_prime_power, "q = " + std::to_string(q) + " is not a prime power >= 2");
  }
  FieldTable f;
  f.q = q;
  f.characteristic = p;
  f.degree = m;
  f.add_tab.resize(static_cast<size_t>(q) * q);
  f.mul_tab.resize(static_cast<size_t>(q) * q);
  f.neg_tab.resize(q);
  if (m == 1) {
    for (int a = 0; a < q; ++a) {
      f.neg_tab[a] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        f.add_tab[a * q + b] = (a + b) % q;
        f.mul_tab[a * q + b] = (a * b) % q;
      }
    }
    return f;
  }
  std::vector<int> modulus = find_modulus(p, m);
  f.modulus.assign(modulus.begin(), modulus.end() - 1);
  auto to_poly = [&](int v) {
    std::vector<int> c(m, 0);
    for (int i = 0; i < m; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto from_poly = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + c[i];
    return v;
  };
  std::vector<std::vector<int>> polys(q);
  for (int v = 0; v < q; ++v) polys[v] = to_poly(v);
  for (int a = 0; a < q; ++a) {
    std::vector<int> negc(m);
    for (int i = 0; i < m; ++i) negc[i] = (p - polys[a][i]) % p;
    f.neg_tab[a] = from_poly(negc);
    for (int b = 0; b < q; ++b) {
      std::vector<int> sum(m);
      for (int i = 0; i < m; ++i) sum[i] = (polys[a][i] + polys[b][i]) % p;
      f.add_tab[a * q + b] = from_poly(sum);
      f.mul_tab[a * q + b] = from_poly(poly_mul_mod(polys[a], polys[b], modulus, p));
    }
  }
  return f;
}

int multiplicative_order(const FieldTable& f, int e) {
  if (e == 0) return 0;
  int x = e, ord = 1;
  while (x != 1) {
    x = f.mul(x, e);
    ++ord;
    assert(ord <= f.q);
  }
  return ord;
}

int find_generator(const FieldTable& f) {
  for (int e = 1; e < f.q; ++e) {
    if (multiplicative_order(f, e) == f.q - 1) return e;
  }
  assert(false && "finite field has a primitive element");
  return -1;
}

int count_generators(const FieldTable& f) {
  int n = 0;
  for (int e = 1; e < f.q; ++e) {
    if (multiplicative_order(f, e) == f.q - 1) ++n;
  }
  return n;
}

GeneratorSets generator_sets(const FieldTable& f, int xi, int u) {
  const int q = f.q;
  GeneratorSets g;
  g.xi = xi;
  g.u = u;
  if (q == 2) {
    // q = 2 sits outside q = 4w + u; the single nonzero element serves both sets.
    if (xi != 1) throw Error(errc::not_primitive, "xi must be 1 for GF(2)");
    g.x = {1};
    g.x_prime = {1};
    return g;
  }
  if (multiplicative_order(f, xi) != q - 1) {
    throw Error(errc::not_primitive,
                "element " + std::to_string(xi) + " does not generate GF(" + std::to_string(q) + ")*");
  }
  if (u != 1 && u != 0 && u != -1) throw Error(errc::invalid_u, "u must be -1, 0 or +1");
  if ((q - u) % 4 != 0) {
    throw Error(errc::invalid_u, "q = " + std::to_string(q) + " does not satisfy q = 4w + u for u = " +
                                     std::to_string(u));
  }

  std::vector<int> powers(q - 1);  // powers[i] = xi^i
  powers[0] = 1;
  for (int i = 1; i < q - 1; ++i) powers[i] = f.mul(powers[i - 1], xi);

  std::vector<int> x, xp;
  if (u == 1) {
    for (int i = 0; i < q - 1; i += 2) x.push_back(powers[i]);
    for (int i = 1; i < q - 1; i += 2) xp.push_back(powers[i]);
  } else {
    int w = (q - u) / 4;
    for (int i = 0; i < w; ++i) x.push_back(powers[(2 * i) % (q - 1)]);
    for (int i = 0; i < w; ++i) x.push_back(powers[(2 * w - 1 + 2 * i) % (q - 1)]);
    for (int e : x) xp.push_back(f.mul(xi, e));
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  std::sort(xp.begin(), xp.end());
  xp.erase(std::unique(xp.begin(), xp.end()), xp.end());
  g.x = std::move(x);
  g.x_prime = std::move(xp);
  return g;
}

}  // namespace slimnoc
