// Golden GF(9) and GF(8) operation tables as printed in the published
// configuration tables, with elements renamed to indices:
//   GF(9): 0 1 2 u v w x y z  ->  0 1 2 3 4 5 6 7 8
//   GF(8): 0 1 u v w x y z    ->  0 1 2 3 4 5 6 7
// The printed GF(9) negation column contains a typo for element 2 (it lists
// -2 = 0 although 2 + 1 = 0 in the addition table), so the negation here is
// derived from the printed addition table instead of transcribed.

#ifndef SLIMNOC_TESTS_TABLE5_HPP
#define SLIMNOC_TESTS_TABLE5_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "slimnoc/field.hpp"

namespace golden {

inline const std::array<std::array<int, 9>, 9> kGf9Add = {{
    {0, 1, 2, 3, 4, 5, 6, 7, 8},
    {1, 2, 0, 4, 5, 3, 7, 8, 6},
    {2, 0, 1, 5, 3, 4, 8, 6, 7},
    {3, 4, 5, 6, 7, 8, 0, 1, 2},
    {4, 5, 3, 7, 8, 6, 1, 2, 0},
    {5, 3, 4, 8, 6, 7, 2, 0, 1},
    {6, 7, 8, 0, 1, 2, 3, 4, 5},
    {7, 8, 6, 1, 2, 0, 4, 5, 3},
    {8, 6, 7, 2, 0, 1, 5, 3, 4},
}};

inline const std::array<std::array<int, 9>, 9> kGf9Mul = {{
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8},
    {0, 2, 1, 6, 8, 7, 3, 5, 4},
    {0, 3, 6, 2, 5, 8, 1, 4, 7},
    {0, 4, 8, 5, 6, 1, 7, 2, 3},
    {0, 5, 7, 8, 1, 3, 4, 6, 2},
    {0, 6, 3, 1, 7, 4, 2, 8, 5},
    {0, 7, 5, 4, 2, 6, 8, 3, 1},
    {0, 8, 4, 7, 3, 2, 5, 1, 6},
}};

inline const std::array<std::array<int, 8>, 8> kGf8Add = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

inline const std::array<std::array<int, 8>, 8> kGf8Mul = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 4, 6, 5, 7, 1, 3},
    {0, 3, 6, 5, 1, 2, 7, 4},
    {0, 4, 5, 1, 7, 3, 2, 6},
    {0, 5, 7, 2, 3, 6, 4, 1},
    {0, 6, 1, 7, 2, 4, 3, 5},
    {0, 7, 3, 4, 6, 1, 5, 2},
}};

/// Exhaustive search for a field isomorphism between `f` and an n x n golden
/// table pair. Isomorphisms fix 0 and 1, so only the remaining n-2 elements
/// permute (<= 7! candidates for GF(9)).
template <size_t N>
bool isomorphic_to(const slimnoc::FieldTable& f, const std::array<std::array<int, N>, N>& add,
                   const std::array<std::array<int, N>, N>& mul) {
  if (f.q != static_cast<int>(N)) return false;
  std::vector<int> perm(N);
  perm[0] = 0;
  perm[1] = 1;
  std::vector<int> rest;
  for (int e = 2; e < static_cast<int>(N); ++e) rest.push_back(e);
  std::sort(rest.begin(), rest.end());
  do {
    for (size_t i = 0; i < rest.size(); ++i) perm[i + 2] = rest[i];
    bool ok = true;
    for (size_t a = 0; a < N && ok; ++a) {
      for (size_t b = 0; b < N && ok; ++b) {
        if (perm[f.add(a, b)] != add[perm[a]][perm[b]]) ok = false;
        if (ok && perm[f.mul(a, b)] != mul[perm[a]][perm[b]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

}  // namespace golden

#endif
