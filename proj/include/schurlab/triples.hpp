#pragma once

// Product triples a * b = c inside a set. Triples are kept in the canonical
// a <= b form; (b, a, c) is the same solution. Products with a factor 1 are
// the trivial 1 * b = b family and are excluded throughout: with them, any
// set containing 1 would trip every colouring test for free.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "schurlab/integer_set.hpp"

namespace schurlab {

struct ProductTriple {
  uint64_t a = 0, b = 0, c = 0;  // a <= b, a * b = c
  bool degenerate() const { return a == b; }
  friend bool operator==(const ProductTriple&, const ProductTriple&) = default;
};

// All triples a <= b, ab = c with a, b, c in s and a >= 2, sorted by (c, a).
// Degenerate squares a * a = c are included iff `allow_degenerate`.
//
// Iterates a over the set and b over set elements in [a, max(s)/a] with a
// membership test on ab, so sparse sets cost far less than |s|^2 pairs.
inline std::vector<ProductTriple> enumerate_product_triples(
    const IntegerSet& s, bool allow_degenerate = true) {
  std::vector<ProductTriple> out;
  const auto& elems = s.elements();
  const uint64_t top = s.max_element();
  for (size_t i = 0; i < elems.size(); ++i) {
    const uint64_t a = elems[i];
    if (a < 2) continue;
    if (a > top / a) break;
    for (size_t j = i; j < elems.size(); ++j) {
      const uint64_t b = elems[j];
      if (b > top / a) break;
      if (!allow_degenerate && b == a) continue;
      const uint64_t c = a * b;
      if (s.contains(c)) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const ProductTriple& l, const ProductTriple& r) {
    return l.c != r.c ? l.c < r.c : l.a < r.a;
  });
  return out;
}

}  // namespace schurlab
