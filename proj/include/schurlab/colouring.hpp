#pragma once

// r-colourings over an explicit domain of integers. Colours are 1..r; the
// positional letter form A..Z matches how colourings of [n] are written down
// (position i = element i).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/integer_set.hpp"

namespace schurlab {

struct RColouring {
  int r = 0;
  std::vector<uint64_t> domain;   // sorted ascending
  std::vector<uint8_t> colours;   // parallel to domain, values 1..r

  bool total_on(const IntegerSet& s) const {
    return domain == s.elements();
  }

  // 0 when e is not in the domain.
  int colour_of(uint64_t e) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), e);
    if (it == domain.end() || *it != e) return 0;
    return colours[static_cast<size_t>(it - domain.begin())];
  }

  // Domain must be exactly {1, ..., n}.
  std::string to_letter_string() const {
    std::string out(domain.size(), '?');
    for (size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] != i + 1)
        throw std::logic_error("letter form needs domain {1..n}");
      out[i] = static_cast<char>('A' + colours[i] - 1);
    }
    return out;
  }

  static RColouring from_letter_string(const std::string& s, int r = 0) {
    RColouring col;
    col.domain.resize(s.size());
    col.colours.resize(s.size());
    int max_seen = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 'A' || s[i] > 'Z')
        throw std::invalid_argument("colouring string: letters A..Z only");
      col.domain[i] = i + 1;
      col.colours[i] = static_cast<uint8_t>(s[i] - 'A' + 1);
      max_seen = std::max<int>(max_seen, col.colours[i]);
    }
    col.r = r > 0 ? r : max_seen;
    if (max_seen > col.r)
      throw std::invalid_argument("colouring string: letter beyond declared r");
    return col;
  }

  friend bool operator==(const RColouring&, const RColouring&) = default;
};

}  // namespace schurlab
