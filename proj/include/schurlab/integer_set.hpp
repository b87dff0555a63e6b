#pragma once

// Finite subsets of [n] = {1, ..., n}. This is the one object everything else
// consumes: samples, colour classes, pattern universes. Elements are kept as a
// sorted vector; membership is O(1) through a dense bit table when the
// universe is small enough and a hash set for sparse sets over huge universes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace schurlab {

class IntegerSet {
 public:
  // Universes up to this size get a dense bit table (16 MiB of bits).
  static constexpr uint64_t kDenseBitLimit = uint64_t{1} << 27;

  IntegerSet() = default;
  explicit IntegerSet(uint64_t universe) : universe_(universe) {}

  // `elems` need not be sorted; duplicates are dropped. Elements outside
  // [1, universe] are rejected.
  static IntegerSet from_elements(uint64_t universe, std::vector<uint64_t> elems) {
    if (!std::is_sorted(elems.begin(), elems.end()))
      std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!elems.empty() && (elems.front() < 1 || elems.back() > universe))
      throw std::invalid_argument("IntegerSet: element outside [1, n]");
    IntegerSet s(universe);
    s.elems_ = std::move(elems);
    s.build_lookup();
    return s;
  }

  uint64_t universe() const { return universe_; }
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<uint64_t>& elements() const { return elems_; }
  uint64_t max_element() const { return elems_.empty() ? 0 : elems_.back(); }
  uint64_t min_element() const { return elems_.empty() ? 0 : elems_.front(); }

  bool contains(uint64_t x) const {
    if (x < 1 || x > universe_) return false;
    if (!bits_.empty()) return (bits_[x >> 6] >> (x & 63)) & 1u;
    return hash_.count(x) != 0;
  }

  // Index into elements() of the first element >= x (== size() if none).
  size_t first_at_least(uint64_t x) const {
    return static_cast<size_t>(
        std::lower_bound(elems_.begin(), elems_.end(), x) - elems_.begin());
  }

  friend bool operator==(const IntegerSet& a, const IntegerSet& b) {
    return a.universe_ == b.universe_ && a.elems_ == b.elems_;
  }

 private:
  void build_lookup() {
    if (universe_ <= kDenseBitLimit) {
      bits_.assign((universe_ >> 6) + 1, 0);
      for (uint64_t e : elems_) bits_[e >> 6] |= uint64_t{1} << (e & 63);
    } else {
      hash_.reserve(elems_.size() * 2);
      hash_.insert(elems_.begin(), elems_.end());
    }
  }

  uint64_t universe_ = 0;
  std::vector<uint64_t> elems_;       // sorted ascending, unique
  std::vector<uint64_t> bits_;        // dense membership, universe <= limit
  std::unordered_set<uint64_t> hash_; // sparse membership otherwise
};

// Set files: one-line header "n=<universe>", then one decimal element per
// line. Blank lines are ignored.
inline IntegerSet read_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw std::runtime_error("set file: missing n=<universe> header");
  uint64_t n = 0;
  try {
    n = std::stoull(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("set file: bad universe in header: " + line);
  }
  std::vector<uint64_t> elems;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      elems.push_back(std::stoull(line));
    } catch (const std::exception&) {
      throw std::runtime_error("set file: bad element line: " + line);
    }
  }
  try {
    return IntegerSet::from_elements(n, std::move(elems));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("set file: ") + e.what());
  }
}

inline void write_set(const IntegerSet& s, std::ostream& out) {
  out << "n=" << s.universe() << '\n';
  for (uint64_t e : s.elements()) out << e << '\n';
}

inline IntegerSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  return read_set(in);
}

inline void write_set_file(const IntegerSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_set(s, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace schurlab
