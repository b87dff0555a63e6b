#pragma once

// Minimal unsigned big integer. Only what the exact bounds need: products,
// powers, comparisons and decimal output. Values like D(n)^100 overflow every
// built-in width as soon as D(n) >= 2, so the slack-factor and tuple-count
// guards are computed here instead of in doubles.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace schurlab {

class BigUint {
 public:
  BigUint() = default;
  BigUint(uint64_t v) {  // NOLINT: implicit on purpose
    while (v != 0) {
      limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                       out.limbs_[i + j] + carry;
        out.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      size_t k = i + b.limbs_.size();
      while (carry != 0) {
        uint64_t cur = out.limbs_[k] + carry;
        out.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    out.trim();
    return out;
  }

  BigUint& operator*=(const BigUint& rhs) { return *this = *this * rhs; }

  static BigUint pow(const BigUint& base, uint64_t exp) {
    BigUint result{1};
    BigUint acc = base;
    while (exp != 0) {
      if (exp & 1) result *= acc;
      exp >>= 1;
      if (exp != 0) acc *= acc;
    }
    return result;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size();
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
  }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
  friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

  // Fits in uint64_t?
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const {
    uint64_t v = 0;
    for (size_t i = std::min<size_t>(limbs_.size(), 2); i-- > 0;)
      v = (v << 32) | limbs_[i];
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> tmp = limbs_;
    std::string out;
    while (!tmp.empty()) {
      uint64_t rem = 0;
      for (size_t i = tmp.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      std::string chunk = std::to_string(rem);
      if (tmp.empty()) {
        out.insert(0, chunk);
      } else {
        out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
      }
    }
    return out;
  }

  size_t limb_count() const { return limbs_.size(); }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<uint32_t> limbs_;  // base 2^32, little endian, no trailing zeros
};

}  // namespace schurlab
