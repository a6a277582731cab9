// Copyright 2026 the graphshare authors
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

#ifndef GRAPHSHARE_BITVEC_HPP
#define GRAPHSHARE_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphshare {

/// Vector over GF(2), packed into 64-bit words. Unused high bits of the last
/// word are kept zero so that equality and popcount can work word-wise.
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVector from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
  }

  /// Parse "0101..." (most significant coordinate first in reading order,
  /// i.e. character j is coordinate j).
  static BitVector from_string(const std::string& s) {
    BitVector v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitVector::from_string: bad character");
      }
    }
    return v;
  }

  static BitVector from_support(size_t n, const std::vector<size_t>& support) {
    BitVector v(n);
    for (size_t i : support) v.set(i, true);
    return v;
  }

  size_t size() const { return n_; }

  bool get(size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1;
  }

  void set(size_t i, bool value) {
    check_index(i);
    uint64_t mask = uint64_t(1) << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  void flip(size_t i) {
    check_index(i);
    words_[i / 64] ^= uint64_t(1) << (i % 64);
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  BitVector operator^(const BitVector& other) const {
    BitVector result = *this;
    result ^= other;
    return result;
  }

  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  BitVector operator&(const BitVector& other) const {
    BitVector result = *this;
    result &= other;
    return result;
  }

  /// GF(2) inner product.
  bool dot(const BitVector& other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
      acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
  }

  size_t popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  std::vector<size_t> support() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < n_; ++i) {
      if (get(i)) out.push_back(i);
    }
    return out;
  }

  std::string str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  bool operator==(const BitVector& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const BitVector& other) const { return !(*this == other); }

 private:
  void check_index(size_t i) const {
    if (i >= n_) throw std::out_of_range("BitVector: index out of range");
  }
  void check_same_size(const BitVector& other) const {
    if (n_ != other.n_) {
      throw std::invalid_argument("BitVector: size mismatch");
    }
  }

  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace graphshare

#endif
