#pragma once

#include <cstdint>
#include <vector>

#include "qtc/square_key.hpp"

namespace qtc::detail {

// Open-addressing tables for packed SquareKeys (linear probing, fixed
// capacity, no erase). pack() never sets the top bits, so ~0 is a free
// sentinel. One 8-byte slot per probe keeps the big-tree kernels off the
// allocator and down to one cache line per lookup.

class FlatKeySet {
 public:
  explicit FlatKeySet(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    mask_ = cap - 1;
    keys_.assign(cap, kEmpty);
  }
  void insert(std::uint64_t key) {
    std::size_t i = mix64(key) & mask_;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return;
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
  }
  bool contains(std::uint64_t key) const {
    std::size_t i = mix64(key) & mask_;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
  std::size_t mask_ = 0;
  std::vector<std::uint64_t> keys_;
};

class FlatKeyMap {
 public:
  explicit FlatKeyMap(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    mask_ = cap - 1;
    keys_.assign(cap, kEmpty);
    values_.resize(cap);
  }
  void insert(std::uint64_t key, std::uint32_t value) {
    std::size_t i = mix64(key) & mask_;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) {
        values_[i] = value;
        return;
      }
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
    values_[i] = value;
  }
  // Value for key, or -1 when absent.
  std::int64_t find(std::uint64_t key) const {
    std::size_t i = mix64(key) & mask_;
    while (keys_[i] != kEmpty) {
      if (keys_[i] == key) return values_[i];
      i = (i + 1) & mask_;
    }
    return -1;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
  std::size_t mask_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
};

}  // namespace qtc::detail
