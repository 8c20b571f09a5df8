// Copyright 2026 The Authors.
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

#ifndef MMC_SMALL_SET_HPP_
#define MMC_SMALL_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace mmc {

/// Finite set of small non-negative integer ids (at most 64), stored as a
/// bitmask. Iteration is always in ascending id order, which is the
/// canonical "ground order" used for every tie-break in this library.
///
/// The tag parameter keeps edge sets, doctor sets and hospital sets from
/// being mixed up.
template <class Tag>
class SmallSet {
 public:
  using value_type = std::size_t;
  static constexpr std::size_t kCapacity = 64;

  constexpr SmallSet() = default;
  constexpr SmallSet(std::initializer_list<std::size_t> ids) {
    for (std::size_t id : ids) insert(id);
  }

  static constexpr SmallSet from_bits(std::uint64_t bits) {
    SmallSet s;
    s.bits_ = bits;
    return s;
  }
  /// The set {0, 1, ..., n-1}.
  static constexpr SmallSet range(std::size_t n) {
    check_id(n == 0 ? 0 : n - 1);
    return from_bits(n == kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  constexpr bool contains(std::size_t id) const {
    return id < kCapacity && ((bits_ >> id) & 1U) != 0;
  }
  constexpr void insert(std::size_t id) {
    check_id(id);
    bits_ |= std::uint64_t{1} << id;
  }
  constexpr void erase(std::size_t id) {
    if (id < kCapacity) bits_ &= ~(std::uint64_t{1} << id);
  }

  /// X + x
  constexpr SmallSet with(std::size_t id) const {
    SmallSet s = *this;
    s.insert(id);
    return s;
  }
  /// X - x
  constexpr SmallSet without(std::size_t id) const {
    SmallSet s = *this;
    s.erase(id);
    return s;
  }

  constexpr bool is_subset_of(SmallSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SmallSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr SmallSet& operator|=(SmallSet o) { bits_ |= o.bits_; return *this; }
  constexpr SmallSet& operator&=(SmallSet o) { bits_ &= o.bits_; return *this; }
  constexpr SmallSet& operator-=(SmallSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(SmallSet, SmallSet) = default;
  /// Orders by bitmask value (colexicographic order on the members).
  friend constexpr auto operator<=>(SmallSet a, SmallSet b) {
    return a.bits_ <=> b.bits_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const {
    return std::vector<std::size_t>(begin(), end());
  }

 private:
  static constexpr void check_id(std::size_t id) {
    if (id >= kCapacity) {
      throw std::out_of_range("SmallSet id " + std::to_string(id) +
                              " exceeds capacity 64");
    }
  }

  std::uint64_t bits_ = 0;
};

/// Calls fn(subset) for every subset of `universe`, in ascending bitmask
/// order, starting with the empty set. fn may return false to stop early.
template <class Set, class Fn>
void for_each_subset(Set universe, Fn&& fn) {
  const std::uint64_t u = universe.bits();
  std::uint64_t sub = 0;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(Set{})), bool>) {
      if (!fn(Set::from_bits(sub))) return;
    } else {
      fn(Set::from_bits(sub));
    }
    if (sub == u) return;
    sub = (sub - u) & u;
  }
}

}  // namespace mmc

#endif  // MMC_SMALL_SET_HPP_
