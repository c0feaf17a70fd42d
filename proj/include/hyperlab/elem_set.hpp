/*
   Copyright 2026 The hyperlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef HYPERLAB_ELEM_SET_HPP
#define HYPERLAB_ELEM_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hyperlab {

/// Index of an element in the ordered carrier of a finite hyperfield.
using Elem = unsigned;

inline constexpr std::size_t kMaxCarrier = 64;

/// Subset of a carrier with at most 64 elements, stored as a bitmask.
class ElemSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = const Elem*;
    using reference = Elem;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Elem operator*() const { return static_cast<Elem>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<Elem> elems) {
    for (Elem e : elems) insert(e);
  }

  static constexpr ElemSet single(Elem e) { return ElemSet(std::uint64_t{1} << e); }
  /// {0, 1, ..., n-1}
  static constexpr ElemSet first_n(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Elem e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest index in the set; undefined on the empty set.
  constexpr Elem front() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Elem> to_vector() const { return {begin(), end()}; }

  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElemSet, ElemSet) = default;
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace hyperlab

#endif  // HYPERLAB_ELEM_SET_HPP
