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


#ifndef HYPERLAB_PHASE_HPP
#define HYPERLAB_PHASE_HPP

/**
 * @file phase.hpp
 * @brief The phase hyperfield ℂ/ℝ_{>0} with exact rational angles, and membership-oracle hyperfields in general.
 *
 * A nonzero phase is an angle measured in turns, a rational in [0, 1). Multiplication adds angles, negation adds
 * 1/2. For x, y nonzero and not antipodal the hypersum x ⊞ y is the OPEN shorter arc between them: the phases of
 * a·x + b·y with a, b > 0 never reach either endpoint. The degenerate sums are x ⊞ x = {x} and
 * x ⊞ -x = {0, x, -x}.
 *
 * Sums of sets are kept as an ArcSet (the zero flag, isolated points, open arcs), closed under ⊞ with a point,
 * which makes set-level associativity checkable exactly.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hyperlab {

/// Infinite (or just large) hyperfield given by rules and a membership predicate instead of tables.
template <class E>
struct MembershipHyperfield {
  std::string label;
  E zero;
  E one;
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> neg;
  /// member(z, x, y) ⇔ z ∈ x ⊞ y
  std::function<bool(const E&, const E&, const E&)> member;
  /// `count` carrier elements from a deterministic generator seeded with `seed`.
  std::function<std::vector<E>(std::size_t count, std::uint64_t seed)> sample;
  std::function<std::string(const E&)> name;
};

using Turn = boost::rational<std::int64_t>;

class PhaseElement {
 public:
  /// The zero element.
  PhaseElement() = default;
  static PhaseElement zero() { return PhaseElement(); }
  /// Angle reduced into [0, 1).
  static PhaseElement at(Turn angle);

  bool is_zero() const { return zero_; }
  /// Angle in [0, 1); 0 for the zero element.
  const Turn& angle() const { return angle_; }

  PhaseElement operator*(const PhaseElement& o) const;
  PhaseElement operator-() const;
  bool operator==(const PhaseElement& o) const { return zero_ == o.zero_ && angle_ == o.angle_; }
  /// 0 first, then by angle.
  bool operator<(const PhaseElement& o) const;

  /// "0", "1", "i", "-1", "-i", or "e(3/8)" for 3/8 of a turn.
  std::string name() const;

 private:
  bool zero_ = true;
  Turn angle_{0};
};

/// Reduces an angle into [0, 1).
Turn reduce_turn(Turn t);

/// Finite union of the zero element, isolated angles and open arcs.
struct ArcSet {
  struct Arc {
    Turn start;   // in [0, 1)
    Turn length;  // in (0, 1); the arc is (start, start + length), counterclockwise, endpoints excluded
  };

  bool has_zero = false;
  std::vector<Turn> points;
  std::vector<Arc> arcs;

  bool contains(const PhaseElement& z) const;
  bool empty() const { return !has_zero && points.empty() && arcs.empty(); }
  void insert(const PhaseElement& z);
  ArcSet& operator|=(const ArcSet& o);
  /// Set equality, decided exactly by comparing membership at every breakpoint and between them.
  bool same_as(const ArcSet& o) const;
  std::string to_string() const;
};

/// z ∈ x ⊞ y in the phase hyperfield.
bool phase_member(const PhaseElement& z, const PhaseElement& x, const PhaseElement& y);
/// x ⊞ y as an ArcSet.
ArcSet phase_sum(const PhaseElement& x, const PhaseElement& y);
/// A ⊞ z as an ArcSet (union over the members of A).
ArcSet phase_sum(const ArcSet& a, const PhaseElement& z);

/// Random phase elements with denominators up to `max_denominator`; roughly one in 16 is zero.
std::vector<PhaseElement> sample_phases(std::size_t count, std::uint64_t seed, std::int64_t max_denominator = 24);

MembershipHyperfield<PhaseElement> phase_hyperfield();

}  // namespace hyperlab

#endif  // HYPERLAB_PHASE_HPP
