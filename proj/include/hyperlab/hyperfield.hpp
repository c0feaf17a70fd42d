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


#ifndef HYPERLAB_HYPERFIELD_HPP
#define HYPERLAB_HYPERFIELD_HPP

/**
 * @file hyperfield.hpp
 * @brief Finite hyperfields in table form.
 *
 * A hyperfield (K, ⊞, ⊙, 0, 1) has a single-valued multiplication making K^× an abelian group and a multivalued
 * addition ⊞ : K × K → nonempty subsets of K. Here the carrier is an ordered list of at most 64 named elements;
 * elements are referred to by index and subsets are ElemSet bitmasks, so every table lookup is O(1).
 *
 * Sums extend to sets by unions over pairs, A ⊞ B = ⋃ a ⊞ b, and to sequences by a left fold.
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperlab/elem_set.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/ffield.hpp"

namespace hyperlab {

class FiniteHyperfield {
 public:
  /// `mul` and `add` are dense row-major n×n tables. Throws if sizes, indices or empty sums are malformed;
  /// algebraic laws are not checked here (see verify_axioms).
  FiniteHyperfield(std::vector<std::string> names, Elem zero, Elem one, std::vector<Elem> neg, std::vector<Elem> mul,
                   std::vector<ElemSet> add, std::string label = {});

  std::size_t size() const { return names_.size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& label() const { return label_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }
  /// Looks a name up exactly, then with surrounding brackets added or removed. Unicode minus is accepted.
  std::optional<Elem> find(std::string_view name) const;
  /// As find(), but throws ParseError naming the hyperfield.
  Elem element(std::string_view name) const;

  Elem mul(Elem a, Elem b) const { return mul_[a * size() + b]; }
  ElemSet add(Elem a, Elem b) const { return add_[a * size() + b]; }
  Elem neg(Elem a) const { return neg_[a]; }

  ElemSet carrier() const { return ElemSet::first_n(size()); }
  ElemSet units() const { return carrier() - ElemSet::single(zero_); }
  /// x ⊙ S
  ElemSet scale(Elem x, ElemSet s) const;
  /// Multiplicative inverse of a unit (linear scan of the table row).
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::size_t n) const;
  /// Order of a unit in K^× (0 if the powers never return to 1).
  std::size_t order(Elem a) const;

  bool same_tables(const FiniteHyperfield& other) const {
    return zero_ == other.zero_ && one_ == other.one_ && neg_ == other.neg_ && mul_ == other.mul_ &&
           add_ == other.add_;
  }
  bool operator==(const FiniteHyperfield& other) const { return names_ == other.names_ && same_tables(other); }

  /// Copy of this hyperfield with one addition cell replaced (both (a,b) and, if `symmetric`, (b,a)).
  FiniteHyperfield with_sum(Elem a, Elem b, ElemSet value, bool symmetric = true) const;

 private:
  std::vector<std::string> names_;
  Elem zero_;
  Elem one_;
  std::vector<Elem> neg_;
  std::vector<Elem> mul_;
  std::vector<ElemSet> add_;
  std::string label_;
};

using HyperfieldPtr = std::shared_ptr<const FiniteHyperfield>;

/// A ⊞ B. Throws on an empty operand.
ElemSet hypersum_sets(const FiniteHyperfield& h, ElemSet a, ElemSet b);
/// x_1 ⊞ ... ⊞ x_n as a left fold. Throws on an empty sequence.
ElemSet nary_hypersum(const FiniteHyperfield& h, std::span<const Elem> xs);

/// Renders a set as "{[0], [i], [-i]}" in carrier order.
std::string format_set(const FiniteHyperfield& h, ElemSet s);

enum class Axiom {
  kMulGroup,           // (K^×, ⊙, 1) is an abelian group
  kZeroAbsorbing,      // 0 ⊙ x = x ⊙ 0 = 0
  kDistributiveLeft,   // x ⊙ (y ⊞ z) = (x ⊙ y) ⊞ (x ⊙ z)
  kDistributiveRight,  // (x ⊞ y) ⊙ z = (x ⊙ z) ⊞ (y ⊙ z)
  kAddAssociative,     // (x ⊞ y) ⊞ z = x ⊞ (y ⊞ z) as sets
  kAddCommutative,     // x ⊞ y = y ⊞ x
  kZeroIdentity,       // 0 ⊞ x = x ⊞ 0 = {x}
  kUniqueInverse,      // exactly one y with 0 ∈ x ⊞ y, and it is -x
  kReversibility,      // x ∈ y ⊞ z  ⇔  -y ∈ -x ⊞ z
};

inline constexpr Axiom kAllAxioms[] = {Axiom::kMulGroup,         Axiom::kZeroAbsorbing,  Axiom::kDistributiveLeft,
                                       Axiom::kDistributiveRight, Axiom::kAddAssociative, Axiom::kAddCommutative,
                                       Axiom::kZeroIdentity,      Axiom::kUniqueInverse,  Axiom::kReversibility};

std::string_view axiom_name(Axiom a);

struct ClauseResult {
  Axiom axiom;
  bool pass = true;
  /// First failing tuple in lexicographic order; empty on pass.
  std::vector<Elem> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<ClauseResult> clauses;

  bool pass() const;
  const ClauseResult& clause(Axiom a) const;
  std::string to_string(const FiniteHyperfield& h) const;
  nlohmann::ordered_json record(const FiniteHyperfield& h) const;
};

/// Exhaustive check of every hyperfield axiom over all pairs and triples. Work is split over
/// HYPERLAB_THREADS workers; the report does not depend on the split.
AxiomReport verify_axioms(const FiniteHyperfield& h);

/// "krasner", "signs" or "weak_signs".
HyperfieldPtr builtin(std::string_view name);
HyperfieldPtr krasner();
/// A field viewed as a hyperfield with singleton sums; |F| <= 64.
HyperfieldPtr field_hyperfield(const FiniteField& field);
/// Massouros' non-quotient construction on a cyclic group of order n (2 <= n <= 16) plus an absorbing 0:
/// x ⊞ y = {x, y} for distinct units, x ⊞ x = K \ {x}. This is an external-reference instance.
HyperfieldPtr massouros_instance(unsigned n);

/// Exchange record {elements, zero, one, neg, mul, add} with stable key order.
nlohmann::ordered_json to_exchange(const FiniteHyperfield& h);
FiniteHyperfield from_exchange(const nlohmann::json& rec);
/// Addition and multiplication Cayley tables as aligned text.
std::string cayley_tables(const FiniteHyperfield& h);

}  // namespace hyperlab

#endif  // HYPERLAB_HYPERFIELD_HPP
