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


#ifndef HYPERLAB_QUOTIENT_HPP
#define HYPERLAB_QUOTIENT_HPP

/**
 * @file quotient.hpp
 * @brief Krasner's quotient F/G of a finite field by a multiplicative subgroup.
 *
 * x ~ y iff x = g·y for some g ∈ G. The classes are {0} and the cosets xG, with [x]⊙[y] = [xy] and
 * [z] ∈ [x]⊞[y] iff z' = x' + y' for some x' ∈ [x], y' ∈ [y], z' ∈ [z].
 *
 * Each class is named after a representative in signed style, "[i+1]", "[-i-3]". The representative is the
 * member with the lowest-degree, smallest-magnitude signed coefficients (positive preferred on ties), and classes
 * are ordered [0], [1], [-1], [2], ... then by the lower coefficients of the representative, which for
 * 𝔽₄₉/(𝔽₇^×)² gives [0], [1], [-1], [i], [-i], [i+1], [-i+1], ...
 */

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlab/ffield.hpp"
#include "hyperlab/hyperfield.hpp"

namespace hyperlab {

class QuotientStructure;
using QuotientPtr = std::shared_ptr<const QuotientStructure>;

class QuotientStructure {
 public:
  const FieldPtr& field() const { return field_; }
  const MultSubgroup& subgroup() const { return subgroup_; }
  const HyperfieldPtr& hyperfield() const { return hyperfield_; }
  /// "F49/sq"
  const std::string& label() const { return hyperfield_->label(); }

  std::size_t class_count() const { return reps_.size(); }
  /// Members of a class, listed as rep·g for g ∈ G in ascending code order of g.
  std::vector<FieldElem> members(Elem c) const;
  FieldElem representative(Elem c) const { return reps_.at(c); }
  Elem class_of(FieldElem x) const { return class_of_.at(x); }
  /// Class of a field element given by name ("2i+2", "-3").
  Elem class_of(std::string_view field_element) const { return class_of(field_->parse(field_element)); }

  /// One line per class: "[i+1] = {i+1,2i+2,-3i-3}".
  std::string class_listing() const;
  /// {field, subgroup, classes, hyperfield}
  nlohmann::ordered_json record() const;

 private:
  friend QuotientPtr build_quotient(const FieldPtr& field, const MultSubgroup& subgroup);
  QuotientStructure(FieldPtr field, MultSubgroup subgroup) : field_(std::move(field)), subgroup_(std::move(subgroup)) {}

  FieldPtr field_;
  MultSubgroup subgroup_;
  std::vector<FieldElem> reps_;
  std::vector<Elem> class_of_;
  HyperfieldPtr hyperfield_;
};

/// Builds F/G. Throws if G does not live in F or if there would be more than 64 classes.
QuotientPtr build_quotient(const FieldPtr& field, const MultSubgroup& subgroup);

/// True iff z ∈ [x_1] + ... + [x_n] as an elementwise sum of field subsets.
bool setsum_membership_check(const QuotientStructure& q, FieldElem z, std::span<const FieldElem> xs);

}  // namespace hyperlab

#endif  // HYPERLAB_QUOTIENT_HPP
