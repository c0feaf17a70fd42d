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


#ifndef HYPERLAB_EXTEND_HPP
#define HYPERLAB_EXTEND_HPP

/**
 * @file extend.hpp
 * @brief Root adjunction for quotient hyperfields, minimality certificates and the non-uniqueness experiment.
 *
 * For K = F/G and a rootless k ∈ K[T]: lift k to f ∈ F[x] (rootless over F), adjoin a root of an irreducible
 * factor of f to get F', and take L = F'/G. Then K ↪ L is strong and the class of the adjoined root is a root of
 * k in L.
 *
 * Minimality is certified one-sidedly. A weak subhyperfield of L with carrier S ∪ {0} must have
 * ∅ ≠ x ⊞_K y ⊆ (x ⊞_L y) ∩ (S ∪ {0}); a pair x, y ∈ S for which that intersection is empty rules the carrier out.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlab/ffield.hpp"
#include "hyperlab/hpoly.hpp"
#include "hyperlab/hyperfield.hpp"
#include "hyperlab/morph.hpp"
#include "hyperlab/quotient.hpp"

namespace hyperlab {

struct RootExtension {
  QuotientPtr base;
  HyperPolynomial k;
  /// lift of k over the base field, rootless there
  FieldPolynomial lifted;
  /// irreducible factor of `lifted` adjoined to get the extension field
  FieldPolynomial factor;
  FieldPtr extension_field;
  QuotientPtr extension;
  /// K ↪ L on classes, strong by construction and re-checked
  HyperfieldMap embedding;
  /// k with coefficients carried into L
  HyperPolynomial k_in_extension;
  /// class of the adjoined generator
  Elem root;

  /// "L = F49/sq, root [i]"
  std::string summary() const;
  std::string to_string() const;
  nlohmann::ordered_json record() const;
};

/// Builds the extension and verifies all of its invariants. Throws Error naming a root if k already has one, and
/// an internal Error if the lift has a root in the base field.
RootExtension build_root_extension(const QuotientPtr& q, const HyperPolynomial& k);

/// Subgroups of L^× containing `required` minus 0, sorted by order then carrier bits.
std::vector<ElemSet> subgroup_candidates(const FiniteHyperfield& l, ElemSet required);

/// First pair x, y ∈ s with (x ⊞ y) ∩ (s ∪ {0}) = ∅. Pairs are ranked by the larger then the smaller rank of
/// their members, where `priority` lists the first ranks and the rest of s follows in carrier order; without a
/// priority this is plain lexicographic order. The pair is returned in carrier order. Throws if s is not closed
/// under negation.
std::optional<std::pair<Elem, Elem>> weak_closure_obstruction(const FiniteHyperfield& l, ElemSet s,
                                                              std::span<const Elem> priority = {});

enum class Verdict { kMinimalCertified, kInconclusive, kNotMinimal };
std::string_view verdict_name(Verdict v);

struct SearchOutcome {
  enum class Result { kFound, kNone, kBudget } result;
  std::uint64_t leaves = 0;
  /// the hyperaddition found, as sums 1 ⊞ s for s ∈ S (kFound only)
  std::vector<std::pair<Elem, ElemSet>> one_plus;
};

struct CandidateResult {
  ElemSet subgroup;  // units only
  bool proper;
  std::optional<std::pair<Elem, Elem>> obstruction;
  ElemSet obstruction_sum;
  std::optional<SearchOutcome> search;

  bool ruled_out() const {
    return obstruction.has_value() || (search && search->result == SearchOutcome::Result::kNone);
  }
};

struct CertifyOptions {
  /// look for a hyperaddition on unobstructed proper candidates
  bool exhaustive_search = false;
  /// only candidates with at most this many units are searched
  std::size_t max_search_units = 8;
  std::uint64_t budget = 2'000'000;
};

struct MinimalityCertificate {
  HyperfieldPtr extension;
  HyperfieldMap base_embedding;
  Elem root;
  ElemSet required;
  std::vector<CandidateResult> candidates;
  Verdict verdict;
  std::string soundness_note;

  std::string to_string() const;
  nlohmann::ordered_json record() const;
};

/// Throws if `base` has no weak embedding into the extension.
MinimalityCertificate certify_minimal(const RootExtension& x, const HyperfieldPtr& base, const CertifyOptions& options = {});

/// Bounded search for a hyperaddition on S ∪ {0} making it a weak subhyperfield of L that contains the image of
/// `base_map`.
SearchOutcome search_hyperaddition(const FiniteHyperfield& l, ElemSet s, const HyperfieldMap& base_map,
                                   std::uint64_t budget);

struct ExperimentReport {
  std::vector<std::string> lines;
  nlohmann::ordered_json record;
  bool success = false;

  std::string text() const;
};

/// End-to-end reproduction of the two non-isomorphic minimal extensions of 𝕎 containing a root of 1 ⊞ T².
ExperimentReport nonuniqueness_experiment();

}  // namespace hyperlab

#endif  // HYPERLAB_EXTEND_HPP
