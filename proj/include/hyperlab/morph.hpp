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


#ifndef HYPERLAB_MORPH_HPP
#define HYPERLAB_MORPH_HPP

/**
 * @file morph.hpp
 * @brief Weak and strong hyperfield homomorphisms, embedding search and isomorphism tests.
 *
 * φ : K → L with φ(0) = 0, φ(1) = 1 and φ(xy) = φ(x)φ(y) is weak when φ(x ⊞ y) ⊆ φ(x) ⊞ φ(y) for all x, y and
 * strong when the two sets are equal. Injective weak (strong) homomorphisms are weak (strong) extensions.
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperlab/hyperfield.hpp"
#include "hyperlab/phase.hpp"

namespace hyperlab {

enum class MapKind { kNotHom, kWeak, kStrong };

/// "not-hom", "weak", "strong"
std::string_view kind_name(MapKind k);

/// Classifies a total map given by the image of each carrier index of K.
MapKind classify_map(const FiniteHyperfield& k, const FiniteHyperfield& l, std::span<const Elem> images);

/// Classification against an oracle target. Sums in L cannot be listed, so "strong" means: for every pair x, y
/// and every w in the (finite) image of K, w ∈ φ(x) ⊞ φ(y) iff w ∈ φ(x ⊞ y).
template <class E>
MapKind classify_map(const FiniteHyperfield& k, const MembershipHyperfield<E>& l, const std::vector<E>& images) {
  if (images.size() != k.size()) throw Error("map is not total on " + k.label());
  if (!(images[k.zero()] == l.zero) || !(images[k.one()] == l.one)) return MapKind::kNotHom;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      if (!(images[k.mul(x, y)] == l.mul(images[x], images[y]))) return MapKind::kNotHom;
    }
  }
  bool strong = true;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      const ElemSet s = k.add(x, y);
      for (Elem z : s) {
        if (!l.member(images[z], images[x], images[y])) return MapKind::kNotHom;
      }
      for (Elem w = 0; w < k.size() && strong; ++w) {
        if (!l.member(images[w], images[x], images[y])) continue;
        bool hit = false;
        for (Elem z : s) hit = hit || images[z] == images[w];
        strong = hit;
      }
    }
  }
  return strong ? MapKind::kStrong : MapKind::kWeak;
}

class HyperfieldMap {
 public:
  /// Throws if `images` is not a total map from source into target.
  HyperfieldMap(HyperfieldPtr source, HyperfieldPtr target, std::vector<Elem> images);

  const HyperfieldPtr& source() const { return source_; }
  const HyperfieldPtr& target() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }
  Elem operator()(Elem x) const { return images_.at(x); }
  ElemSet image(ElemSet s) const;

  MapKind kind() const { return kind_; }
  bool injective() const { return injective_; }
  bool bijective() const { return injective_ && source_->size() == target_->size(); }

  /// {source, target, pairs: {name: name}, kind}
  nlohmann::ordered_json record() const;
  /// "[1] -> [1], [-1] -> [-1], ... (weak)"
  std::string to_string() const;

 private:
  HyperfieldPtr source_;
  HyperfieldPtr target_;
  std::vector<Elem> images_;
  MapKind kind_;
  bool injective_;
};

/// g ∘ f
HyperfieldMap compose(const HyperfieldMap& f, const HyperfieldMap& g);

/// 0 ↦ 0 and every unit ↦ 1 in 𝕂.
HyperfieldMap collapse_to_krasner(const HyperfieldPtr& h);

/// All injective maps K → L classifying at least as `kind` (kWeak includes strong maps), sorted by image
/// sequence. Generators of K^× are sent to elements of the same order and the map is extended multiplicatively.
std::vector<HyperfieldMap> find_embeddings(const HyperfieldPtr& k, const HyperfieldPtr& l, MapKind kind);

/// A strong bijection K → L, if one exists.
std::optional<HyperfieldMap> is_isomorphic(const HyperfieldPtr& k, const HyperfieldPtr& l);

struct LagrangeResult {
  bool obstructed;
  std::size_t source_units;
  std::size_t target_units;
  /// "obstructed: 16 does not divide 24" or "inconclusive: 2 divides 16"
  std::string to_string() const;
};

/// Obstructed when |K^×| does not divide |L^×|, so no injective homomorphism K → L exists.
LagrangeResult lagrange_obstruction(const FiniteHyperfield& k, const FiniteHyperfield& l);

}  // namespace hyperlab

#endif  // HYPERLAB_MORPH_HPP
