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


#include <algorithm>
#include <set>

#include "hyperlab/ffield.hpp"

namespace hyperlab {

MultSubgroup::MultSubgroup(FieldPtr field, std::vector<FieldElem> elements, std::vector<FieldElem> generators,
                           std::string label)
    : field_(std::move(field)), elements_(std::move(elements)), generators_(std::move(generators)),
      label_(std::move(label)) {}

MultSubgroup MultSubgroup::generated_by(FieldPtr field, std::vector<FieldElem> generators, std::string label) {
  std::set<FieldElem> seen{1};
  std::vector<FieldElem> frontier{1};
  for (FieldElem g : generators) {
    if (g == 0 || !field->contains(g)) throw Error("subgroup generator must be a nonzero field element");
  }
  while (!frontier.empty()) {
    std::vector<FieldElem> next;
    for (FieldElem x : frontier) {
      for (FieldElem g : generators) {
        const FieldElem y = field->mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return MultSubgroup(std::move(field), {seen.begin(), seen.end()}, std::move(generators),
                      label.empty() ? "G" : std::move(label));
}

MultSubgroup MultSubgroup::from_elements(FieldPtr field, std::vector<FieldElem> elements, std::string label) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto has = [&](FieldElem x) { return std::binary_search(elements.begin(), elements.end(), x); };
  if (!has(1)) throw Error("subgroup must contain 1");
  for (FieldElem x : elements) {
    if (x == 0 || !field->contains(x)) throw Error("subgroup elements must be nonzero field elements");
    if (!has(field->inv(x))) throw Error("subgroup is not closed under inverses: " + field->signed_name(x));
    for (FieldElem y : elements) {
      if (!has(field->mul(x, y))) {
        throw Error("subgroup is not closed under multiplication: " + field->signed_name(x) + "·" +
                    field->signed_name(y));
      }
    }
  }
  // Greedy generating set: add any element outside the span so far.
  std::vector<FieldElem> gens;
  std::set<FieldElem> span{1};
  for (FieldElem x : elements) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = {1};
    std::vector<FieldElem> frontier{1};
    while (!frontier.empty()) {
      std::vector<FieldElem> next;
      for (FieldElem a : frontier) {
        for (FieldElem g : gens) {
          const FieldElem b = field->mul(a, g);
          if (span.insert(b).second) next.push_back(b);
        }
      }
      frontier = std::move(next);
    }
  }
  return MultSubgroup(std::move(field), std::move(elements), std::move(gens), label.empty() ? "G" : std::move(label));
}

bool MultSubgroup::contains(FieldElem x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

MultSubgroup MultSubgroup::embedded_in(FieldPtr ext) const {
  if (!ext->extends(*field_)) throw Error(ext->label() + " does not extend " + field_->label());
  return MultSubgroup(std::move(ext), elements_, generators_, label_);
}

MultSubgroup squares_subgroup(const FieldPtr& field) {
  // 𝔽^× is cyclic, so the squares are generated by the square of a primitive element.
  const FieldElem prim = field->primitive();
  return MultSubgroup::generated_by(field, {field->mul(prim, prim)}, "sq");
}

}  // namespace hyperlab
