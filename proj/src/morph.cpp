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


#include "hyperlab/morph.hpp"

#include <algorithm>
#include <functional>

namespace hyperlab {

namespace {

constexpr std::size_t kBacktrackLimit = 20;

bool units_commute(const FiniteHyperfield& h) {
  for (Elem x : h.units()) {
    for (Elem y : h.units()) {
      if (h.mul(x, y) != h.mul(y, x)) return false;
    }
  }
  return true;
}

ElemSet span_of(const FiniteHyperfield& h, const std::vector<Elem>& gens) {
  ElemSet seen = ElemSet::single(h.one());
  std::vector<Elem> frontier{h.one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem g : gens) {
        const Elem y = h.mul(x, g);
        if (!seen.contains(y)) {
          seen.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<Elem> unit_generators(const FiniteHyperfield& h) {
  std::vector<Elem> gens;
  ElemSet span = ElemSet::single(h.one());
  // Highest order first keeps the generating set small (one element for cyclic groups).
  std::vector<Elem> units = h.units().to_vector();
  std::stable_sort(units.begin(), units.end(), [&](Elem a, Elem b) { return h.order(a) > h.order(b); });
  for (Elem x : units) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = span_of(h, gens);
  }
  return gens;
}

// Multiplicative extension of gens[j] ↦ imgs[j]; nothing if the assignment is inconsistent.
std::optional<std::vector<Elem>> extend_multiplicatively(const FiniteHyperfield& k, const FiniteHyperfield& l,
                                                         const std::vector<Elem>& gens,
                                                         const std::vector<Elem>& imgs) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> phi(k.size(), kUnset);
  phi[k.zero()] = l.zero();
  phi[k.one()] = l.one();
  std::vector<Elem> frontier{k.one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem y = k.mul(x, gens[j]);
        const Elem fy = l.mul(phi[x], imgs[j]);
        if (phi[y] == kUnset) {
          phi[y] = fy;
          next.push_back(y);
        } else if (phi[y] != fy) {
          return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  if (std::find(phi.begin(), phi.end(), kUnset) != phi.end()) return std::nullopt;
  return phi;
}

bool is_injective(const std::vector<Elem>& images) {
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool at_least(MapKind got, MapKind wanted) { return static_cast<int>(got) >= static_cast<int>(wanted); }

// Unit-by-unit assignment with multiplicativity pruning, for small K whose unit group is not abelian.
void backtrack(const FiniteHyperfield& k, const FiniteHyperfield& l, std::vector<Elem>& phi, ElemSet used,
               std::size_t next, const std::function<void(const std::vector<Elem>&)>& emit) {
  if (next == k.size()) {
    emit(phi);
    return;
  }
  if (next == k.zero() || next == k.one()) {
    backtrack(k, l, phi, used, next + 1, emit);
    return;
  }
  for (Elem cand : l.units() - used) {
    phi[next] = cand;
    bool ok = true;
    for (Elem y = 0; y <= next && ok; ++y) {
      const Elem xy = k.mul(static_cast<Elem>(next), y);
      const Elem yx = k.mul(y, static_cast<Elem>(next));
      if (xy <= next || xy == k.one()) ok = phi[xy] == l.mul(phi[next], phi[y]);
      if (ok && (yx <= next || yx == k.one())) ok = phi[yx] == l.mul(phi[y], phi[next]);
    }
    if (ok) {
      ElemSet u = used;
      u.insert(cand);
      backtrack(k, l, phi, u, next + 1, emit);
    }
  }
}

}  // namespace

std::string_view kind_name(MapKind k) {
  switch (k) {
    case MapKind::kNotHom: return "not-hom";
    case MapKind::kWeak: return "weak";
    case MapKind::kStrong: return "strong";
  }
  return "?";
}

MapKind classify_map(const FiniteHyperfield& k, const FiniteHyperfield& l, std::span<const Elem> images) {
  if (images.size() != k.size()) throw Error("map is not total on " + k.label());
  for (Elem e : images) {
    if (e >= l.size()) throw Error("map image out of range of " + l.label());
  }
  if (images[k.zero()] != l.zero() || images[k.one()] != l.one()) return MapKind::kNotHom;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      if (images[k.mul(x, y)] != l.mul(images[x], images[y])) return MapKind::kNotHom;
    }
  }
  bool strong = true;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      ElemSet img;
      for (Elem z : k.add(x, y)) img.insert(images[z]);
      const ElemSet target = l.add(images[x], images[y]);
      if (!img.subset_of(target)) return MapKind::kNotHom;
      strong = strong && img == target;
    }
  }
  return strong ? MapKind::kStrong : MapKind::kWeak;
}

HyperfieldMap::HyperfieldMap(HyperfieldPtr source, HyperfieldPtr target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  kind_ = classify_map(*source_, *target_, images_);
  injective_ = is_injective(images_);
}

ElemSet HyperfieldMap::image(ElemSet s) const {
  ElemSet out;
  for (Elem e : s) out.insert(images_.at(e));
  return out;
}

nlohmann::ordered_json HyperfieldMap::record() const {
  nlohmann::ordered_json rec;
  rec["source"] = source_->label();
  rec["target"] = target_->label();
  nlohmann::ordered_json pairs = nlohmann::ordered_json::object();
  for (Elem x = 0; x < source_->size(); ++x) pairs[source_->name(x)] = target_->name(images_[x]);
  rec["pairs"] = pairs;
  rec["kind"] = kind_name(kind_);
  return rec;
}

std::string HyperfieldMap::to_string() const {
  std::string out;
  for (Elem x = 0; x < source_->size(); ++x) {
    out += (x ? ", " : "") + source_->name(x) + " -> " + target_->name(images_[x]);
  }
  return out + " (" + std::string(kind_name(kind_)) + ")";
}

HyperfieldMap compose(const HyperfieldMap& f, const HyperfieldMap& g) {
  if (!f.target()->same_tables(*g.source())) throw Error("compose: target of the first map is not the source of the second");
  std::vector<Elem> images;
  for (Elem x = 0; x < f.source()->size(); ++x) images.push_back(g(f(x)));
  return HyperfieldMap(f.source(), g.target(), std::move(images));
}

HyperfieldMap collapse_to_krasner(const HyperfieldPtr& h) {
  const HyperfieldPtr kr = krasner();
  std::vector<Elem> images(h->size(), kr->one());
  images[h->zero()] = kr->zero();
  return HyperfieldMap(h, kr, std::move(images));
}

std::vector<HyperfieldMap> find_embeddings(const HyperfieldPtr& k, const HyperfieldPtr& l, MapKind kind) {
  if (kind == MapKind::kNotHom) throw Error("find_embeddings: requested kind must be weak or strong");
  std::vector<std::vector<Elem>> found;
  if (k->size() > l->size()) return {};
  const auto keep = [&](const std::vector<Elem>& phi) {
    if (is_injective(phi) && at_least(classify_map(*k, *l, phi), kind)) found.push_back(phi);
  };
  if (units_commute(*k)) {
    const auto gens = unit_generators(*k);
    std::vector<std::vector<Elem>> options;
    for (Elem g : gens) {
      std::vector<Elem> same_order;
      for (Elem u : l->units()) {
        if (l->order(u) == k->order(g)) same_order.push_back(u);
      }
      if (same_order.empty()) return {};
      options.push_back(std::move(same_order));
    }
    std::vector<std::size_t> idx(gens.size(), 0);
    while (true) {
      std::vector<Elem> imgs;
      for (std::size_t j = 0; j < gens.size(); ++j) imgs.push_back(options[j][idx[j]]);
      if (auto phi = extend_multiplicatively(*k, *l, gens, imgs)) keep(*phi);
      std::size_t j = 0;
      while (j < gens.size() && ++idx[j] == options[j].size()) idx[j++] = 0;
      if (j == gens.size()) break;
    }
  } else {
    if (k->size() > kBacktrackLimit) {
      throw Error("find_embeddings: " + k->label() + " has a non-abelian unit group and more than 20 elements");
    }
    std::vector<Elem> phi(k->size(), l->zero());
    phi[k->one()] = l->one();
    backtrack(*k, *l, phi, ElemSet::single(l->one()), 0, keep);
  }
  std::sort(found.begin(), found.end());
  std::vector<HyperfieldMap> out;
  for (auto& phi : found) out.emplace_back(k, l, std::move(phi));
  return out;
}

std::optional<HyperfieldMap> is_isomorphic(const HyperfieldPtr& k, const HyperfieldPtr& l) {
  if (k->size() != l->size()) return std::nullopt;
  for (auto& m : find_embeddings(k, l, MapKind::kStrong)) {
    if (m.bijective()) return m;
  }
  return std::nullopt;
}

std::string LagrangeResult::to_string() const {
  const std::string a = std::to_string(source_units);
  const std::string b = std::to_string(target_units);
  return obstructed ? "obstructed: " + a + " does not divide " + b : "inconclusive: " + a + " divides " + b;
}

LagrangeResult lagrange_obstruction(const FiniteHyperfield& k, const FiniteHyperfield& l) {
  const std::size_t a = k.size() - 1;
  const std::size_t b = l.size() - 1;
  return {b % a != 0, a, b};
}

}  // namespace hyperlab
