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


#include "hyperlab/phase.hpp"

#include <algorithm>
#include <random>

namespace hyperlab {

namespace {

const Turn kHalf(1, 2);

std::string turn_text(const Turn& t) {
  return std::to_string(t.numerator()) + (t.denominator() == 1 ? "" : "/" + std::to_string(t.denominator()));
}

bool arc_contains(const ArcSet::Arc& arc, const Turn& t) {
  const Turn d = reduce_turn(t - arc.start);
  return d > 0 && d < arc.length;
}

// Union over θ in the arc of θ ⊞ 0, for the arc already rotated so that the fixed summand sits at angle 0.
ArcSet arc_plus_origin(const ArcSet::Arc& arc) {
  ArcSet out;
  const Turn lo = arc.start;
  const Turn hi = arc.start + arc.length;  // unrolled, lo < hi < 2
  // θ ∈ (0, 1/2) contributes (0, θ); the union is (0, sup θ).
  std::optional<Turn> sup;
  for (const Turn shift : {Turn(0), Turn(1)}) {
    const Turn a = std::max(lo, shift);
    const Turn b = std::min(hi, shift + kHalf);
    if (a < b && (!sup || b - shift > *sup)) sup = b - shift;
  }
  if (sup) out.arcs.push_back({Turn(0), *sup});
  // θ ∈ (1/2, 1) contributes (θ, 1); the union is (inf θ, 1).
  std::optional<Turn> inf;
  for (const Turn shift : {Turn(0), Turn(1)}) {
    const Turn a = std::max(lo, shift + kHalf);
    const Turn b = std::min(hi, shift + 1);
    if (a < b && (!inf || a - shift < *inf)) inf = a - shift;
  }
  if (inf) out.arcs.push_back({*inf, 1 - *inf});
  if (arc_contains(arc, Turn(0))) out.points.push_back(Turn(0));
  if (arc_contains(arc, kHalf)) {
    out.has_zero = true;
    out.points.push_back(Turn(0));
    out.points.push_back(kHalf);
  }
  return out;
}

ArcSet rotate(const ArcSet& a, const Turn& by) {
  ArcSet out;
  out.has_zero = a.has_zero;
  for (const auto& p : a.points) out.points.push_back(reduce_turn(p + by));
  for (const auto& arc : a.arcs) out.arcs.push_back({reduce_turn(arc.start + by), arc.length});
  return out;
}

}  // namespace

Turn reduce_turn(Turn t) {
  const std::int64_t whole = t.numerator() / t.denominator();
  t -= whole;
  if (t < 0) t += 1;
  return t;
}

PhaseElement PhaseElement::at(Turn angle) {
  PhaseElement e;
  e.zero_ = false;
  e.angle_ = reduce_turn(angle);
  return e;
}

PhaseElement PhaseElement::operator*(const PhaseElement& o) const {
  if (zero_ || o.zero_) return zero();
  return at(angle_ + o.angle_);
}

PhaseElement PhaseElement::operator-() const { return zero_ ? zero() : at(angle_ + kHalf); }

bool PhaseElement::operator<(const PhaseElement& o) const {
  if (zero_ != o.zero_) return zero_;
  return angle_ < o.angle_;
}

std::string PhaseElement::name() const {
  if (zero_) return "0";
  if (angle_ == Turn(0)) return "1";
  if (angle_ == Turn(1, 4)) return "i";
  if (angle_ == kHalf) return "-1";
  if (angle_ == Turn(3, 4)) return "-i";
  return "e(" + turn_text(angle_) + ")";
}

bool ArcSet::contains(const PhaseElement& z) const {
  if (z.is_zero()) return has_zero;
  if (std::find(points.begin(), points.end(), z.angle()) != points.end()) return true;
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return arc_contains(a, z.angle()); });
}

void ArcSet::insert(const PhaseElement& z) {
  if (z.is_zero()) {
    has_zero = true;
  } else if (std::find(points.begin(), points.end(), z.angle()) == points.end()) {
    points.push_back(z.angle());
  }
}

ArcSet& ArcSet::operator|=(const ArcSet& o) {
  has_zero = has_zero || o.has_zero;
  for (const auto& p : o.points) insert(PhaseElement::at(p));
  arcs.insert(arcs.end(), o.arcs.begin(), o.arcs.end());
  return *this;
}

bool ArcSet::same_as(const ArcSet& o) const {
  if (has_zero != o.has_zero) return false;
  std::vector<Turn> cuts;
  for (const ArcSet* s : {this, &o}) {
    cuts.insert(cuts.end(), s->points.begin(), s->points.end());
    for (const auto& a : s->arcs) {
      cuts.push_back(a.start);
      cuts.push_back(reduce_turn(a.start + a.length));
    }
  }
  if (cuts.empty()) cuts.push_back(Turn(0));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const Turn next = j + 1 < cuts.size() ? cuts[j + 1] : cuts.front() + 1;
    for (const Turn t : {cuts[j], (cuts[j] + next) / 2}) {
      const auto z = PhaseElement::at(t);
      if (contains(z) != o.contains(z)) return false;
    }
  }
  return true;
}

std::string ArcSet::to_string() const {
  std::vector<std::string> parts;
  if (has_zero) parts.push_back("0");
  auto pts = points;
  std::sort(pts.begin(), pts.end());
  for (const auto& p : pts) parts.push_back(PhaseElement::at(p).name());
  for (const auto& a : arcs) {
    parts.push_back("arc(" + turn_text(a.start) + ", " + turn_text(reduce_turn(a.start + a.length)) + ")");
  }
  std::string out = "{";
  for (std::size_t j = 0; j < parts.size(); ++j) out += (j ? ", " : "") + parts[j];
  return out + "}";
}

ArcSet phase_sum(const PhaseElement& x, const PhaseElement& y) {
  ArcSet out;
  if (x.is_zero()) {
    out.insert(y);
  } else if (y.is_zero() || x == y) {
    out.insert(x);
  } else if (y == -x) {
    out.has_zero = true;
    out.insert(x);
    out.insert(y);
  } else {
    const Turn d = reduce_turn(y.angle() - x.angle());
    if (d < kHalf) {
      out.arcs.push_back({x.angle(), d});
    } else {
      out.arcs.push_back({y.angle(), 1 - d});
    }
  }
  return out;
}

ArcSet phase_sum(const ArcSet& a, const PhaseElement& z) {
  ArcSet out;
  if (a.has_zero) out.insert(z);
  for (const auto& p : a.points) out |= phase_sum(PhaseElement::at(p), z);
  if (a.arcs.empty()) return out;
  if (z.is_zero()) {
    out.arcs.insert(out.arcs.end(), a.arcs.begin(), a.arcs.end());
    return out;
  }
  const Turn back = -z.angle();
  for (const auto& arc : a.arcs) {
    const ArcSet::Arc rotated{reduce_turn(arc.start + back), arc.length};
    out |= rotate(arc_plus_origin(rotated), z.angle());
  }
  return out;
}

bool phase_member(const PhaseElement& z, const PhaseElement& x, const PhaseElement& y) {
  return phase_sum(x, y).contains(z);
}

std::vector<PhaseElement> sample_phases(std::size_t count, std::uint64_t seed, std::int64_t max_denominator) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, max_denominator);
  std::uniform_int_distribution<int> zero_pick(0, 15);
  std::vector<PhaseElement> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (zero_pick(rng) == 0) {
      out.push_back(PhaseElement::zero());
      continue;
    }
    const std::int64_t d = den(rng);
    out.push_back(PhaseElement::at(Turn(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng), d)));
  }
  return out;
}

MembershipHyperfield<PhaseElement> phase_hyperfield() {
  MembershipHyperfield<PhaseElement> h;
  h.label = "P";
  h.zero = PhaseElement::zero();
  h.one = PhaseElement::at(Turn(0));
  h.mul = [](const PhaseElement& a, const PhaseElement& b) { return a * b; };
  h.neg = [](const PhaseElement& a) { return -a; };
  h.member = phase_member;
  h.sample = [](std::size_t count, std::uint64_t seed) { return sample_phases(count, seed); };
  h.name = [](const PhaseElement& a) { return a.name(); };
  return h;
}

}  // namespace hyperlab
