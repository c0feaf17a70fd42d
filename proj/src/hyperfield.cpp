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


#include "hyperlab/hyperfield.hpp"

#include <algorithm>

namespace hyperlab {

namespace {

std::string ascii_minus(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (s[i] != ' ') {
      out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace

FiniteHyperfield::FiniteHyperfield(std::vector<std::string> names, Elem zero, Elem one, std::vector<Elem> neg,
                                   std::vector<Elem> mul, std::vector<ElemSet> add, std::string label)
    : names_(std::move(names)), zero_(zero), one_(one), neg_(std::move(neg)), mul_(std::move(mul)),
      add_(std::move(add)), label_(std::move(label)) {
  const std::size_t n = names_.size();
  if (n < 2) throw Error("a hyperfield needs at least the elements 0 and 1");
  if (n > kMaxCarrier) throw Error("carrier of " + std::to_string(n) + " elements exceeds the table bound of 64");
  if (zero_ >= n || one_ >= n || zero_ == one_) throw Error("invalid zero/one indices");
  if (neg_.size() != n || mul_.size() != n * n || add_.size() != n * n) throw Error("table sizes do not match carrier");
  const ElemSet all = carrier();
  for (Elem e : neg_) {
    if (e >= n) throw Error("negation table entry out of range");
  }
  for (Elem e : mul_) {
    if (e >= n) throw Error("multiplication table entry out of range");
  }
  for (std::size_t i = 0; i < add_.size(); ++i) {
    if (add_[i].empty()) {
      throw Error("empty hypersum " + names_[i / n] + " ⊞ " + names_[i % n] + " (sums must be nonempty)");
    }
    if (!add_[i].subset_of(all)) throw Error("addition table entry out of range");
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate element names");
}

std::optional<Elem> FiniteHyperfield::find(std::string_view raw) const {
  const std::string name = ascii_minus(raw);
  auto lookup = [this](const std::string& s) -> std::optional<Elem> {
    for (Elem e = 0; e < names_.size(); ++e) {
      if (names_[e] == s) return e;
    }
    return std::nullopt;
  };
  if (auto e = lookup(name)) return e;
  if (name.size() >= 2 && name.front() == '[' && name.back() == ']') {
    if (auto e = lookup(name.substr(1, name.size() - 2))) return e;
  }
  return lookup("[" + name + "]");
}

Elem FiniteHyperfield::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw ParseError(0, "element name of " + (label_.empty() ? std::string("the hyperfield") : label_),
                   "unknown element '" + std::string(name) + "'");
}

ElemSet FiniteHyperfield::scale(Elem x, ElemSet s) const {
  ElemSet out;
  for (Elem e : s) out.insert(mul(x, e));
  return out;
}

Elem FiniteHyperfield::inv(Elem a) const {
  if (a == zero_) throw Error("0 has no multiplicative inverse");
  for (Elem b = 0; b < size(); ++b) {
    if (mul(a, b) == one_) return b;
  }
  throw Error("element " + name(a) + " has no multiplicative inverse");
}

Elem FiniteHyperfield::pow(Elem a, std::size_t n) const {
  Elem r = one_;
  for (std::size_t j = 0; j < n; ++j) r = mul(r, a);
  return r;
}

std::size_t FiniteHyperfield::order(Elem a) const {
  if (a == zero_) return 0;
  Elem cur = a;
  for (std::size_t n = 1; n <= size(); ++n) {
    if (cur == one_) return n;
    cur = mul(cur, a);
  }
  return 0;
}

FiniteHyperfield FiniteHyperfield::with_sum(Elem a, Elem b, ElemSet value, bool symmetric) const {
  auto add = add_;
  add[a * size() + b] = value;
  if (symmetric) add[b * size() + a] = value;
  return FiniteHyperfield(names_, zero_, one_, neg_, mul_, std::move(add), label_);
}

ElemSet hypersum_sets(const FiniteHyperfield& h, ElemSet a, ElemSet b) {
  if (a.empty() || b.empty()) throw Error("hypersums are defined for nonempty sets only");
  ElemSet out;
  for (Elem x : a) {
    for (Elem y : b) out |= h.add(x, y);
  }
  return out;
}

ElemSet nary_hypersum(const FiniteHyperfield& h, std::span<const Elem> xs) {
  if (xs.empty()) throw Error("hypersum of an empty sequence");
  ElemSet acc = ElemSet::single(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc = hypersum_sets(h, acc, ElemSet::single(xs[i]));
  return acc;
}

std::string format_set(const FiniteHyperfield& h, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s) {
    if (!first) out += ", ";
    out += h.name(e);
    first = false;
  }
  return out + "}";
}

namespace {

// Tables for the three-element sign hyperfields; index 1 is 1 and index 2 is -1.
HyperfieldPtr sign_like(ElemSet one_plus_one, ElemSet minus_plus_minus, std::string label) {
  const ElemSet all{0, 1, 2};
  std::vector<ElemSet> add = {
      ElemSet{0}, ElemSet{1},       ElemSet{2},  //
      ElemSet{1}, one_plus_one,     all,         //
      ElemSet{2}, all,              minus_plus_minus,
  };
  std::vector<Elem> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return std::make_shared<const FiniteHyperfield>(std::vector<std::string>{"0", "1", "-1"}, 0, 1,
                                                  std::vector<Elem>{0, 2, 1}, std::move(mul), std::move(add),
                                                  std::move(label));
}

}  // namespace

HyperfieldPtr krasner() {
  static const HyperfieldPtr k = std::make_shared<const FiniteHyperfield>(
      std::vector<std::string>{"0", "1"}, 0, 1, std::vector<Elem>{0, 1}, std::vector<Elem>{0, 0, 0, 1},
      std::vector<ElemSet>{ElemSet{0}, ElemSet{1}, ElemSet{1}, ElemSet{0, 1}}, "K");
  return k;
}

HyperfieldPtr builtin(std::string_view name) {
  if (name == "krasner") return krasner();
  if (name == "signs") return sign_like(ElemSet{1}, ElemSet{2}, "S");
  if (name == "weak_signs") return sign_like(ElemSet{1, 2}, ElemSet{1, 2}, "W");
  throw Error("unknown builtin hyperfield '" + std::string(name) + "' (expected krasner, signs, weak_signs)");
}

HyperfieldPtr field_hyperfield(const FiniteField& field) {
  const std::size_t n = field.size();
  if (n > kMaxCarrier) throw Error("field " + field.label() + " is too large for table form (max 64 elements)");
  std::vector<std::string> names(n);
  std::vector<Elem> neg(n);
  std::vector<Elem> mul(n * n);
  std::vector<ElemSet> add(n * n);
  for (FieldElem a = 0; a < n; ++a) {
    names[a] = field.name(a);
    neg[a] = field.neg(a);
    for (FieldElem b = 0; b < n; ++b) {
      mul[a * n + b] = field.mul(a, b);
      add[a * n + b] = ElemSet::single(field.add(a, b));
    }
  }
  return std::make_shared<const FiniteHyperfield>(std::move(names), 0, 1, std::move(neg), std::move(mul),
                                                  std::move(add), field.label());
}

HyperfieldPtr massouros_instance(unsigned n) {
  if (n < 2 || n > 16) throw Error("massouros_instance: group order must be in 2..16, got " + std::to_string(n));
  const std::size_t size = n + 1;
  // index 0 is the absorbing zero, index j+1 is g^j
  std::vector<std::string> names{"0", "1"};
  for (unsigned j = 1; j < n; ++j) names.push_back(j == 1 ? "g" : "g^" + std::to_string(j));
  std::vector<Elem> neg(size);
  std::vector<Elem> mul(size * size, 0);
  std::vector<ElemSet> add(size * size);
  const ElemSet all = ElemSet::first_n(size);
  for (Elem a = 0; a < size; ++a) {
    neg[a] = a;
    for (Elem b = 0; b < size; ++b) {
      if (a != 0 && b != 0) mul[a * size + b] = 1 + ((a - 1) + (b - 1)) % n;
      if (a == 0) {
        add[a * size + b] = ElemSet::single(b);
      } else if (b == 0) {
        add[a * size + b] = ElemSet::single(a);
      } else if (a == b) {
        add[a * size + b] = all - ElemSet::single(a);
      } else {
        add[a * size + b] = ElemSet{a, b};
      }
    }
  }
  return std::make_shared<const FiniteHyperfield>(std::move(names), 0, 1, std::move(neg), std::move(mul),
                                                  std::move(add), "M" + std::to_string(n));
}

}  // namespace hyperlab
