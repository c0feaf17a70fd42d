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


#include "hyperlab/quotient.hpp"

#include <algorithm>
#include <tuple>

namespace hyperlab {

namespace {

using Key = std::vector<std::int64_t>;

std::vector<std::int64_t> signed_coeffs(const FiniteField& f, FieldElem x) {
  std::vector<std::int64_t> out;
  for (auto c : f.coefficients(x)) out.push_back(f.signed_coefficient(c));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Representative choice: low degree, small |lead|, positive lead, then small lower coefficients.
Key rep_key(const FiniteField& f, FieldElem x) {
  const auto c = signed_coeffs(f, x);
  Key k{static_cast<std::int64_t>(c.size())};
  for (std::size_t j = c.size(); j-- > 0;) {
    k.push_back(c[j] < 0 ? -c[j] : c[j]);
    k.push_back(c[j] < 0 ? 1 : 0);
  }
  return k;
}

// Listing order: degree, then lower coefficients (sign first, then magnitude), the lead last.
Key order_key(const FiniteField& f, FieldElem x) {
  const auto c = signed_coeffs(f, x);
  Key k{static_cast<std::int64_t>(c.size())};
  if (c.empty()) return k;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    k.push_back(c[j] < 0 ? 1 : 0);
    k.push_back(c[j] < 0 ? -c[j] : c[j]);
  }
  k.push_back(c.back() < 0 ? -c.back() : c.back());
  k.push_back(c.back() < 0 ? 1 : 0);
  return k;
}

}  // namespace

std::vector<FieldElem> QuotientStructure::members(Elem c) const {
  const FieldElem r = reps_.at(c);
  if (r == 0) return {0};
  std::vector<FieldElem> out;
  for (FieldElem g : subgroup_.elements()) out.push_back(field_->mul(r, g));
  return out;
}

std::string QuotientStructure::class_listing() const {
  std::string out;
  for (Elem c = 0; c < class_count(); ++c) {
    out += hyperfield_->name(c) + " = {";
    bool first = true;
    for (FieldElem x : members(c)) {
      out += (first ? "" : ",") + field_->signed_name(x);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

nlohmann::ordered_json QuotientStructure::record() const {
  nlohmann::ordered_json rec;
  rec["field"] = field_->record();
  nlohmann::ordered_json sub;
  sub["label"] = subgroup_.label();
  auto gens = nlohmann::ordered_json::array();
  for (FieldElem g : subgroup_.generators()) gens.push_back(field_->name(g));
  sub["generators"] = gens;
  sub["order"] = subgroup_.order();
  rec["subgroup"] = sub;
  auto classes = nlohmann::ordered_json::array();
  for (Elem c = 0; c < class_count(); ++c) {
    nlohmann::ordered_json item;
    item["name"] = hyperfield_->name(c);
    auto m = nlohmann::ordered_json::array();
    for (FieldElem x : members(c)) m.push_back(field_->name(x));
    item["members"] = m;
    classes.push_back(item);
  }
  rec["classes"] = classes;
  rec["hyperfield"] = to_exchange(*hyperfield_);
  return rec;
}

QuotientPtr build_quotient(const FieldPtr& field, const MultSubgroup& subgroup) {
  if (!field) throw Error("build_quotient: no field");
  if (!(*subgroup.field() == *field)) {
    throw Error("build_quotient: subgroup lives in " + subgroup.field()->label() + ", not " + field->label());
  }
  const std::size_t units = field->size() - 1;
  if (units % subgroup.order() != 0) throw Error("build_quotient: subgroup order does not divide |F^x|");
  const std::size_t n = 1 + units / subgroup.order();
  if (n > kMaxCarrier) {
    throw Error("build_quotient: " + field->label() + "/" + subgroup.label() + " would have " + std::to_string(n) +
                " classes (max 64)");
  }
  const FiniteField& f = *field;
  const auto& g = subgroup.elements();

  // Cosets with their representatives, in code order of first appearance.
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> raw_class(f.size(), kUnset);
  std::vector<FieldElem> raw_reps;
  raw_class[0] = 0;
  raw_reps.push_back(0);
  for (FieldElem x = 1; x < f.size(); ++x) {
    if (raw_class[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(raw_reps.size());
    FieldElem best = x;
    Key best_key = rep_key(f, x);
    for (FieldElem s : g) {
      const FieldElem y = f.mul(x, s);
      raw_class[y] = id;
      Key k = rep_key(f, y);
      if (k < best_key) {
        best_key = std::move(k);
        best = y;
      }
    }
    raw_reps.push_back(best);
  }
  if (raw_reps.size() != n) throw Error("build_quotient: subgroup is not closed (coset sizes differ)");

  std::vector<Elem> order(n);
  for (Elem c = 0; c < n; ++c) order[c] = c;
  std::sort(order.begin() + 1, order.end(), [&](Elem a, Elem b) {
    return order_key(f, raw_reps[a]) < order_key(f, raw_reps[b]);
  });
  std::vector<Elem> renumber(n);
  for (Elem c = 0; c < n; ++c) renumber[order[c]] = c;

  std::shared_ptr<QuotientStructure> q(new QuotientStructure(field, subgroup));
  auto& qs = *q;
  qs.reps_.resize(n);
  for (Elem c = 0; c < n; ++c) qs.reps_[renumber[c]] = raw_reps[c];
  qs.class_of_.resize(f.size());
  for (FieldElem x = 0; x < f.size(); ++x) qs.class_of_[x] = renumber[raw_class[x]];

  std::vector<std::string> names(n);
  std::vector<Elem> neg(n);
  std::vector<Elem> mul(n * n);
  std::vector<ElemSet> add(n * n);
  for (Elem a = 0; a < n; ++a) {
    const FieldElem ra = qs.reps_[a];
    names[a] = "[" + f.signed_name(ra) + "]";
    neg[a] = qs.class_of_[f.neg(ra)];
    for (Elem b = 0; b < n; ++b) {
      const FieldElem rb = qs.reps_[b];
      mul[a * n + b] = qs.class_of_[f.mul(ra, rb)];
      // [a] ⊞ [b] = {[ra + rb·s] : s ∈ G}, after scaling out the coefficient of ra.
      ElemSet sum;
      if (rb == 0) {
        sum.insert(a);
      } else {
        for (FieldElem s : g) sum.insert(qs.class_of_[f.add(ra, f.mul(rb, s))]);
      }
      add[a * n + b] = sum;
    }
  }
  qs.hyperfield_ = std::make_shared<const FiniteHyperfield>(std::move(names), 0, qs.class_of_[1], std::move(neg),
                                                            std::move(mul), std::move(add),
                                                            field->label() + "/" + subgroup.label());
  return q;
}

bool setsum_membership_check(const QuotientStructure& q, FieldElem z, std::span<const FieldElem> xs) {
  if (xs.empty()) throw Error("setsum_membership_check: empty sequence");
  const FiniteField& f = *q.field();
  std::vector<char> acc(f.size(), 0);
  for (FieldElem m : q.members(q.class_of(xs.front()))) acc[m] = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const auto cls = q.members(q.class_of(xs[i]));
    std::vector<char> next(f.size(), 0);
    for (FieldElem s = 0; s < f.size(); ++s) {
      if (!acc[s]) continue;
      for (FieldElem m : cls) next[f.add(s, m)] = 1;
    }
    acc = std::move(next);
  }
  return acc.at(z) != 0;
}

}  // namespace hyperlab
