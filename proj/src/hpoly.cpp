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


#include "hyperlab/hpoly.hpp"

#include <algorithm>

namespace hyperlab {

HyperPolynomial::HyperPolynomial(HyperfieldPtr h, std::vector<Elem> coeffs) : h_(std::move(h)), coeffs_(std::move(coeffs)) {
  if (!h_) throw Error("polynomial without a hyperfield");
  for (Elem c : coeffs_) {
    if (c >= h_->size()) throw Error("polynomial coefficient out of range");
  }
  while (!coeffs_.empty() && coeffs_.back() == h_->zero()) coeffs_.pop_back();
}

std::optional<std::size_t> HyperPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::string HyperPolynomial::to_string() const {
  if (is_zero()) return h_->name(h_->zero());
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == h_->zero()) continue;
    const std::string& name = h_->name(coeffs_[j]);
    const bool bare = name.front() == '[' || name.find_first_of("+^T", 1) == std::string::npos;
    std::string term = bare ? name : "[" + name + "]";
    if (j > 0) {
      if (name == "-1") {
        term = "-";
      } else if (coeffs_[j] == h_->one()) {
        term.clear();
      }
      term += j == 1 ? "T" : "T^" + std::to_string(j);
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

std::vector<std::string> HyperPolynomial::record() const {
  std::vector<std::string> out;
  for (Elem c : coeffs_) out.push_back(h_->name(c));
  return out;
}

ElemSet eval(const HyperPolynomial& k, Elem xi) {
  const FiniteHyperfield& h = *k.hyperfield();
  if (xi >= h.size()) throw Error("evaluation point out of range");
  std::vector<Elem> terms;
  Elem power = h.one();
  for (std::size_t j = 0; j < k.coeffs().size(); ++j) {
    if (k.coeffs()[j] != h.zero()) terms.push_back(h.mul(k.coeffs()[j], power));
    power = h.mul(power, xi);
  }
  if (terms.empty()) return ElemSet::single(h.zero());
  return nary_hypersum(h, terms);
}

ElemSet roots(const HyperPolynomial& k) {
  const FiniteHyperfield& h = *k.hyperfield();
  ElemSet out;
  for (Elem xi = 0; xi < h.size(); ++xi) {
    if (eval(k, xi).contains(h.zero())) out.insert(xi);
  }
  return out;
}

HyperPolynomial induce(const FieldPolynomial& f, const QuotientStructure& q) {
  if (!(*f.field() == *q.field())) {
    throw Error("induce: polynomial over " + f.field()->label() + " but the quotient is of " + q.field()->label());
  }
  std::vector<Elem> c;
  for (FieldElem a : f.coeffs()) c.push_back(q.class_of(a));
  return HyperPolynomial(q.hyperfield(), std::move(c));
}

FieldPolynomial lift(const HyperPolynomial& k, const QuotientStructure& q) {
  if (!k.hyperfield()->same_tables(*q.hyperfield())) throw Error("lift: polynomial is not over " + q.label());
  std::vector<FieldElem> c;
  for (Elem a : k.coeffs()) c.push_back(q.representative(a));
  return FieldPolynomial(q.field(), std::move(c));
}

PolySet mul_multivalued(const HyperPolynomial& p, const HyperPolynomial& q, std::size_t limit) {
  if (!p.hyperfield()->same_tables(*q.hyperfield())) throw Error("mul_multivalued: polynomials over different hyperfields");
  const auto& hp = p.hyperfield();
  const FiniteHyperfield& h = *hp;
  if (p.is_zero() || q.is_zero()) return {HyperPolynomial(hp, {})};
  const std::size_t n = p.coeffs().size() + q.coeffs().size() - 1;
  std::vector<std::vector<Elem>> choices(n);
  std::size_t total = 1;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Elem> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (m >= i && m - i < q.coeffs().size()) terms.push_back(h.mul(p.coeffs()[i], q.coeffs()[m - i]));
    }
    choices[m] = nary_hypersum(h, terms).to_vector();
    total *= choices[m].size();
    if (total > limit) throw Error("mul_multivalued: more than " + std::to_string(limit) + " coefficient choices");
  }
  PolySet out;
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Elem> c(n);
    for (std::size_t m = 0; m < n; ++m) c[m] = choices[m][idx[m]];
    out.emplace_back(hp, std::move(c));
    for (std::size_t m = 0; m < n; ++m) {
      if (++idx[m] < choices[m].size()) break;
      idx[m] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HyperPolynomial& a, const HyperPolynomial& b) { return a.to_string() < b.to_string(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool lemma22_check(const FieldPolynomial& f, FieldElem gamma, const QuotientStructure& q) {
  const FieldElem alpha = f(gamma);
  return eval(induce(f, q), q.class_of(gamma)).contains(q.class_of(alpha));
}

}  // namespace hyperlab
