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

#include "hyperlab/ffield.hpp"

namespace hyperlab {

namespace {

// Candidate enumeration in irreducible_factor is capped at this many polynomials per degree.
constexpr std::uint64_t kTrialBudget = 50'000'000;

FieldPolynomial x_poly(const FieldPtr& f) { return FieldPolynomial(f, {0, 1}); }

FieldPolynomial mul_mod(const FieldPolynomial& a, const FieldPolynomial& b, const FieldPolynomial& m) {
  return (a * b).divmod(m).second;
}

FieldPolynomial pow_mod(FieldPolynomial base, std::uint64_t e, const FieldPolynomial& m) {
  FieldPolynomial result(base.field(), {1});
  base = base.divmod(m).second;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

FieldPolynomial gcd(FieldPolynomial a, FieldPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace

FieldPolynomial::FieldPolynomial(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error("polynomial without a field");
  for (FieldElem c : coeffs_) {
    if (!field_->contains(c)) throw Error("polynomial coefficient out of range for " + field_->label());
  }
  trim();
}

FieldPolynomial FieldPolynomial::from_integers(FieldPtr field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field->from_integer(v));
  return FieldPolynomial(std::move(field), std::move(c));
}

FieldPolynomial FieldPolynomial::monomial(FieldPtr field, FieldElem c, std::size_t power) {
  std::vector<FieldElem> coeffs(power + 1, 0);
  coeffs[power] = c;
  return FieldPolynomial(std::move(field), std::move(coeffs));
}

void FieldPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> FieldPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FieldPolynomial FieldPolynomial::monic() const {
  if (is_zero()) throw Error("the zero polynomial has no monic associate");
  const FieldElem li = field_->inv(lead());
  std::vector<FieldElem> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [&](FieldElem a) { return field_->mul(a, li); });
  return FieldPolynomial(field_, std::move(c));
}

FieldElem FieldPolynomial::eval_in(const FiniteField& ext, FieldElem x) const {
  if (!ext.extends(*field_)) throw Error("cannot evaluate a polynomial over " + field_->label() + " in " + ext.label());
  FieldElem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), coeffs_[i]);
  return acc;
}

FieldPolynomial FieldPolynomial::over(FieldPtr ext) const {
  if (!ext->extends(*field_)) throw Error(ext->label() + " does not extend " + field_->label());
  return FieldPolynomial(std::move(ext), coeffs_);
}

FieldPolynomial operator+(const FieldPolynomial& a, const FieldPolynomial& b) {
  const auto& f = *a.field_;
  std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return FieldPolynomial(a.field_, std::move(c));
}

FieldPolynomial operator-(const FieldPolynomial& a, const FieldPolynomial& b) {
  const auto& f = *a.field_;
  std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return FieldPolynomial(a.field_, std::move(c));
}

FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return FieldPolynomial(a.field_, {});
  const auto& f = *a.field_;
  std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return FieldPolynomial(a.field_, std::move(c));
}

std::pair<FieldPolynomial, FieldPolynomial> FieldPolynomial::divmod(const FieldPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  const auto& f = *field_;
  std::vector<FieldElem> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {FieldPolynomial(field_, {}), *this};
  std::vector<FieldElem> quot(rem.size() - dd, 0);
  const FieldElem li = f.inv(divisor.lead());
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const FieldElem factor = f.mul(rem[i], li);
    quot[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, divisor.coeffs_[j]));
  }
  return {FieldPolynomial(field_, std::move(quot)), FieldPolynomial(field_, std::move(rem))};
}

std::string FieldPolynomial::to_string() const {
  if (is_zero()) return "0";
  const auto& f = *field_;
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem c = coeffs_[i];
    if (c == 0) continue;
    std::string body = f.signed_name(c);
    bool negative = false;
    const bool compound = body.find_first_of("+-", 1) != std::string::npos;
    if (!compound && body.front() == '-') {
      negative = true;
      body.erase(0, 1);
    }
    if (compound) body = "(" + body + ")";
    if (i > 0 && body == "1") body.clear();
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    out += body;
    if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

nlohmann::ordered_json FieldPolynomial::record() const {
  auto arr = nlohmann::ordered_json::array();
  for (FieldElem c : coeffs_) arr.push_back(field_->name(c));
  return arr;
}

std::vector<FieldElem> field_roots(const FieldPolynomial& f) { return field_roots_in(f, *f.field()); }

std::vector<FieldElem> field_roots_in(const FieldPolynomial& f, const FiniteField& ext) {
  if (f.is_zero()) throw Error("every element is a root of the zero polynomial");
  std::vector<FieldElem> roots;
  for (FieldElem x = 0; x < ext.size(); ++x) {
    if (f.eval_in(ext, x) == 0) roots.push_back(x);
  }
  return roots;
}

std::optional<FieldPolynomial> smallest_factor(const FieldPolynomial& f) {
  const auto& field = f.field();
  const auto deg = f.degree();
  if (!deg || *deg < 2) return std::nullopt;
  const FieldPolynomial target = f.monic();
  const FieldPolynomial x = x_poly(field);
  const std::uint64_t q = field->size();
  // h = x^(q^d) mod f; gcd(f, h - x) is nontrivial iff f has a factor of degree dividing d.
  FieldPolynomial h = x;
  for (std::size_t d = 1; d <= *deg / 2; ++d) {
    h = pow_mod(h, q, target);
    const FieldPolynomial g = gcd(target, h - x);
    if (g.degree().value_or(0) == 0) continue;
    if (*g.degree() == d) return g;
    // Several degree-d factors: trial division in lexicographic order.
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < d; ++j) {
      count *= q;
      if (count > kTrialBudget) throw Error("trial division over " + field->label() + " exceeds the work bound");
    }
    std::vector<FieldElem> c(d + 1, 0);
    c[d] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
      FieldPolynomial cand(field, c);
      if (target.divisible_by(cand)) return cand;
      // odometer with the highest free coefficient moving fastest
      for (std::size_t j = d; j-- > 0;) {
        if (++c[j] < q) break;
        c[j] = 0;
      }
    }
    throw Error("internal: degree-" + std::to_string(d) + " factor detected but not found");
  }
  return std::nullopt;
}

bool is_irreducible(const FieldPolynomial& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) return false;
  return !smallest_factor(f).has_value();
}

FieldPolynomial irreducible_factor(const FieldPolynomial& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error("irreducible_factor needs a nonconstant polynomial");
  const auto roots = field_roots(f);
  if (!roots.empty()) {
    throw HasRootError("root " + f.field()->signed_name(roots.front()) + " found in " + f.field()->label(),
                       roots.front());
  }
  if (auto factor = smallest_factor(f)) return *factor;
  return f.monic();
}

}  // namespace hyperlab
