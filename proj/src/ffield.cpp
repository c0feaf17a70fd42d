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


#include "hyperlab/ffield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hyperlab {

namespace {

std::uint32_t smallest_divisor(std::uint32_t n) {
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

FieldPtr FiniteField::prime(std::uint32_t p) {
  if (p < 2) throw Error(std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw Error("characteristic " + std::to_string(p) + " exceeds the bound " + std::to_string(kMaxPrime));
  }
  const std::uint32_t d = smallest_divisor(p);
  if (d != p) {
    throw Error(std::to_string(p) + " is not prime (" + std::to_string(d) + "·" + std::to_string(p / d) + ")");
  }
  return FieldPtr(new FiniteField(p, {}, {}));
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string generator_name)
    : p_(p), k_(modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1)), q_(1),
      modulus_(std::move(modulus)), generator_name_(std::move(generator_name)) {
  std::uint64_t q = 1;
  for (unsigned j = 0; j < k_; ++j) {
    q *= p_;
    if (q > kMaxFieldSize) {
      throw Error("field of size " + std::to_string(p_) + "^" + std::to_string(k_) + " exceeds the bound " +
                  std::to_string(kMaxFieldSize));
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  build_tables();
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElem a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned j = 0; j < k_; ++j) {
    c[j] = a % p_;
    a /= p_;
  }
  return c;
}

FieldElem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw Error("too many coefficients for " + label());
  FieldElem a = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) a = a * p_ + coeffs[j] % p_;
  return a;
}

FieldElem FiniteField::from_integer(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<FieldElem>(((v % p) + p) % p);
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
  if (k_ == 1) return (a + b) % p_;
  FieldElem out = 0;
  FieldElem scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FieldElem FiniteField::neg(FieldElem a) const {
  if (k_ == 1) return (p_ - a) % p_;
  FieldElem out = 0;
  FieldElem scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = q_ - 1;
  return exp_[(log_[a] + log_[b]) % n];
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw Error("zero has no multiplicative inverse");
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (n % order)) % order)];
}

FieldElem FiniteField::slow_mul(FieldElem a, FieldElem b) const {
  if (k_ == 1) return static_cast<FieldElem>((static_cast<std::uint64_t>(a) * b) % p_);
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  // Reduce with the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      prod[d - k_ + j] = (prod[d - k_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
    }
  }
  std::vector<std::uint32_t> low(k_);
  for (unsigned j = 0; j < k_; ++j) low[j] = static_cast<std::uint32_t>(prod[j]);
  return from_coefficients(low);
}

void FiniteField::build_tables() {
  const std::uint32_t n = q_ - 1;
  auto slow_pow = [this](FieldElem a, std::uint64_t e) {
    FieldElem result = 1;
    while (e > 0) {
      if (e & 1U) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return result;
  };
  FieldElem prim = 1;
  if (n > 1) {
    const auto factors = prime_factors(n);
    for (FieldElem cand = 2; cand < q_; ++cand) {
      const bool ok = std::all_of(factors.begin(), factors.end(),
                                  [&](std::uint64_t r) { return slow_pow(cand, n / r) != 1; });
      if (ok) {
        prim = cand;
        break;
      }
    }
  }
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  FieldElem cur = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    exp_[j] = cur;
    log_[cur] = j;
    cur = slow_mul(cur, prim);
  }
  if (cur != 1) throw Error("modulus does not define a field (no primitive element found)");
}

std::int64_t FiniteField::signed_coefficient(std::uint32_t c) const {
  return c <= p_ / 2 ? static_cast<std::int64_t>(c) : static_cast<std::int64_t>(c) - p_;
}

std::string FiniteField::render(FieldElem a, bool signed_coeffs) const {
  if (a == 0) return "0";
  const auto c = coefficients(a);
  std::string out;
  for (unsigned j = k_; j-- > 0;) {
    if (c[j] == 0) continue;
    const std::int64_t v = signed_coeffs ? signed_coefficient(c[j]) : static_cast<std::int64_t>(c[j]);
    const std::int64_t mag = v < 0 ? -v : v;
    if (v < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (j == 0 || mag != 1) out += std::to_string(mag);
    if (j > 0) {
      out += generator_name_;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

std::string FiniteField::name(FieldElem a) const { return render(a, false); }

std::string FiniteField::signed_name(FieldElem a) const { return render(a, true); }

FieldElem FiniteField::parse(std::string_view text) const {
  const std::string s = normalize_minus(text);
  if (s.empty()) throw ParseError(0, "field element", "empty element name");
  std::size_t pos = 0;
  FieldElem value = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError(pos, "'+' or '-'", "unexpected character in element '" + s + "'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool have_digits = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = (coeff * 10 + (s[pos] - '0')) % static_cast<std::int64_t>(p_);
        ++pos;
      }
      have_digits = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::uint64_t power = 0;
    if (!generator_name_.empty() && s.compare(pos, generator_name_.size(), generator_name_) == 0) {
      pos += generator_name_.size();
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
          throw ParseError(pos, "exponent", "missing exponent in element '" + s + "'");
        }
        power = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          power = power * 10 + static_cast<std::uint64_t>(s[pos] - '0');
          ++pos;
        }
      }
    } else if (!have_digits) {
      throw ParseError(pos, "integer or generator '" + generator_name_ + "'",
                       "cannot read element '" + s + "' of " + label());
    }
    FieldElem term = from_integer(negative ? -coeff : coeff);
    if (power > 0) term = slow_mul(term, pow(generator(), power));
    value = add(value, term);
  }
  return value;
}

bool FiniteField::extends(const FiniteField& sub) const {
  return *this == sub || (sub.is_prime_field() && sub.p_ == p_);
}

nlohmann::ordered_json FiniteField::record() const {
  nlohmann::ordered_json rec;
  rec["p"] = p_;
  rec["k"] = k_;
  rec["modulus"] = modulus_;
  rec["generator"] = generator_name_;
  return rec;
}

FieldPtr FiniteField::from_record(const nlohmann::json& rec) {
  try {
    const auto p = rec.at("p").get<std::uint32_t>();
    const auto k = rec.value("k", 1U);
    auto base = prime(p);
    if (k == 1) return base;
    const auto modulus = rec.at("modulus").get<std::vector<std::uint32_t>>();
    if (modulus.size() != k + 1) throw Error("field record: modulus degree does not match k");
    std::vector<FieldElem> coeffs(modulus.begin(), modulus.end());
    return extend_by_irreducible(base, FieldPolynomial(base, coeffs), rec.value("generator", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed field record: ") + e.what());
  }
}

FieldPtr extend_by_irreducible_impl(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string name) {
  return FieldPtr(new FiniteField(p, std::move(modulus), std::move(name)));
}

FieldPtr extend_by_irreducible(const FieldPtr& base, const FieldPolynomial& g, std::string generator_name) {
  if (!base->is_prime_field()) throw Error("extension base must be a prime field");
  if (!(*g.field() == *base)) throw Error("modulus is not a polynomial over " + base->label());
  const auto deg = g.degree();
  if (!deg || *deg < 2) throw Error("modulus must have degree at least 2");
  if (!g.is_monic()) throw Error("modulus " + g.to_string() + " is not monic");
  if (auto factor = smallest_factor(g)) {
    throw ReducibleError("modulus " + g.to_string() + " is reducible over " + base->label() + ": factor " +
                             factor->to_string(),
                         *factor);
  }
  if (generator_name.empty()) {
    const bool x2_plus_1 = g.coeffs() == std::vector<FieldElem>{1, 0, 1};
    generator_name = x2_plus_1 ? "i" : "a";
  }
  for (char ch : generator_name) {
    if (!std::isalpha(static_cast<unsigned char>(ch)) || ch == 'T' || ch == 'x') {
      throw Error("generator name must be letters other than 'T' and 'x': " + generator_name);
    }
  }
  std::vector<std::uint32_t> modulus(g.coeffs().begin(), g.coeffs().end());
  return extend_by_irreducible_impl(base->characteristic(), std::move(modulus), std::move(generator_name));
}

std::uint64_t element_order(const FiniteField& field, FieldElem x) {
  if (x == 0) throw Error("element_order: zero has no multiplicative order");
  if (!field.contains(x)) throw Error("element_order: element out of range");
  const std::uint64_t n = field.size() - 1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && field.pow(x, d) == 1) return d;
  }
  return n;
}

}  // namespace hyperlab
