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


#ifndef HYPERLAB_FFIELD_HPP
#define HYPERLAB_FFIELD_HPP

/**
 * @file ffield.hpp
 * @brief Exact arithmetic in 𝔽_p and 𝔽_{p^k}, polynomials over them, and multiplicative subgroups.
 *
 * An element of 𝔽_{p^k} = 𝔽_p[x]/(g) is encoded as the integer c_0 + c_1·p + ... + c_{k-1}·p^{k-1}, where
 * c_0 + c_1·x + ... is its reduced residue. With this encoding the prime subfield is exactly the codes 0..p-1, so
 * embedding 𝔽_p into any extension is the identity on codes.
 *
 * Multiplication goes through discrete log/exp tables built from a primitive element, which limits fields to
 * at most 2^20 elements.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperlab/error.hpp"

namespace hyperlab {

/// Element of a FiniteField, in the packed base-p coefficient encoding.
using FieldElem = std::uint32_t;

inline constexpr std::uint32_t kMaxPrime = 1000;
inline constexpr std::uint32_t kMaxFieldSize = 1U << 20;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  /// 𝔽_p. Throws Error naming a divisor when p is not prime, or the bound when p > 1000.
  static FieldPtr prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  /// Monic modulus, constant term first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const std::string& generator_name() const { return generator_name_; }
  /// Class of x modulo the modulus. Only meaningful when degree() > 1.
  FieldElem generator() const { return k_ > 1 ? p_ : 0; }
  /// "F7", "F49", ...
  std::string label() const { return "F" + std::to_string(q_); }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t n) const;
  /// A fixed primitive element (generator of 𝔽^×).
  FieldElem primitive() const { return exp_.empty() ? 1 : exp_[1 % exp_.size()]; }

  std::vector<std::uint32_t> coefficients(FieldElem a) const;
  FieldElem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  FieldElem from_integer(std::int64_t v) const;
  bool contains(FieldElem a) const { return a < q_; }

  /// Representative of a coefficient in -(p-1)/2 .. p/2.
  std::int64_t signed_coefficient(std::uint32_t c) const;
  /// Canonical name: decimal for prime fields, "6i+6" style with coefficients in 0..p-1 otherwise.
  std::string name(FieldElem a) const;
  /// Display name with signed coefficients, e.g. "-3i-3" or "-1".
  std::string signed_name(FieldElem a) const;
  /// Accepts canonical and signed names ("2i+2", "-3i-3", "i", "-1", "2*i").
  FieldElem parse(std::string_view text) const;

  /// True when this field contains `sub` through the code-preserving embedding.
  bool extends(const FiniteField& sub) const;

  nlohmann::ordered_json record() const;
  /// Rebuilds a field from record(); the modulus is re-checked for irreducibility.
  static FieldPtr from_record(const nlohmann::json& rec);

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  friend FieldPtr extend_by_irreducible_impl(std::uint32_t, std::vector<std::uint32_t>, std::string);
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string generator_name);
  FieldElem slow_mul(FieldElem a, FieldElem b) const;
  void build_tables();
  std::string render(FieldElem a, bool signed_coeffs) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::string generator_name_;
  std::vector<FieldElem> exp_;      // exp_[j] = prim^j, j in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

/// Polynomial over a FiniteField, constant term first, with trailing zeros trimmed.
class FieldPolynomial {
 public:
  FieldPolynomial(FieldPtr field, std::vector<FieldElem> coeffs);
  /// Convenience: integer coefficients reduced mod p.
  static FieldPolynomial from_integers(FieldPtr field, std::initializer_list<std::int64_t> coeffs);
  static FieldPolynomial monomial(FieldPtr field, FieldElem c, std::size_t power);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  FieldElem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  FieldPolynomial monic() const;

  /// Horner evaluation at an element of the polynomial's own field.
  FieldElem operator()(FieldElem x) const { return eval_in(*field_, x); }
  /// Evaluation at an element of an extension of the polynomial's field.
  FieldElem eval_in(const FiniteField& ext, FieldElem x) const;
  /// Same coefficients viewed over an extension field.
  FieldPolynomial over(FieldPtr ext) const;

  friend FieldPolynomial operator+(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator-(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b);
  /// Quotient and remainder; throws on division by zero.
  std::pair<FieldPolynomial, FieldPolynomial> divmod(const FieldPolynomial& divisor) const;
  bool divisible_by(const FieldPolynomial& divisor) const { return divmod(divisor).second.is_zero(); }

  /// "x^2+1", "x-3", "(i+1)x+2"
  std::string to_string() const;
  /// Coefficient list with field names, constant term first.
  nlohmann::ordered_json record() const;

  bool operator==(const FieldPolynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
};

/// Raised when a polynomial expected to be irreducible has a nontrivial factor.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& what, FieldPolynomial factor) : Error(what), factor_(std::move(factor)) {}
  const FieldPolynomial& factor() const { return factor_; }

 private:
  FieldPolynomial factor_;
};

/// Raised when a polynomial expected to be rootless has a root.
class HasRootError : public Error {
 public:
  HasRootError(const std::string& what, FieldElem root) : Error(what), root_(root) {}
  FieldElem root() const { return root_; }

 private:
  FieldElem root_;
};

/// 𝔽_p[x]/(g). The base must be a prime field and g monic, of degree >= 2 and irreducible; a reducible g raises
/// ReducibleError with a factor of minimal degree. The generator is named "i" for x^2+1 unless a name is given.
FieldPtr extend_by_irreducible(const FieldPtr& base, const FieldPolynomial& g, std::string generator_name = {});

/// Exhaustive root scan in the polynomial's own field, ascending by code.
std::vector<FieldElem> field_roots(const FieldPolynomial& f);
/// Exhaustive root scan in an extension of the polynomial's field.
std::vector<FieldElem> field_roots_in(const FieldPolynomial& f, const FiniteField& ext);

/// Monic irreducible factor of least degree (>= 2), ties broken by the lexicographically least coefficient
/// vector (constant term first). Throws HasRootError if f has a root in its (prime) field.
FieldPolynomial irreducible_factor(const FieldPolynomial& f);
bool is_irreducible(const FieldPolynomial& f);
/// Least-degree, lex-least monic factor of degree 1..deg/2, or nothing when f is irreducible.
std::optional<FieldPolynomial> smallest_factor(const FieldPolynomial& f);

/// Least n >= 1 with x^n = 1. Throws on x = 0.
std::uint64_t element_order(const FiniteField& field, FieldElem x);

/// A subgroup of 𝔽^×, stored as its sorted element list.
class MultSubgroup {
 public:
  /// Closure of the generators under multiplication.
  static MultSubgroup generated_by(FieldPtr field, std::vector<FieldElem> generators, std::string label = {});
  /// Validates that `elements` is a subgroup (contains 1, closed under products and inverses).
  static MultSubgroup from_elements(FieldPtr field, std::vector<FieldElem> elements, std::string label = {});

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElem>& elements() const { return elements_; }
  const std::vector<FieldElem>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(FieldElem x) const;

  /// The same subgroup inside an extension field (codes are preserved).
  MultSubgroup embedded_in(FieldPtr ext) const;

 private:
  MultSubgroup(FieldPtr field, std::vector<FieldElem> elements, std::vector<FieldElem> generators, std::string label);

  FieldPtr field_;
  std::vector<FieldElem> elements_;
  std::vector<FieldElem> generators_;
  std::string label_;
};

/// {x^2 : x ∈ 𝔽^×}, labelled "sq".
MultSubgroup squares_subgroup(const FieldPtr& field);

}  // namespace hyperlab

#endif  // HYPERLAB_FFIELD_HPP
