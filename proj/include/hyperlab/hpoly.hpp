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


#ifndef HYPERLAB_HPOLY_HPP
#define HYPERLAB_HPOLY_HPP

/**
 * @file hpoly.hpp
 * @brief Polynomials over finite hyperfields: evaluation, roots, induced polynomials and lifts.
 *
 * k(T) = a_0 ⊞ a_1 T ⊞ ... ⊞ a_n T^n is a formal sum; k(ξ) is the hypersum of the single elements a_j ⊙ ξ^j, and
 * ξ is a root when 0 ∈ k(ξ).
 *
 * Text form: terms joined by '+' (or '⊞'), each a coefficient, a coefficient followed by T, or T alone, with an
 * optional ^n. Coefficients are element names, bracketed when they contain '+' ("[i+1]T^2"); "-T" stands for
 * the element -1 times T.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlab/ffield.hpp"
#include "hyperlab/hyperfield.hpp"
#include "hyperlab/quotient.hpp"

namespace hyperlab {

class HyperPolynomial {
 public:
  /// Constant term first; trailing zero coefficients are dropped.
  HyperPolynomial(HyperfieldPtr h, std::vector<Elem> coeffs);

  const HyperfieldPtr& hyperfield() const { return h_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  Elem coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : h_->zero(); }

  /// "1 + T^2", "-1 + -T + T^2", "[i] + [i+1]T"
  std::string to_string() const;
  /// Coefficient names, constant term first.
  std::vector<std::string> record() const;

  bool operator==(const HyperPolynomial& o) const { return coeffs_ == o.coeffs_ && h_->same_tables(*o.h_); }

 private:
  HyperfieldPtr h_;
  std::vector<Elem> coeffs_;
};

/// A set of polynomials over one hyperfield, kept sorted by text form without duplicates.
using PolySet = std::vector<HyperPolynomial>;

HyperPolynomial parse_polynomial(const HyperfieldPtr& h, std::string_view text);

/// k(ξ); {0} for the zero polynomial.
ElemSet eval(const HyperPolynomial& k, Elem xi);
/// {ξ : 0 ∈ k(ξ)}, by exhaustive scan of the carrier.
ElemSet roots(const HyperPolynomial& k);

/// Σ a_j x^j ↦ ⊞ [a_j] T^j
HyperPolynomial induce(const FieldPolynomial& f, const QuotientStructure& q);
/// Coefficientwise canonical representatives; induce(lift(k)) = k. Throws if k is not over q's hyperfield.
FieldPolynomial lift(const HyperPolynomial& k, const QuotientStructure& q);

/// All polynomials whose T^m coefficient is chosen from C_m = ⊞_{i+j=m} a_i ⊙ b_j. Throws if the number of
/// choices exceeds `limit`.
PolySet mul_multivalued(const HyperPolynomial& p, const HyperPolynomial& q, std::size_t limit = 1U << 20);

/// With α = f(γ): whether [α] ∈ induce(f)([γ]).
bool lemma22_check(const FieldPolynomial& f, FieldElem gamma, const QuotientStructure& q);

}  // namespace hyperlab

#endif  // HYPERLAB_HPOLY_HPP
