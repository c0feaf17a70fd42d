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


#include <doctest.h>

#include "hyperlab/hpoly.hpp"

using namespace hyperlab;

namespace {

QuotientPtr f49_sq() {
  const FieldPtr f7 = FiniteField::prime(7);
  const FieldPtr f = extend_by_irreducible(f7, FieldPolynomial::from_integers(f7, {1, 0, 1}));
  return build_quotient(f, squares_subgroup(f7).embedded_in(f));
}

std::vector<std::string> texts(const PolySet& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("Parse.RoundTrip") {
  const auto s = builtin("signs");
  for (const char* text : {"1 + T^2", "-1 + -T + T^2", "T", "-T^3", "0", "1"}) {
    CHECK_EQ(parse_polynomial(s, text).to_string(), text);
  }
  const auto q = f49_sq()->hyperfield();
  for (const char* text : {"[i] + [i+1]T", "[1] + T^2", "[-i-3]T^4"}) {
    CHECK_EQ(parse_polynomial(q, text).to_string(), text);
  }
}

TEST_CASE("Parse.Variants") {
  const auto s = builtin("signs");
  const auto k = parse_polynomial(s, "1 + T^2");
  CHECK_EQ(parse_polynomial(s, "1⊞T^2"), k);
  CHECK_EQ(parse_polynomial(s, "T^2 + 1"), k);
  CHECK_EQ(parse_polynomial(s, "1 + 1*T^2"), k);
  CHECK_EQ(parse_polynomial(s, "−1 + T").to_string(), "-1 + T");
  CHECK_EQ(parse_polynomial(s, "1 + 0T").to_string(), "1");
}

TEST_CASE("Parse.ErrorsCarryPosition") {
  const auto s = builtin("signs");
  try {
    parse_polynomial(s, "1 + T^");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK_EQ(e.position(), 6U);
    CHECK_EQ(e.expected(), "exponent");
  }
  try {
    parse_polynomial(s, "1 + 2T");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK_EQ(e.position(), 4U);
  }
  CHECK_THROWS_AS(parse_polynomial(s, "T + T"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(s, ""), ParseError);
  CHECK_THROWS_AS(parse_polynomial(s, "1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(s, "1 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(s, "T^99999"), ParseError);
}

TEST_CASE("Eval.SignsAndWeakSigns") {
  const auto s = builtin("signs");
  const auto w = builtin("weak_signs");
  const auto ks = parse_polynomial(s, "1 + T^2");
  CHECK_EQ(eval(ks, s->element("1")), ElemSet({s->element("1")}));
  CHECK_EQ(eval(ks, s->zero()), ElemSet({s->element("1")}));
  CHECK(roots(ks).empty());
  const auto kw = parse_polynomial(w, "1 + T^2");
  CHECK_EQ(eval(kw, w->element("-1")), w->units());
  CHECK(roots(kw).empty());
  const auto lin = parse_polynomial(s, "-1 + T");
  CHECK_EQ(roots(lin), ElemSet({s->element("1")}));
  CHECK_EQ(eval(HyperPolynomial(s, {}), s->element("1")), ElemSet({s->zero()}));
}

TEST_CASE("Eval.RootsInF49") {
  const auto q = f49_sq()->hyperfield();
  const auto k = parse_polynomial(q, "1 + T^2");
  CHECK_EQ(roots(k), ElemSet({q->element("[i]"), q->element("[-i]")}));
}

TEST_CASE("MultivaluedProduct.SignsExample") {
  const auto s = builtin("signs");
  const auto p = parse_polynomial(s, "1 + T");
  const auto q = parse_polynomial(s, "-1 + T");
  const auto prod = mul_multivalued(p, q);
  CHECK_EQ(texts(prod), (std::vector<std::string>{"-1 + -T + T^2", "-1 + T + T^2", "-1 + T^2"}));
}

TEST_CASE("MultivaluedProduct.FieldIsSingleValued") {
  const auto f = field_hyperfield(*FiniteField::prime(5));
  const auto prod = mul_multivalued(parse_polynomial(f, "1 + 2T"), parse_polynomial(f, "3 + T"));
  REQUIRE_EQ(prod.size(), 1U);
  CHECK_EQ(prod.front().to_string(), "3 + 2T + 2T^2");
}

TEST_CASE("MultivaluedProduct.LimitEnforced") {
  const auto s = builtin("signs");
  const auto p = parse_polynomial(s, "1 + T + T^2 + T^3");
  const auto q = parse_polynomial(s, "-1 + T + -T^2 + T^3");
  CHECK_THROWS_AS(mul_multivalued(p, q, 10), Error);
}

TEST_CASE("InduceLift.RoundTrip") {
  const QuotientPtr q = f49_sq();
  const FiniteField& f = *q->field();
  const auto f7 = FiniteField::prime(7);
  const auto k = parse_polynomial(q->hyperfield(), "[i+2] + [-1]T + T^3");
  const FieldPolynomial l = lift(k, *q);
  CHECK_EQ(induce(l, *q), k);
  CHECK_EQ(f.signed_name(l.coeff(0)), "i+2");
  CHECK_THROWS_AS(lift(parse_polynomial(builtin("signs"), "1 + T"), *q), Error);
}

TEST_CASE("InduceLift.InducedEvaluationContainsValue") {
  const QuotientPtr q = f49_sq();
  const FiniteField& f = *q->field();
  const auto g = FieldPolynomial(q->field(), {f.parse("2i+3"), f.parse("5"), 0, f.parse("i")});
  for (FieldElem gamma = 0; gamma < f.size(); ++gamma) CHECK(lemma22_check(g, gamma, *q));
}

TEST_CASE("InduceLift.InducedEvaluationOverPrimeQuotients") {
  // every polynomial of degree at most 2 and every γ; degree 4 on a fixed sample
  for (std::uint32_t p : {7U, 11U}) {
    const FieldPtr f = FiniteField::prime(p);
    const QuotientPtr q = build_quotient(f, squares_subgroup(f));
    std::size_t failures = 0;
    for (FieldElem a = 0; a < p; ++a) {
      for (FieldElem b = 0; b < p; ++b) {
        for (FieldElem c = 0; c < p; ++c) {
          const FieldPolynomial g(f, {a, b, c});
          for (FieldElem gamma = 0; gamma < p; ++gamma) failures += lemma22_check(g, gamma, *q) ? 0 : 1;
        }
      }
    }
    for (FieldElem s = 0; s < 500; ++s) {
      const FieldPolynomial g(f, {s % p, (s * 3 + 1) % p, (s / 7) % p, (s * s) % p, 1 + s % (p - 1)});
      for (FieldElem gamma = 0; gamma < p; ++gamma) failures += lemma22_check(g, gamma, *q) ? 0 : 1;
    }
    CHECK_EQ(failures, 0U);
  }
}
