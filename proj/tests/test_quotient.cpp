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

#include <fstream>
#include <sstream>

#include "hyperlab/morph.hpp"
#include "hyperlab/quotient.hpp"
#include "oracle.hpp"

using namespace hyperlab;

namespace {

FieldPtr gaussian(std::uint32_t p) {
  const FieldPtr base = FiniteField::prime(p);
  return extend_by_irreducible(base, FieldPolynomial::from_integers(base, {1, 0, 1}));
}

QuotientPtr gaussian_sq(std::uint32_t p) {
  const FieldPtr f = gaussian(p);
  return build_quotient(f, squares_subgroup(FiniteField::prime(p)).embedded_in(f));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("Quotient.GoldenF49ClassListing") {
  const QuotientPtr q = gaussian_sq(7);
  CHECK_EQ(q->label(), "F49/sq");
  CHECK_EQ(q->class_count(), 17U);
  CHECK_EQ(q->class_listing(), slurp(HYPERLAB_GOLDEN_DIR "/f49_sq_classes.txt"));
}

TEST_CASE("Quotient.ClassesMatchOracleCosets") {
  for (std::uint32_t p : {7U, 11U}) {
    const QuotientPtr q = gaussian_sq(p);
    const auto expected = oracle::cosets(static_cast<int>(p), oracle::base_squares(static_cast<int>(p)));
    std::set<oracle::Coset> got;
    for (Elem c = 0; c < q->class_count(); ++c) {
      const auto m = q->members(c);
      got.insert(oracle::Coset(m.begin(), m.end()));
      for (FieldElem x : m) CHECK_EQ(q->class_of(x), c);
    }
    INFO(p);
    CHECK_EQ(got, expected);
  }
}

TEST_CASE("Quotient.SumsMatchBruteForce") {
  for (std::uint32_t p : {7U, 11U}) {
    const QuotientPtr q = gaussian_sq(p);
    const auto& h = *q->hyperfield();
    for (Elem a = 0; a < h.size(); ++a) {
      const auto ma = q->members(a);
      for (Elem b = 0; b < h.size(); ++b) {
        const auto mb = q->members(b);
        const auto sums = oracle::coset_sum(static_cast<int>(p), oracle::Coset(ma.begin(), ma.end()),
                                            oracle::Coset(mb.begin(), mb.end()));
        std::set<std::uint32_t> from_table;
        for (Elem c : h.add(a, b)) {
          for (FieldElem x : q->members(c)) from_table.insert(x);
        }
        // xG + yG is a union of cosets, so it must equal the union of the listed classes
        INFO(h.name(a), " + ", h.name(b));
        REQUIRE_EQ(from_table, sums);
      }
    }
  }
}

TEST_CASE("Quotient.ObstructionSums") {
  const QuotientPtr q = gaussian_sq(7);
  const auto& h = *q->hyperfield();
  auto cls = [&](const char* n) { return h.element(n); };
  CHECK_EQ(h.add(cls("[1]"), cls("[i]")), ElemSet({cls("[i+1]"), cls("[i+2]"), cls("[i-3]")}));
  CHECK_EQ(h.add(cls("[i]"), cls("[i+1]")), ElemSet({cls("[i-3]"), cls("[-i-3]"), cls("[-i+2]")}));
}

TEST_CASE("Quotient.UnitGroupCyclic") {
  const QuotientPtr q = gaussian_sq(7);
  const auto& h = *q->hyperfield();
  std::size_t best = 0;
  for (Elem u : h.units()) best = std::max(best, h.order(u));
  CHECK_EQ(best, 16U);
  CHECK_EQ(h.order(h.element("[i]")), 4U);
}

TEST_CASE("Quotient.SmallIdentities") {
  const auto w = builtin("weak_signs");
  const auto k = builtin("krasner");
  for (std::uint32_t p : {7U, 11U}) {
    const FieldPtr f = FiniteField::prime(p);
    INFO(p);
    CHECK(is_isomorphic(build_quotient(f, squares_subgroup(f))->hyperfield(), w).has_value());
  }
  for (std::uint32_t p : {5U, 7U}) {
    const FieldPtr f = FiniteField::prime(p);
    std::vector<FieldElem> all;
    for (FieldElem x = 1; x < p; ++x) all.push_back(x);
    const QuotientPtr q = build_quotient(f, MultSubgroup::from_elements(f, all));
    INFO(p);
    CHECK(is_isomorphic(q->hyperfield(), k).has_value());
  }
  // F3/sq and F5/sq are not W
  const FieldPtr f5 = FiniteField::prime(5);
  CHECK_FALSE(is_isomorphic(build_quotient(f5, squares_subgroup(f5))->hyperfield(), w).has_value());
}

TEST_CASE("Quotient.TrivialSubgroupIsField") {
  const FieldPtr f = FiniteField::prime(7);
  const QuotientPtr q = build_quotient(f, MultSubgroup::from_elements(f, {1}));
  CHECK_EQ(q->class_count(), 7U);
  CHECK(is_isomorphic(q->hyperfield(), field_hyperfield(*f)).has_value());
}

TEST_CASE("Quotient.TooManyClassesRejected") {
  const FieldPtr f = FiniteField::prime(67);
  CHECK_THROWS_AS(build_quotient(f, MultSubgroup::from_elements(f, {1})), Error);
}

TEST_CASE("Quotient.ForeignSubgroupRejected") {
  CHECK_THROWS_AS(build_quotient(gaussian(7), squares_subgroup(FiniteField::prime(7))), Error);
}

TEST_CASE("Quotient.ClassOfByName") {
  const QuotientPtr q = gaussian_sq(7);
  CHECK_EQ(q->hyperfield()->name(q->class_of("2i+2")), "[i+1]");
  CHECK_EQ(q->hyperfield()->name(q->class_of("3i-1")), "[-i-2]");
}

TEST_CASE("Quotient.SetsumMembership") {
  const QuotientPtr q = gaussian_sq(7);
  const FiniteField& f = *q->field();
  const std::vector<FieldElem> xs{f.parse("1"), f.parse("i")};
  CHECK(setsum_membership_check(*q, f.parse("i+1"), xs));
  CHECK_FALSE(setsum_membership_check(*q, f.parse("0"), xs));
}

TEST_CASE("Quotient.RecordHasClasses") {
  const auto rec = gaussian_sq(7)->record();
  REQUIRE(rec.contains("classes"));
  CHECK_EQ(rec["classes"].size(), 17U);
}
