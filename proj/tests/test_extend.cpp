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

#include "hyperlab/extend.hpp"
#include "oracle.hpp"

using namespace hyperlab;

namespace {

QuotientPtr sq(std::uint32_t p) {
  const FieldPtr f = FiniteField::prime(p);
  return build_quotient(f, squares_subgroup(f));
}

RootExtension extend_sq(std::uint32_t p, const char* poly = "1 + T^2") {
  const QuotientPtr q = sq(p);
  return build_root_extension(q, parse_polynomial(q->hyperfield(), poly));
}

}  // namespace

TEST_CASE("RootExtension.F7") {
  const RootExtension x = extend_sq(7);
  CHECK_EQ(x.summary(), "L = F49/sq, root [i]");
  CHECK_EQ(x.extension->class_count(), 17U);
  CHECK_EQ(x.embedding.kind(), MapKind::kStrong);
  CHECK(x.embedding.injective());
  CHECK_EQ(x.lifted.to_string(), "x^2+1");
  CHECK(eval(x.k_in_extension, x.root).contains(x.extension->hyperfield()->zero()));
  // the embedding is checked against the definition as well
  CHECK_EQ(oracle::classify(*x.base->hyperfield(), *x.extension->hyperfield(), x.embedding.images()), MapKind::kStrong);
  const std::string text = x.to_string();
  CHECK_EQ(text.substr(text.rfind('\n', text.size() - 2) + 1), "L = F49/sq, root [i]\n");
}

TEST_CASE("RootExtension.F11") {
  const RootExtension x = extend_sq(11);
  CHECK_EQ(x.summary(), "L = F121/sq, root [i]");
  CHECK_EQ(x.extension->hyperfield()->units().size(), 24U);
  CHECK_EQ(x.embedding.kind(), MapKind::kStrong);
}

TEST_CASE("RootExtension.QuarticOverF7") {
  // x^4 + 1 splits into two quadratics over F7
  const RootExtension x = extend_sq(7, "1 + T^4");
  CHECK_EQ(x.factor.degree(), 2U);
  CHECK(x.lifted.divisible_by(x.factor));
  CHECK_EQ(x.extension_field->size(), 49U);
  CHECK(eval(x.k_in_extension, x.root).contains(x.extension->hyperfield()->zero()));
  CHECK_EQ(x.embedding.kind(), MapKind::kStrong);
}

TEST_CASE("RootExtension.ExistingRootRejected") {
  CHECK_THROWS_AS(extend_sq(7, "-1 + T"), Error);
  CHECK_THROWS_AS(extend_sq(7, "1"), Error);
  try {
    extend_sq(7, "T");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK_NE(std::string(e.what()).find("root [0]"), std::string::npos);
  }
}

TEST_CASE("RootExtension.RecordShape") {
  const auto rec = extend_sq(7).record();
  CHECK(rec.contains("embedding"));
  CHECK(rec.contains("root"));
}

TEST_CASE("Candidates.DivisorLattice") {
  const RootExtension x = extend_sq(7);
  const auto& l = *x.extension->hyperfield();
  const auto all = subgroup_candidates(l, ElemSet({l.one()}));
  std::vector<std::size_t> orders;
  for (ElemSet s : all) orders.push_back(s.size());
  CHECK_EQ(orders, (std::vector<std::size_t>{1, 2, 4, 8, 16}));
  const auto r = subgroup_candidates(l, ElemSet({l.one(), x.root}));
  REQUIRE_EQ(r.size(), 3U);
  CHECK_EQ(r.front().size(), 4U);
}

TEST_CASE("Candidates.F121Lattice") {
  const RootExtension x = extend_sq(11);
  const auto& l = *x.extension->hyperfield();
  std::vector<std::size_t> orders;
  for (ElemSet s : subgroup_candidates(l, ElemSet({l.one()}))) orders.push_back(s.size());
  CHECK_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 12, 24}));
}

TEST_CASE("Obstruction.F49Witnesses") {
  const RootExtension x = extend_sq(7);
  const auto& l = *x.extension->hyperfield();
  const MinimalityCertificate cert = certify_minimal(x, builtin("weak_signs"));
  CHECK_EQ(cert.verdict, Verdict::kMinimalCertified);
  REQUIRE_EQ(cert.candidates.size(), 3U);
  const auto& c4 = cert.candidates[0];
  const auto& c8 = cert.candidates[1];
  REQUIRE(c4.obstruction.has_value());
  REQUIRE(c8.obstruction.has_value());
  CHECK_EQ(l.name(c4.obstruction->first), "[1]");
  CHECK_EQ(l.name(c4.obstruction->second), "[i]");
  CHECK_EQ(format_set(l, c4.obstruction_sum), "{[i+1], [i+2], [i-3]}");
  CHECK_EQ(l.name(c8.obstruction->first), "[i]");
  CHECK_EQ(l.name(c8.obstruction->second), "[i+1]");
  CHECK_EQ(c8.obstruction_sum, ElemSet({l.element("[i-3]"), l.element("[-i-3]"), l.element("[-i+2]")}));
  CHECK_FALSE(cert.candidates[2].proper);
  // a witness really misses the candidate
  for (const auto& c : {c4, c8}) CHECK_FALSE(c.obstruction_sum.intersects(c.subgroup | ElemSet({l.zero()})));
}

TEST_CASE("Obstruction.NegationClosureRequired") {
  const RootExtension x = extend_sq(7);
  const auto& l = *x.extension->hyperfield();
  CHECK_THROWS_AS(weak_closure_obstruction(l, ElemSet({l.one(), x.root})), Error);
}

TEST_CASE("Obstruction.ExhaustiveSearchAgrees") {
  const RootExtension x = extend_sq(7);
  CertifyOptions opts;
  opts.exhaustive_search = true;
  const MinimalityCertificate cert = certify_minimal(x, builtin("weak_signs"), opts);
  CHECK_EQ(cert.verdict, Verdict::kMinimalCertified);
}

TEST_CASE("Search.FindsTheBaseItself") {
  // {0, [1], [-1]} inside F49/sq carries W as a weak subhyperfield
  const RootExtension x = extend_sq(7);
  const auto& l = *x.extension->hyperfield();
  const auto emb = find_embeddings(builtin("weak_signs"), x.extension->hyperfield(), MapKind::kWeak);
  REQUIRE_EQ(emb.size(), 1U);
  const SearchOutcome out =
      search_hyperaddition(l, ElemSet({l.element("[1]"), l.element("[-1]")}), emb.front(), 100000);
  CHECK_EQ(out.result, SearchOutcome::Result::kFound);
}

TEST_CASE("Certify.NonEmbeddingBase") {
  const RootExtension x = extend_sq(7);
  CHECK_THROWS_AS(certify_minimal(x, builtin("krasner")), Error);
}

TEST_CASE("Certify.F121IsNotCertifiedByWitnessesAlone") {
  const RootExtension x = extend_sq(11);
  const MinimalityCertificate cert = certify_minimal(x, builtin("weak_signs"));
  CHECK_NE(cert.verdict, Verdict::kMinimalCertified);
  CHECK(cert.candidates.front().obstruction.has_value());
}

TEST_CASE("Experiment.Reproduces") {
  const ExperimentReport rep = nonuniqueness_experiment();
  CHECK(rep.success);
  REQUIRE_FALSE(rep.lines.empty());
  CHECK_EQ(rep.lines.back(), "two non-isomorphic minimal extensions: |L1^x|=16, |L2^x|=24");
  CHECK_EQ(rep.record["success"], true);
}
