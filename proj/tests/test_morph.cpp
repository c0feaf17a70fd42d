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

#include "hyperlab/morph.hpp"
#include "hyperlab/quotient.hpp"
#include "oracle.hpp"

using namespace hyperlab;

namespace {

QuotientPtr gaussian_sq(std::uint32_t p) {
  const FieldPtr base = FiniteField::prime(p);
  const FieldPtr f = extend_by_irreducible(base, FieldPolynomial::from_integers(base, {1, 0, 1}));
  return build_quotient(f, squares_subgroup(base).embedded_in(f));
}

}  // namespace

TEST_CASE("Classify.IdentityIsStrong") {
  const auto s = builtin("signs");
  const HyperfieldMap id(s, s, {0, 1, 2});
  CHECK_EQ(id.kind(), MapKind::kStrong);
  CHECK(id.bijective());
}

TEST_CASE("Classify.SignsToWeakSignsIsWeak") {
  const auto s = builtin("signs");
  const auto w = builtin("weak_signs");
  std::vector<Elem> img(3);
  for (Elem x = 0; x < 3; ++x) img[x] = w->element(s->name(x));
  // 1 ⊞ 1 = {1} in S but {1, -1} in W
  CHECK_EQ(classify_map(*s, *w, img), MapKind::kWeak);
  // the reverse direction loses -1 from 1 ⊞ 1
  std::vector<Elem> back(3);
  for (Elem x = 0; x < 3; ++x) back[x] = s->element(w->name(x));
  CHECK_EQ(classify_map(*w, *s, back), MapKind::kNotHom);
}

TEST_CASE("Classify.NotMultiplicative") {
  const auto s = builtin("signs");
  const auto k = builtin("krasner");
  // everything to 0 fails 1 ↦ 1
  CHECK_EQ(classify_map(*s, *k, std::vector<Elem>{0, 0, 0}), MapKind::kNotHom);
  CHECK_THROWS_AS(HyperfieldMap(s, k, {0, 1}), Error);
}

TEST_CASE("Classify.AgreesWithOracleOnAllMaps") {
  // every total map between small builtins
  const std::vector<HyperfieldPtr> pool{builtin("krasner"), builtin("signs"), builtin("weak_signs"), massouros_instance(2),
                                        massouros_instance(3)};
  for (const auto& k : pool) {
    for (const auto& l : pool) {
      std::vector<Elem> img(k->size(), 0);
      while (true) {
        INFO(k->label(), " -> ", l->label());
        REQUIRE_EQ(classify_map(*k, *l, img), oracle::classify(*k, *l, img));
        std::size_t j = 0;
        while (j < img.size() && ++img[j] == l->size()) img[j++] = 0;
        if (j == img.size()) break;
      }
    }
  }
}

TEST_CASE("Collapse.KrasnerIsTerminal") {
  for (const auto& h : {builtin("signs"), builtin("weak_signs"), massouros_instance(5), gaussian_sq(7)->hyperfield()}) {
    const HyperfieldMap m = collapse_to_krasner(h);
    INFO(h->label());
    CHECK_NE(m.kind(), MapKind::kNotHom);
  }
}

TEST_CASE("Compose.KindsCompose") {
  const auto s = builtin("signs");
  const auto w = builtin("weak_signs");
  const HyperfieldMap f(s, w, {0, 1, 2});
  const HyperfieldMap g = collapse_to_krasner(w);
  const HyperfieldMap gf = compose(f, g);
  CHECK_EQ(gf.source(), s);
  CHECK_EQ(gf.target(), g.target());
  CHECK_NE(gf.kind(), MapKind::kNotHom);
}

TEST_CASE("Embeddings.WeakSignsIntoF49") {
  const auto w = builtin("weak_signs");
  const auto l = gaussian_sq(7)->hyperfield();
  const auto emb = find_embeddings(w, l, MapKind::kWeak);
  REQUIRE_EQ(emb.size(), 1U);
  CHECK_EQ(emb.front().to_string(), "0 -> [0], 1 -> [1], -1 -> [-1] (strong)");
  CHECK(find_embeddings(builtin("krasner"), l, MapKind::kWeak).empty());
}

TEST_CASE("Embeddings.SignsIntoF49") {
  const auto s = builtin("signs");
  const auto l = gaussian_sq(7)->hyperfield();
  for (const auto& m : find_embeddings(s, l, MapKind::kWeak)) {
    CHECK_EQ(oracle::classify(*s, *l, m.images()), m.kind());
  }
}

TEST_CASE("Embeddings.AutomorphismsOfF49Sq") {
  const auto l = gaussian_sq(7)->hyperfield();
  const auto autos = find_embeddings(l, l, MapKind::kStrong);
  REQUIRE_FALSE(autos.empty());
  for (const auto& a : autos) {
    CHECK(a.bijective());
    CHECK_EQ(oracle::classify(*l, *l, a.images()), MapKind::kStrong);
  }
}

TEST_CASE("Embeddings.F49IntoF121None") {
  const auto l1 = gaussian_sq(7)->hyperfield();
  const auto l2 = gaussian_sq(11)->hyperfield();
  CHECK(find_embeddings(l1, l2, MapKind::kWeak).empty());
  const LagrangeResult r = lagrange_obstruction(*l1, *l2);
  CHECK(r.obstructed);
  CHECK_EQ(r.source_units, 16U);
  CHECK_EQ(r.target_units, 24U);
  CHECK_EQ(r.to_string(), "obstructed: 16 does not divide 24");
  CHECK_EQ(lagrange_obstruction(*builtin("weak_signs"), *l1).to_string(), "inconclusive: 2 divides 16");
}

TEST_CASE("Isomorphism.MassourosNotSigns") {
  CHECK_FALSE(is_isomorphic(massouros_instance(2), builtin("signs")).has_value());
  CHECK_FALSE(is_isomorphic(builtin("signs"), builtin("weak_signs")).has_value());
  CHECK_FALSE(is_isomorphic(builtin("signs"), builtin("krasner")).has_value());
}

TEST_CASE("MapRecord.Shape") {
  const auto m = collapse_to_krasner(builtin("signs"));
  const auto rec = m.record();
  CHECK_EQ(rec["source"], "S");
  CHECK_EQ(rec["target"], "K");
  CHECK_EQ(rec["kind"], kind_name(m.kind()));
  CHECK_EQ(rec["pairs"]["-1"], "1");
}
