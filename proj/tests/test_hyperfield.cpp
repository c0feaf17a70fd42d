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

#include "hyperlab/hyperfield.hpp"

using namespace hyperlab;

namespace {

ElemSet named(const FiniteHyperfield& h, std::initializer_list<const char*> names) {
  ElemSet s;
  for (const char* n : names) s.insert(h.element(n));
  return s;
}

}  // namespace

TEST_CASE("Builtins.KrasnerTable") {
  const auto k = builtin("krasner");
  CHECK_EQ(k->label(), "K");
  CHECK_EQ(k->size(), 2U);
  const Elem one = k->one();
  CHECK_EQ(k->add(one, one), named(*k, {"0", "1"}));
  CHECK_EQ(k->neg(one), one);
}

TEST_CASE("Builtins.SignsTable") {
  const auto s = builtin("signs");
  const Elem p = s->element("1");
  const Elem m = s->element("-1");
  CHECK_EQ(s->add(p, p), named(*s, {"1"}));
  CHECK_EQ(s->add(m, m), named(*s, {"-1"}));
  CHECK_EQ(s->add(p, m), s->carrier());
  CHECK_EQ(s->mul(m, m), p);
}

TEST_CASE("Builtins.WeakSignsTable") {
  const auto w = builtin("weak_signs");
  const Elem p = w->element("1");
  const Elem m = w->element("-1");
  CHECK_EQ(w->add(p, p), named(*w, {"1", "-1"}));
  CHECK_EQ(w->add(m, m), named(*w, {"1", "-1"}));
  CHECK_EQ(w->add(p, m), w->carrier());
}

TEST_CASE("Builtins.UnknownName") { CHECK_THROWS_AS(builtin("reals"), Error); }

TEST_CASE("Builtins.UnicodeMinusLookup") {
  const auto s = builtin("signs");
  CHECK_EQ(s->find("−1"), s->find("-1"));
}

TEST_CASE("Builtins.MassourosRules") {
  for (unsigned n = 2; n <= 16; ++n) {
    const auto m = massouros_instance(n);
    REQUIRE_EQ(m->size(), n + 1);
    for (Elem x : m->units()) {
      INFO(n);
      CHECK_EQ(m->add(x, x), m->carrier() - ElemSet::single(x));
      for (Elem y : m->units()) {
        if (x != y) CHECK_EQ(m->add(x, y), ElemSet({x, y}));
      }
    }
  }
  CHECK_THROWS_AS(massouros_instance(1), Error);
  CHECK_THROWS_AS(massouros_instance(17), Error);
}

TEST_CASE("Builtins.FieldAsHyperfield") {
  const auto f = field_hyperfield(*FiniteField::prime(5));
  for (Elem a = 0; a < 5; ++a) {
    for (Elem b = 0; b < 5; ++b) CHECK_EQ(f->add(a, b).size(), 1U);
  }
  CHECK(verify_axioms(*f).pass());
}

TEST_CASE("Axioms.BuiltinsPass") {
  for (const char* n : {"krasner", "signs", "weak_signs"}) {
    INFO(n);
    CHECK(verify_axioms(*builtin(n)).pass());
  }
  for (unsigned n : {2U, 3U, 5U, 8U}) {
    INFO(n);
    CHECK(verify_axioms(*massouros_instance(n)).pass());
  }
}

TEST_CASE("Axioms.ReportsFirstWitness") {
  const auto s = builtin("signs");
  const Elem p = s->element("1");
  const Elem m = s->element("-1");
  // 1 ⊞ 1 = {1, -1} breaks the reversibility/associativity of S while keeping commutativity
  const FiniteHyperfield broken = s->with_sum(p, p, ElemSet({p, m}));
  const AxiomReport rep = verify_axioms(broken);
  CHECK_FALSE(rep.pass());
  CHECK(rep.clause(Axiom::kAddCommutative).pass);
  CHECK(rep.clause(Axiom::kZeroIdentity).pass);
  CHECK_FALSE(rep.clause(Axiom::kDistributiveLeft).pass);
  CHECK_FALSE(rep.clause(Axiom::kDistributiveLeft).witness.empty());
}

TEST_CASE("Axioms.NonCommutativeDetected") {
  const auto s = builtin("signs");
  const Elem p = s->element("1");
  const Elem m = s->element("-1");
  const FiniteHyperfield broken = s->with_sum(p, m, ElemSet({s->zero(), p}), false);
  const AxiomReport rep = verify_axioms(broken);
  CHECK_FALSE(rep.clause(Axiom::kAddCommutative).pass);
  CHECK_EQ(rep.clause(Axiom::kAddCommutative).witness, (std::vector<Elem>{p, m}));
}

TEST_CASE("Axioms.MissingInverseDetected") {
  const auto s = builtin("signs");
  const Elem p = s->element("1");
  const Elem m = s->element("-1");
  const FiniteHyperfield broken = s->with_sum(p, m, ElemSet({p, m}));
  const AxiomReport rep = verify_axioms(broken);
  CHECK_FALSE(rep.clause(Axiom::kUniqueInverse).pass);
  CHECK_EQ(rep.clause(Axiom::kUniqueInverse).witness, (std::vector<Elem>{p, m}));
}

TEST_CASE("Axioms.ReportText") {
  const std::string text = verify_axioms(*builtin("krasner")).to_string(*builtin("krasner"));
  CHECK_NE(text.find("reversibility: pass"), std::string::npos);
  CHECK_NE(text.find("verdict: pass"), std::string::npos);
}

TEST_CASE("Hypersum.SetsAndNary") {
  const auto s = builtin("signs");
  const Elem p = s->element("1");
  const Elem m = s->element("-1");
  CHECK_EQ(hypersum_sets(*s, ElemSet({p}), ElemSet({p})), ElemSet({p}));
  const std::vector<Elem> xs{p, p, m};
  CHECK_EQ(nary_hypersum(*s, xs), s->carrier());
  CHECK_THROWS_AS(hypersum_sets(*s, ElemSet{}, ElemSet({p})), Error);
  CHECK_EQ(format_set(*s, ElemSet({s->zero(), m})), "{0, -1}");
}

TEST_CASE("Exchange.RoundTrip") {
  for (const auto& h : {builtin("krasner"), builtin("signs"), builtin("weak_signs"), massouros_instance(6)}) {
    const FiniteHyperfield back = from_exchange(to_exchange(*h));
    CHECK(back == *h);
    CHECK_EQ(back.label(), h->label());
  }
}

TEST_CASE("Exchange.RejectsMalformed") {
  auto rec = to_exchange(*builtin("signs"));
  rec["add"][1][1] = nlohmann::json::array();
  CHECK_THROWS_AS(from_exchange(rec), Error);
  auto rec2 = to_exchange(*builtin("signs"));
  rec2["zero"] = "7";
  CHECK_THROWS_AS(from_exchange(rec2), Error);
  CHECK_THROWS_AS(from_exchange(nlohmann::json::array()), Error);
}

TEST_CASE("Exchange.CayleyTableShape") {
  const std::string t = cayley_tables(*builtin("signs"));
  CHECK_NE(t.find("{0,1,-1}"), std::string::npos);
  CHECK_NE(t.find("⊙"), std::string::npos);
}
