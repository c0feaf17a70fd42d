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


#include "hyperlab/extend.hpp"

namespace hyperlab {

namespace {

HyperPolynomial carry(const HyperPolynomial& k, const HyperfieldMap& m) {
  std::vector<Elem> c;
  for (Elem a : k.coeffs()) c.push_back(m(a));
  return HyperPolynomial(m.target(), std::move(c));
}

QuotientPtr squares_quotient(std::uint32_t p) {
  const FieldPtr f = FiniteField::prime(p);
  return build_quotient(f, squares_subgroup(f));
}

nlohmann::ordered_json names(const FiniteHyperfield& h, ElemSet s) {
  auto arr = nlohmann::ordered_json::array();
  for (Elem e : s) arr.push_back(h.name(e));
  return arr;
}

}  // namespace

std::string ExperimentReport::text() const {
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

ExperimentReport nonuniqueness_experiment() {
  ExperimentReport rep;
  auto& rec = rep.record;
  auto say = [&](std::string line) { rep.lines.push_back(std::move(line)); };
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      say("  FAILED: " + what);
    }
  };

  const HyperfieldPtr w = builtin("weak_signs");
  const QuotientPtr q1 = squares_quotient(7);
  const QuotientPtr q2 = squares_quotient(11);

  say("step 1: the base hyperfield W as a quotient in two ways");
  const auto iso1 = is_isomorphic(w, q1->hyperfield());
  const auto iso2 = is_isomorphic(w, q2->hyperfield());
  check(iso1.has_value(), "W is isomorphic to F7/sq");
  check(iso2.has_value(), "W is isomorphic to F11/sq");
  if (!iso1 || !iso2) {
    rep.success = false;
    return rep;
  }
  say("  W -> F7/sq: " + iso1->to_string());
  say("  W -> F11/sq: " + iso2->to_string());
  rec["step1"] = {{"W_to_F7_sq", iso1->record()}, {"W_to_F11_sq", iso2->record()}};

  say("step 2: k(T) = 1 ⊞ T^2 has no root in W");
  const HyperPolynomial k = parse_polynomial(w, "1 + T^2");
  const ElemSet base_roots = roots(k);
  for (Elem xi = 0; xi < w->size(); ++xi) say("  k(" + w->name(xi) + ") = " + format_set(*w, eval(k, xi)));
  say("  roots in W: " + format_set(*w, base_roots));
  check(base_roots.empty(), "1 ⊞ T^2 is rootless over W");
  rec["step2"] = {{"k", k.to_string()}, {"roots", names(*w, base_roots)}};

  say("step 3: root extensions");
  const RootExtension x1 = build_root_extension(q1, carry(k, *iso1));
  const RootExtension x2 = build_root_extension(q2, carry(k, *iso2));
  const auto& l1 = *x1.extension->hyperfield();
  const auto& l2 = *x2.extension->hyperfield();
  for (const RootExtension* x : {&x1, &x2}) {
    say("  " + x->base->label() + ": lift " + x->lifted.to_string() + ", factor " + x->factor.to_string() + ", " +
        x->summary() + ", |L| = " + std::to_string(x->extension->class_count()) + ", embedding " +
        std::string(kind_name(x->embedding.kind())));
  }
  check(l1.size() == 17 && l2.size() == 25, "|L1| = 17 and |L2| = 25");
  rec["step3"] = {{"L1", x1.record()}, {"L2", x2.record()}};

  say("step 4: minimality of L1 = " + l1.label());
  const MinimalityCertificate cert1 = certify_minimal(x1, w);
  for (const auto& c : cert1.candidates) {
    std::string line = "  candidate of order " + std::to_string(c.subgroup.size()) + ": ";
    if (!c.proper) {
      line += "all of L1^x";
    } else if (c.obstruction) {
      line += "obstructed, " + l1.name(c.obstruction->first) + " ⊞ " + l1.name(c.obstruction->second) + " = " +
              format_set(l1, c.obstruction_sum);
    } else {
      line += "unobstructed";
    }
    say(line);
  }
  say("  verdict: " + std::string(verdict_name(cert1.verdict)));
  check(cert1.verdict == Verdict::kMinimalCertified, "L1 is certified minimal");
  rec["step4"] = cert1.record();

  say("step 5: L1 does not embed in L2 = " + l2.label());
  const LagrangeResult lag = lagrange_obstruction(l1, l2);
  const auto emb = find_embeddings(x1.extension->hyperfield(), x2.extension->hyperfield(), MapKind::kWeak);
  say("  lagrange: " + lag.to_string());
  say("  weak embeddings L1 -> L2 found: " + std::to_string(emb.size()));
  check(lag.obstructed && emb.empty(), "L1 has no weak embedding into L2");
  rec["step5"] = {{"lagrange", lag.to_string()}, {"obstructed", lag.obstructed}, {"embeddings", emb.size()}};

  say("step 6: certificate for L2 (reported as computed)");
  const MinimalityCertificate cert2 = certify_minimal(x2, w);
  for (const auto& c : cert2.candidates) {
    std::string line = "  candidate of order " + std::to_string(c.subgroup.size()) + ": ";
    if (!c.proper) {
      line += "all of L2^x";
    } else if (c.obstruction) {
      line += "obstructed, " + l2.name(c.obstruction->first) + " ⊞ " + l2.name(c.obstruction->second) + " = " +
              format_set(l2, c.obstruction_sum);
    } else {
      line += "unobstructed";
    }
    say(line);
  }
  say("  verdict: " + std::string(verdict_name(cert2.verdict)));
  rec["step6"] = cert2.record();

  say("conclusion: a minimal extension of W with a root of k inside L2 contains no copy of L1, since L1 does not "
      "embed in L2");
  rep.success = ok;
  rec["success"] = ok;
  if (ok) {
    const std::string verdict = "two non-isomorphic minimal extensions: |L1^x|=" + std::to_string(l1.size() - 1) +
                                ", |L2^x|=" + std::to_string(l2.size() - 1);
    rec["verdict"] = verdict;
    say(verdict);
  } else {
    rec["verdict"] = "reproduction failed";
    say("reproduction failed");
  }
  return rep;
}

}  // namespace hyperlab
