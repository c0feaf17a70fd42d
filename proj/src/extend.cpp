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

std::string RootExtension::summary() const {
  return "L = " + extension->label() + ", root " + extension->hyperfield()->name(root);
}

std::string RootExtension::to_string() const {
  const auto& l = *extension->hyperfield();
  std::string out;
  out += "K = " + base->label() + " (" + std::to_string(base->class_count()) + " elements)\n";
  out += "k(T) = " + k.to_string() + "\n";
  out += "lift f(x) = " + lifted.to_string() + " over " + base->field()->label() + ", no roots there\n";
  out += "irreducible factor g(x) = " + factor.to_string() + "\n";
  out += "F' = " + base->field()->label() + "[" + extension_field->generator_name() + "]/(g) = " +
         extension_field->label() + "\n";
  out += "L = " + extension->label() + " (" + std::to_string(l.size()) + " elements, |L^x| = " +
         std::to_string(l.size() - 1) + ")\n";
  out += "embedding K -> L: " + embedding.to_string() + "\n";
  out += "k(" + l.name(root) + ") = " + format_set(l, eval(k_in_extension, root)) + "\n";
  out += summary() + "\n";
  return out;
}

nlohmann::ordered_json RootExtension::record() const {
  nlohmann::ordered_json rec;
  rec["base"] = base->label();
  rec["k"] = k.to_string();
  rec["lift"] = lifted.record();
  rec["factor"] = factor.record();
  rec["extension_field"] = extension_field->record();
  rec["extension"] = extension->label();
  rec["extension_size"] = extension->class_count();
  rec["embedding"] = embedding.record();
  rec["root"] = extension->hyperfield()->name(root);
  auto value = nlohmann::ordered_json::array();
  for (Elem e : eval(k_in_extension, root)) value.push_back(extension->hyperfield()->name(e));
  rec["k_at_root"] = value;
  return rec;
}

RootExtension build_root_extension(const QuotientPtr& q, const HyperPolynomial& k) {
  if (!q) throw Error("build_root_extension: no base quotient");
  const auto& kh = *q->hyperfield();
  if (!k.hyperfield()->same_tables(kh)) throw Error("build_root_extension: polynomial is not over " + q->label());
  if (!q->field()->is_prime_field()) {
    throw Error("build_root_extension: the base field " + q->field()->label() + " must be a prime field");
  }
  const ElemSet existing = roots(k);
  if (!existing.empty()) throw Error("root " + kh.name(existing.front()) + " exists in " + q->label());
  if (k.degree().value_or(0) == 0) throw Error("a nonzero constant has no root in any extension");

  FieldPolynomial f = lift(k, *q);
  if (!(induce(f, *q) == k)) throw Error("internal: induce(lift(k)) differs from k");
  const auto field_level = field_roots(f);
  if (!field_level.empty()) {
    throw Error("internal: lift " + f.to_string() + " has the root " + q->field()->signed_name(field_level.front()) +
                " although k is rootless");
  }
  FieldPolynomial g = irreducible_factor(f);
  FieldPtr ext = extend_by_irreducible(q->field(), g);
  QuotientPtr l = build_quotient(ext, q->subgroup().embedded_in(ext));
  const auto& lh = l->hyperfield();

  std::vector<Elem> images;
  for (Elem c = 0; c < kh.size(); ++c) images.push_back(l->class_of(q->representative(c)));
  HyperfieldMap emb(q->hyperfield(), lh, images);
  if (emb.kind() != MapKind::kStrong || !emb.injective()) {
    throw Error("internal: " + q->label() + " -> " + l->label() + " is " + std::string(kind_name(emb.kind())) +
                ", expected a strong embedding");
  }
  std::vector<Elem> carried;
  for (Elem c : k.coeffs()) carried.push_back(emb(c));
  HyperPolynomial k_l(lh, std::move(carried));
  const Elem root = l->class_of(ext->generator());
  if (!eval(k_l, root).contains(lh->zero())) {
    throw Error("internal: " + lh->name(root) + " is not a root of k in " + l->label());
  }
  return RootExtension{q, k, std::move(f), std::move(g), ext, l, std::move(emb), std::move(k_l), root};
}

}  // namespace hyperlab
