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


#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "hyperlab/extend.hpp"
#include "hyperlab/ffield.hpp"
#include "hyperlab/hpoly.hpp"
#include "hyperlab/hyperfield.hpp"
#include "hyperlab/morph.hpp"
#include "hyperlab/quotient.hpp"

namespace hyperlab::cli {

namespace {

struct SourceOptions {
  std::string builtin;
  std::string field;
  std::string modulus;
  std::string subgroup;
  unsigned massouros = 0;
  std::string input;
};

struct Resolved {
  HyperfieldPtr h;
  QuotientPtr q;
};

struct Options {
  std::string format = "table";
  SourceOptions source;
  std::string poly;
  std::string at;
  std::string base = "weak_signs";
  bool exhaustive = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& s) {
  cmd->add_option("--builtin", s.builtin, "krasner, signs, weak_signs, or field (with --field)")
      ->check(CLI::IsMember({"krasner", "signs", "weak_signs", "field"}));
  cmd->add_option("--field", s.field, "field size q = p^k");
  cmd->add_option("--modulus", s.modulus, "monic modulus for q = p^k, coefficients constant term first: \"1,0,1\"");
  cmd->add_option("--subgroup", s.subgroup,
                  "squares, squares-of-base, trivial, full, or gen:a,b,... (default squares)");
  cmd->add_option("--massouros", s.massouros, "Massouros instance on a cyclic group of this order");
  cmd->add_option("--input", s.input, "hyperfield exchange record (JSON file)");
}

std::string factor_text(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return std::to_string(d) + "·" + std::to_string(n / d);
  }
  return std::to_string(n);
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw ParseError(0, what, "not a number: '" + text + "'");
  return v;
}

FieldPtr make_field(const std::string& q_text, const std::string& modulus_text) {
  const std::uint64_t q = parse_count(q_text, "field size");
  if (q < 2) throw Error("field size must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  for (std::uint64_t r = q; r > 1; r /= p, ++k) {
    if (r % p != 0) throw Error(std::to_string(q) + " is not a prime power (" + factor_text(q) + ")");
  }
  if (p > kMaxPrime) throw Error("characteristic " + std::to_string(p) + " exceeds the bound " + std::to_string(kMaxPrime));
  const FieldPtr base = FiniteField::prime(static_cast<std::uint32_t>(p));
  if (k == 1) {
    if (!modulus_text.empty()) throw Error("--modulus is only meaningful for q = p^k with k >= 2");
    return base;
  }
  if (!modulus_text.empty()) {
    std::vector<FieldElem> coeffs;
    std::stringstream ss(modulus_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(' ');
      const auto e = item.find_last_not_of(' ');
      item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
      const bool negative = !item.empty() && item.front() == '-';
      const std::uint64_t v = parse_count(negative ? item.substr(1) : item, "modulus coefficient");
      coeffs.push_back(base->from_integer(negative ? -static_cast<std::int64_t>(v % p) : static_cast<std::int64_t>(v % p)));
    }
    FieldPolynomial g(base, coeffs);
    if (g.degree().value_or(0) != k) {
      throw Error("modulus " + g.to_string() + " must have degree " + std::to_string(k) + " for q = " + q_text);
    }
    return extend_by_irreducible(base, g);
  }
  // Default modulus: x^2 + 1 when it is irreducible, otherwise the lexicographically least monic irreducible.
  if (k == 2) {
    FieldPolynomial g = FieldPolynomial::from_integers(base, {1, 0, 1});
    if (is_irreducible(g)) return extend_by_irreducible(base, g);
  }
  std::vector<FieldElem> c(k + 1, 0);
  c[k] = 1;
  while (true) {
    FieldPolynomial g(base, c);
    if (is_irreducible(g)) return extend_by_irreducible(base, g);
    std::size_t j = 0;
    while (j < k && ++c[j] == p) c[j++] = 0;
    if (j == k) throw Error("no irreducible polynomial of degree " + std::to_string(k) + " found");
  }
}

MultSubgroup make_subgroup(const FieldPtr& f, const std::string& choice) {
  const std::string s = choice.empty() ? "squares" : choice;
  if (s == "squares") {
    MultSubgroup g = squares_subgroup(f);
    if (f->is_prime_field()) return g;
    return MultSubgroup::from_elements(f, g.elements(), "(" + f->label() + "^x)^2");
  }
  if (s == "squares-of-base") {
    return squares_subgroup(FiniteField::prime(f->characteristic())).embedded_in(f);
  }
  if (s == "trivial") return MultSubgroup::from_elements(f, {1}, "1");
  if (s == "full") {
    std::vector<FieldElem> all;
    for (FieldElem x = 1; x < f->size(); ++x) all.push_back(x);
    return MultSubgroup::from_elements(f, std::move(all), "units");
  }
  if (s.rfind("gen:", 0) == 0) {
    std::vector<FieldElem> gens;
    std::stringstream ss(s.substr(4));
    std::string item;
    while (std::getline(ss, item, ',')) gens.push_back(f->parse(item));
    if (gens.empty()) throw Error("gen: needs at least one generator");
    return MultSubgroup::generated_by(f, gens, "<" + s.substr(4) + ">");
  }
  throw Error("unknown subgroup '" + s + "' (expected squares, squares-of-base, trivial, full, gen:...)");
}

Resolved resolve(const SourceOptions& s) {
  const int sources = (s.builtin.empty() || s.builtin == "field" ? 0 : 1) + (s.massouros ? 1 : 0) +
                      (s.input.empty() ? 0 : 1) + (s.field.empty() || s.builtin == "field" ? 0 : 1) +
                      (s.builtin == "field" ? 1 : 0);
  if (sources == 0) throw CLI::ValidationError("one of --builtin, --field, --massouros or --input is required");
  if (sources > 1) throw CLI::ValidationError("choose exactly one of --builtin, --field, --massouros, --input");
  if ((!s.subgroup.empty() || !s.modulus.empty()) && (s.field.empty() || s.builtin == "field")) {
    if (!s.subgroup.empty()) throw CLI::ValidationError("--subgroup needs --field (a quotient of a finite field)");
  }
  if (!s.input.empty()) {
    std::ifstream in(s.input);
    if (!in) throw Error("cannot read " + s.input);
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte, "JSON", "malformed exchange record in " + s.input);
    }
    // build --format records wraps the exchange record
    if (rec.is_object() && rec.contains("hyperfield") && rec["hyperfield"].is_object()) rec = rec["hyperfield"];
    return {std::make_shared<const FiniteHyperfield>(from_exchange(rec)), nullptr};
  }
  if (s.massouros) return {massouros_instance(s.massouros), nullptr};
  if (s.builtin == "field") {
    if (s.field.empty()) throw CLI::ValidationError("--builtin field needs --field q");
    return {field_hyperfield(*make_field(s.field, s.modulus)), nullptr};
  }
  if (!s.builtin.empty()) return {builtin(s.builtin), nullptr};
  const FieldPtr f = make_field(s.field, s.modulus);
  QuotientPtr q = build_quotient(f, make_subgroup(f, s.subgroup));
  return {q->hyperfield(), q};
}

Elem resolve_element(const Resolved& r, const std::string& text) {
  if (auto e = r.h->find(text)) return *e;
  if (r.q) {
    try {
      return r.q->class_of(text);
    } catch (const Error&) {
    }
  }
  throw ParseError(0, "element of " + r.h->label(), "unknown element '" + text + "'");
}

nlohmann::ordered_json names(const FiniteHyperfield& h, ElemSet s) {
  auto arr = nlohmann::ordered_json::array();
  for (Elem e : s) arr.push_back(h.name(e));
  return arr;
}

std::string heading(const FiniteHyperfield& h) {
  return (h.label().empty() ? std::string("hyperfield") : h.label()) + ": " + std::to_string(h.size()) + " elements\n";
}

int cmd_build(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o.source);
  if (o.format == "records") {
    nlohmann::ordered_json rec;
    rec["label"] = r.h->label();
    rec["hyperfield"] = to_exchange(*r.h);
    if (r.q) rec["quotient"] = r.q->record();
    out << rec.dump(2) << "\n";
    return kExitOk;
  }
  out << heading(*r.h);
  if (r.q) out << "\n" << r.q->class_listing();
  out << "\n" << cayley_tables(*r.h);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o.source);
  const AxiomReport rep = verify_axioms(*r.h);
  if (o.format == "records") {
    nlohmann::ordered_json rec;
    rec["hyperfield"] = r.h->label();
    rec["report"] = rep.record(*r.h);
    out << rec.dump(2) << "\n";
  } else {
    out << heading(*r.h) << rep.to_string(*r.h);
  }
  return rep.pass() ? kExitOk : kExitNegative;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o.source);
  const HyperPolynomial k = parse_polynomial(r.h, o.poly);
  const Elem xi = resolve_element(r, o.at);
  const ElemSet value = eval(k, xi);
  if (o.format == "records") {
    nlohmann::ordered_json rec;
    rec["hyperfield"] = r.h->label();
    rec["poly"] = k.to_string();
    rec["at"] = r.h->name(xi);
    rec["value"] = names(*r.h, value);
    out << rec.dump(2) << "\n";
  } else {
    out << format_set(*r.h, value) << "\n";
  }
  return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o.source);
  const HyperPolynomial k = parse_polynomial(r.h, o.poly);
  const ElemSet found = roots(k);
  if (o.format == "records") {
    nlohmann::ordered_json rec;
    rec["hyperfield"] = r.h->label();
    rec["poly"] = k.to_string();
    rec["roots"] = names(*r.h, found);
    out << rec.dump(2) << "\n";
  } else {
    out << format_set(*r.h, found) << "\n";
  }
  return found.empty() ? kExitNegative : kExitOk;
}

RootExtension extension_for(const Options& o) {
  const Resolved r = resolve(o.source);
  if (!r.q) {
    throw CLI::ValidationError("root extension needs a quotient hyperfield: use --field q [--subgroup ...]");
  }
  return build_root_extension(r.q, parse_polynomial(r.h, o.poly));
}

int cmd_extend(const Options& o, std::ostream& out) {
  const RootExtension x = extension_for(o);
  if (o.format == "records") {
    out << x.record().dump(2) << "\n";
  } else {
    out << x.to_string();
  }
  return kExitOk;
}

int cmd_minimal(const Options& o, std::ostream& out) {
  const RootExtension x = extension_for(o);
  CertifyOptions opts;
  opts.exhaustive_search = o.exhaustive;
  const MinimalityCertificate cert = certify_minimal(x, builtin(o.base), opts);
  if (o.format == "records") {
    out << cert.record().dump(2) << "\n";
  } else {
    out << x.summary() << "\n" << cert.to_string();
  }
  return cert.verdict == Verdict::kMinimalCertified ? kExitOk : kExitNegative;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const ExperimentReport rep = nonuniqueness_experiment();
  if (o.format == "records") {
    out << rep.record.dump(2) << "\n";
  } else {
    out << rep.text();
  }
  return rep.success ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite hyperfields: quotients, axioms, polynomials, root extensions and minimality certificates",
               "hyperlab"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "table or records (JSON)")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();

  auto* build = app.add_subcommand("build", "print the tables (and class listing) of a hyperfield");
  auto* verify = app.add_subcommand("verify", "check every hyperfield axiom exhaustively");
  auto* evalc = app.add_subcommand("eval", "evaluate a polynomial at an element");
  auto* rootsc = app.add_subcommand("roots", "list the roots of a polynomial");
  auto* extend = app.add_subcommand("extend", "adjoin a root of a rootless polynomial over a quotient");
  auto* minimal = app.add_subcommand("minimal", "certify minimality of the root extension over a base");
  auto* reproduce = app.add_subcommand("reproduce-paper", "run the non-uniqueness experiment end to end");
  for (auto* cmd : {build, verify, evalc, rootsc, extend, minimal}) {
    add_source_options(cmd, o.source);
    cmd->add_option("--format", o.format, "table or records (JSON)")->check(CLI::IsMember({"table", "records"}));
  }
  reproduce->add_option("--format", o.format, "table or records (JSON)")->check(CLI::IsMember({"table", "records"}));
  for (auto* cmd : {evalc, rootsc, extend, minimal}) cmd->add_option("--poly", o.poly, "polynomial, e.g. \"1 + T^2\"")->required();
  evalc->add_option("--at", o.at, "element name")->required();
  minimal->add_option("--base", o.base, "base hyperfield that must embed")
      ->check(CLI::IsMember({"krasner", "signs", "weak_signs"}))
      ->capture_default_str();
  minimal->add_flag("--exhaustive", o.exhaustive, "search for hyperadditions on unobstructed candidates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*build) return cmd_build(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*evalc) return cmd_eval(o, out);
    if (*rootsc) return cmd_roots(o, out);
    if (*extend) return cmd_extend(o, out);
    if (*minimal) return cmd_minimal(o, out);
    if (*reproduce) return cmd_reproduce(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperlab::cli
