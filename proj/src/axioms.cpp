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


#include <functional>

#include "hyperlab/hyperfield.hpp"
#include "hyperlab/parallel.hpp"

namespace hyperlab {

namespace {

struct Failure {
  std::vector<Elem> witness;
  std::string detail;
};
using MaybeFailure = std::optional<Failure>;

// First failure over x in [0, n), with x ranges handled by separate workers.
MaybeFailure first_over_x(std::size_t n, const std::function<MaybeFailure(Elem)>& check_x) {
  auto chunks = map_chunks<MaybeFailure>(
      n,
      [&](std::size_t begin, std::size_t end) -> MaybeFailure {
        for (std::size_t x = begin; x < end; ++x) {
          if (auto f = check_x(static_cast<Elem>(x))) return f;
        }
        return std::nullopt;
      },
      8);
  for (auto& c : chunks) {
    if (c) return c;
  }
  return std::nullopt;
}

ElemSet right_scale(const FiniteHyperfield& h, ElemSet s, Elem z) {
  ElemSet out;
  for (Elem e : s) out.insert(h.mul(e, z));
  return out;
}

ElemSet sum_with(const FiniteHyperfield& h, ElemSet s, Elem z) {
  ElemSet out;
  for (Elem e : s) out |= h.add(e, z);
  return out;
}

ElemSet sum_with(const FiniteHyperfield& h, Elem x, ElemSet s) {
  ElemSet out;
  for (Elem e : s) out |= h.add(x, e);
  return out;
}

MaybeFailure check_mul_group(const FiniteHyperfield& h) {
  const std::size_t n = h.size();
  const Elem zero = h.zero();
  const Elem one = h.one();
  const auto& nm = [&](Elem e) -> const std::string& { return h.name(e); };
  for (Elem x = 0; x < n; ++x) {
    if (x == zero) continue;
    for (Elem y = 0; y < n; ++y) {
      if (y != zero && h.mul(x, y) == zero) return Failure{{x, y}, "product of units " + nm(x) + " ⊙ " + nm(y) + " is 0"};
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (x != zero && (h.mul(one, x) != x || h.mul(x, one) != x)) return Failure{{x}, "1 is not an identity for " + nm(x)};
  }
  for (Elem x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) found = y != zero && h.mul(x, y) == one && h.mul(y, x) == one;
    if (!found) return Failure{{x}, nm(x) + " has no multiplicative inverse"};
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x != zero && y != zero && h.mul(x, y) != h.mul(y, x)) return Failure{{x, y}, "⊙ is not commutative"};
    }
  }
  return first_over_x(n, [&](Elem x) -> MaybeFailure {
    if (x == zero) return std::nullopt;
    for (Elem y = 0; y < n; ++y) {
      if (y == zero) continue;
      for (Elem z = 0; z < n; ++z) {
        if (z != zero && h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z))) {
          return Failure{{x, y, z}, "⊙ is not associative"};
        }
      }
    }
    return std::nullopt;
  });
}

MaybeFailure check_zero_absorbing(const FiniteHyperfield& h) {
  for (Elem x = 0; x < h.size(); ++x) {
    if (h.mul(h.zero(), x) != h.zero() || h.mul(x, h.zero()) != h.zero()) {
      return Failure{{x}, "0 ⊙ " + h.name(x) + " is not 0"};
    }
  }
  return std::nullopt;
}

MaybeFailure check_distributive_left(const FiniteHyperfield& h) {
  const std::size_t n = h.size();
  return first_over_x(n, [&](Elem x) -> MaybeFailure {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (h.scale(x, h.add(y, z)) != h.add(h.mul(x, y), h.mul(x, z))) {
          return Failure{{x, y, z}, "x ⊙ (y ⊞ z) differs from (x ⊙ y) ⊞ (x ⊙ z)"};
        }
      }
    }
    return std::nullopt;
  });
}

MaybeFailure check_distributive_right(const FiniteHyperfield& h) {
  const std::size_t n = h.size();
  return first_over_x(n, [&](Elem x) -> MaybeFailure {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (right_scale(h, h.add(x, y), z) != h.add(h.mul(x, z), h.mul(y, z))) {
          return Failure{{x, y, z}, "(x ⊞ y) ⊙ z differs from (x ⊙ z) ⊞ (y ⊙ z)"};
        }
      }
    }
    return std::nullopt;
  });
}

MaybeFailure check_associative(const FiniteHyperfield& h) {
  const std::size_t n = h.size();
  return first_over_x(n, [&](Elem x) -> MaybeFailure {
    for (Elem y = 0; y < n; ++y) {
      const ElemSet xy = h.add(x, y);
      for (Elem z = 0; z < n; ++z) {
        const ElemSet lhs = sum_with(h, xy, z);
        const ElemSet rhs = sum_with(h, x, h.add(y, z));
        if (lhs != rhs) {
          return Failure{{x, y, z}, "(x ⊞ y) ⊞ z = " + format_set(h, lhs) + " but x ⊞ (y ⊞ z) = " + format_set(h, rhs)};
        }
      }
    }
    return std::nullopt;
  });
}

MaybeFailure check_commutative(const FiniteHyperfield& h) {
  for (Elem x = 0; x < h.size(); ++x) {
    for (Elem y = 0; y < h.size(); ++y) {
      if (h.add(x, y) != h.add(y, x)) return Failure{{x, y}, "x ⊞ y differs from y ⊞ x"};
    }
  }
  return std::nullopt;
}

MaybeFailure check_zero_identity(const FiniteHyperfield& h) {
  for (Elem x = 0; x < h.size(); ++x) {
    if (h.add(h.zero(), x) != ElemSet::single(x) || h.add(x, h.zero()) != ElemSet::single(x)) {
      return Failure{{x}, "0 ⊞ " + h.name(x) + " is not {" + h.name(x) + "}"};
    }
  }
  return std::nullopt;
}

MaybeFailure check_unique_inverse(const FiniteHyperfield& h) {
  const Elem zero = h.zero();
  for (Elem x = 0; x < h.size(); ++x) {
    const Elem nx = h.neg(x);
    if (!h.add(x, nx).contains(zero) || !h.add(nx, x).contains(zero)) {
      return Failure{{x, nx}, "0 ∉ " + h.name(x) + " ⊞ " + h.name(nx)};
    }
    for (Elem y = 0; y < h.size(); ++y) {
      if (y != nx && h.add(x, y).contains(zero)) {
        return Failure{{x, y}, "0 ∈ " + h.name(x) + " ⊞ " + h.name(y) + " but -" + h.name(x) + " = " + h.name(nx)};
      }
    }
  }
  return std::nullopt;
}

MaybeFailure check_reversibility(const FiniteHyperfield& h) {
  const std::size_t n = h.size();
  return first_over_x(n, [&](Elem x) -> MaybeFailure {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const bool forward = h.add(y, z).contains(x);
        const bool backward = h.add(h.neg(x), z).contains(h.neg(y));
        if (forward != backward) return Failure{{x, y, z}, "x ∈ y ⊞ z does not match -y ∈ -x ⊞ z"};
      }
    }
    return std::nullopt;
  });
}

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kMulGroup: return "mul_group";
    case Axiom::kZeroAbsorbing: return "zero_absorbing";
    case Axiom::kDistributiveLeft: return "distributive_left";
    case Axiom::kDistributiveRight: return "distributive_right";
    case Axiom::kAddAssociative: return "add_associative";
    case Axiom::kAddCommutative: return "add_commutative";
    case Axiom::kZeroIdentity: return "zero_identity";
    case Axiom::kUniqueInverse: return "unique_inverse";
    case Axiom::kReversibility: return "reversibility";
  }
  return "?";
}

bool AxiomReport::pass() const {
  for (const auto& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

const ClauseResult& AxiomReport::clause(Axiom a) const {
  for (const auto& c : clauses) {
    if (c.axiom == a) return c;
  }
  throw Error("axiom report has no clause " + std::string(axiom_name(a)));
}

std::string AxiomReport::to_string(const FiniteHyperfield& h) const {
  std::string out;
  for (const auto& c : clauses) {
    out += std::string(axiom_name(c.axiom)) + ": ";
    if (c.pass) {
      out += "pass\n";
      continue;
    }
    out += "FAIL witness (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) out += (i ? ", " : "") + h.name(c.witness[i]);
    out += ") " + c.detail + "\n";
  }
  out += std::string("verdict: ") + (pass() ? "pass" : "fail") + "\n";
  return out;
}

nlohmann::ordered_json AxiomReport::record(const FiniteHyperfield& h) const {
  nlohmann::ordered_json rec;
  rec["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : clauses) {
    nlohmann::ordered_json item;
    item["axiom"] = axiom_name(c.axiom);
    item["pass"] = c.pass;
    if (!c.pass) {
      auto w = nlohmann::ordered_json::array();
      for (Elem e : c.witness) w.push_back(h.name(e));
      item["witness"] = w;
      item["detail"] = c.detail;
    }
    arr.push_back(item);
  }
  rec["clauses"] = arr;
  return rec;
}

AxiomReport verify_axioms(const FiniteHyperfield& h) {
  using Check = MaybeFailure (*)(const FiniteHyperfield&);
  static constexpr std::pair<Axiom, Check> kChecks[] = {
      {Axiom::kMulGroup, check_mul_group},
      {Axiom::kZeroAbsorbing, check_zero_absorbing},
      {Axiom::kDistributiveLeft, check_distributive_left},
      {Axiom::kDistributiveRight, check_distributive_right},
      {Axiom::kAddAssociative, check_associative},
      {Axiom::kAddCommutative, check_commutative},
      {Axiom::kZeroIdentity, check_zero_identity},
      {Axiom::kUniqueInverse, check_unique_inverse},
      {Axiom::kReversibility, check_reversibility},
  };
  AxiomReport report;
  for (const auto& [axiom, check] : kChecks) {
    ClauseResult r{axiom, true, {}, {}};
    if (auto f = check(h)) {
      r.pass = false;
      r.witness = std::move(f->witness);
      r.detail = std::move(f->detail);
    }
    report.clauses.push_back(std::move(r));
  }
  return report;
}

}  // namespace hyperlab
