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


#include <algorithm>
#include <set>

#include "hyperlab/extend.hpp"
#include "hyperlab/parallel.hpp"

namespace hyperlab {

namespace {

ElemSet closure(const FiniteHyperfield& h, ElemSet gens) {
  ElemSet seen = ElemSet::single(h.one());
  std::vector<Elem> frontier{h.one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem g : gens) {
        const Elem y = h.mul(x, g);
        if (!seen.contains(y)) {
          seen.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::string set_text(const FiniteHyperfield& h, ElemSet s) { return format_set(h, s); }

constexpr const char* kSoundnessNote =
    "A witness pair x, y for a candidate S rules out every weak subhyperfield of L with carrier S ∪ {0}: its sum "
    "x ⊞ y would have to be a nonempty subset of (x ⊞_L y) ∩ (S ∪ {0}), which is empty. The test is one-sided: "
    "an unobstructed proper candidate does not by itself show that a smaller extension exists.";

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kMinimalCertified: return "minimal-certified";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kNotMinimal: return "not-minimal";
  }
  return "?";
}

std::vector<ElemSet> subgroup_candidates(const FiniteHyperfield& l, ElemSet required) {
  const ElemSet need = required - ElemSet::single(l.zero());
  std::vector<ElemSet> cyclic;
  for (Elem u : l.units()) cyclic.push_back(closure(l, ElemSet::single(u)));
  std::set<std::uint64_t> seen{ElemSet::single(l.one()).bits()};
  std::vector<ElemSet> all{ElemSet::single(l.one())};
  for (std::size_t j = 0; j < all.size(); ++j) {
    for (ElemSet c : cyclic) {
      const ElemSet joined = closure(l, all[j] | c);
      if (seen.insert(joined.bits()).second) all.push_back(joined);
    }
  }
  std::vector<ElemSet> out;
  for (ElemSet s : all) {
    if (need.subset_of(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](ElemSet a, ElemSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return out;
}

std::optional<std::pair<Elem, Elem>> weak_closure_obstruction(const FiniteHyperfield& l, ElemSet s,
                                                              std::span<const Elem> priority) {
  if (s.contains(l.zero())) s.erase(l.zero());
  for (Elem x : s) {
    if (!s.contains(l.neg(x))) throw Error("candidate is not closed under negation: " + l.name(x));
  }
  std::vector<Elem> ranked;
  for (Elem p : priority) {
    if (s.contains(p) && std::find(ranked.begin(), ranked.end(), p) == ranked.end()) ranked.push_back(p);
  }
  for (Elem x : s) {
    if (std::find(ranked.begin(), ranked.end(), x) == ranked.end()) ranked.push_back(x);
  }
  const ElemSet allowed = s | ElemSet::single(l.zero());
  for (std::size_t hi = 0; hi < ranked.size(); ++hi) {
    for (std::size_t lo = 0; lo <= hi; ++lo) {
      const Elem a = ranked[lo];
      const Elem b = ranked[hi];
      if (!l.add(a, b).intersects(allowed)) return std::make_pair(std::min(a, b), std::max(a, b));
    }
  }
  return std::nullopt;
}

SearchOutcome search_hyperaddition(const FiniteHyperfield& l, ElemSet s, const HyperfieldMap& base_map,
                                   std::uint64_t budget) {
  s.erase(l.zero());
  const ElemSet carrier = s | ElemSet::single(l.zero());
  const Elem minus_one = l.neg(l.one());
  SearchOutcome out{SearchOutcome::Result::kNone, 0, {}};

  // Local indices for the candidate structure.
  const std::vector<Elem> members = carrier.to_vector();
  std::vector<Elem> local(l.size(), 0);
  for (Elem j = 0; j < members.size(); ++j) local[members[j]] = j;

  // 1 ⊞ t is chosen for one t of each pair {t, t^-1}; the partner is t^-1 · (1 ⊞ t).
  std::vector<Elem> free_units;
  for (Elem t : s) {
    if (t <= l.inv(t)) free_units.push_back(t);
  }
  std::vector<ElemSet> allowed;
  for (Elem t : free_units) {
    ElemSet a = l.add(l.one(), t) & carrier;
    if (t == minus_one) {
      if (!a.contains(l.zero())) return out;
    } else {
      a.erase(l.zero());
    }
    ElemSet partner = l.add(l.one(), l.inv(t)) & carrier;
    ElemSet ok;
    for (Elem e : a) {
      if (partner.contains(l.mul(l.inv(t), e))) ok.insert(e);
    }
    if (ok.empty()) return out;
    allowed.push_back(ok);
  }

  std::vector<ElemSet> choice(free_units.size());
  std::vector<ElemSet> one_plus(l.size());
  const auto leaf = [&]() -> bool {
    for (std::size_t j = 0; j < free_units.size(); ++j) {
      const Elem t = free_units[j];
      one_plus[t] = choice[j];
      one_plus[l.inv(t)] = l.scale(l.inv(t), choice[j]);
    }
    const std::size_t m = members.size();
    std::vector<std::string> names;
    std::vector<Elem> neg(m);
    std::vector<Elem> mul(m * m);
    std::vector<ElemSet> add(m * m);
    for (Elem a = 0; a < m; ++a) {
      names.push_back(l.name(members[a]));
      neg[a] = local[l.neg(members[a])];
      for (Elem b = 0; b < m; ++b) {
        const Elem x = members[a];
        const Elem y = members[b];
        mul[a * m + b] = local[l.mul(x, y)];
        ElemSet sum;
        if (x == l.zero()) {
          sum.insert(y);
        } else if (y == l.zero()) {
          sum.insert(x);
        } else {
          sum = l.scale(x, one_plus[l.mul(l.inv(x), y)]);
        }
        ElemSet loc;
        for (Elem e : sum) loc.insert(local[e]);
        add[a * m + b] = loc;
      }
    }
    const FiniteHyperfield candidate(names, local[l.zero()], local[l.one()], neg, mul, add);
    if (!verify_axioms(candidate).pass()) return false;
    const auto& base = *base_map.source();
    for (Elem a = 0; a < base.size(); ++a) {
      for (Elem b = 0; b < base.size(); ++b) {
        const ElemSet image = base_map.image(base.add(a, b));
        ElemSet target;
        for (Elem e : candidate.add(local[base_map(a)], local[base_map(b)])) target.insert(members[e]);
        if (!image.subset_of(target)) return false;
      }
    }
    return true;
  };

  // Odometer over nonempty subsets of each allowed set.
  std::vector<std::uint64_t> counters(free_units.size(), 1);
  const auto subset = [](ElemSet from, std::uint64_t code) {
    ElemSet out;
    std::size_t bit = 0;
    for (Elem e : from) {
      if ((code >> bit++) & 1U) out.insert(e);
    }
    return out;
  };
  while (true) {
    for (std::size_t j = 0; j < free_units.size(); ++j) choice[j] = subset(allowed[j], counters[j]);
    if (++out.leaves > budget) {
      out.result = SearchOutcome::Result::kBudget;
      return out;
    }
    if (leaf()) {
      out.result = SearchOutcome::Result::kFound;
      for (Elem t : s) out.one_plus.emplace_back(t, one_plus[t]);
      return out;
    }
    std::size_t j = 0;
    while (j < free_units.size()) {
      if (++counters[j] < (std::uint64_t{1} << allowed[j].size())) break;
      counters[j++] = 1;
    }
    if (j == free_units.size()) break;
  }
  return out;
}

MinimalityCertificate certify_minimal(const RootExtension& x, const HyperfieldPtr& base, const CertifyOptions& options) {
  const HyperfieldPtr& lp = x.extension->hyperfield();
  const FiniteHyperfield& l = *lp;
  auto embeddings = find_embeddings(base, lp, MapKind::kWeak);
  if (embeddings.empty()) throw Error(base->label() + " does not embed in " + l.label());
  HyperfieldMap phi = embeddings.front();

  ElemSet gens = phi.image(base->units());
  gens.insert(x.root);
  gens.insert(l.neg(l.one()));
  const ElemSet required = closure(l, gens);

  std::vector<Elem> priority{x.root};
  for (Elem e : required) {
    if (e != x.root) priority.push_back(e);
  }
  const auto subgroups = subgroup_candidates(l, required);
  auto results = map_chunks<std::vector<CandidateResult>>(subgroups.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<CandidateResult> part;
    for (std::size_t j = begin; j < end; ++j) {
      const ElemSet s = subgroups[j];
      CandidateResult r{s, s != l.units(), std::nullopt, {}, std::nullopt};
      r.obstruction = weak_closure_obstruction(l, s, priority);
      if (r.obstruction) {
        r.obstruction_sum = l.add(r.obstruction->first, r.obstruction->second);
      } else if (r.proper && options.exhaustive_search && s.size() <= options.max_search_units) {
        r.search = search_hyperaddition(l, s, phi, options.budget);
      }
      part.push_back(std::move(r));
    }
    return part;
  });
  std::vector<CandidateResult> candidates;
  for (auto& part : results) {
    for (auto& r : part) candidates.push_back(std::move(r));
  }

  Verdict verdict = Verdict::kMinimalCertified;
  for (const auto& c : candidates) {
    if (!c.proper || c.ruled_out()) continue;
    if (c.search && c.search->result == SearchOutcome::Result::kFound) {
      verdict = Verdict::kNotMinimal;
      break;
    }
    verdict = Verdict::kInconclusive;
  }
  return MinimalityCertificate{lp, std::move(phi), x.root, required, std::move(candidates), verdict, kSoundnessNote};
}

std::string MinimalityCertificate::to_string() const {
  const FiniteHyperfield& l = *extension;
  std::string out;
  out += "L = " + l.label() + ", |L^x| = " + std::to_string(l.size() - 1) + "\n";
  out += "base embedding: " + base_embedding.to_string() + "\n";
  out += "root: " + l.name(root) + "\n";
  out += "required R = " + set_text(l, required) + "\n";
  for (const auto& c : candidates) {
    out += "candidate of order " + std::to_string(c.subgroup.size()) + " " + set_text(l, c.subgroup) + ": ";
    if (!c.proper) {
      out += "all of L^x (not proper)\n";
    } else if (c.obstruction) {
      const auto [a, b] = *c.obstruction;
      out += "obstructed by (" + l.name(a) + ", " + l.name(b) + "): " + l.name(a) + " ⊞ " + l.name(b) + " = " +
             set_text(l, c.obstruction_sum) + "\n";
    } else if (c.search) {
      switch (c.search->result) {
        case SearchOutcome::Result::kNone:
          out += "unobstructed; search over " + std::to_string(c.search->leaves) + " hyperadditions found none\n";
          break;
        case SearchOutcome::Result::kFound:
          out += "unobstructed; search found a weak subhyperfield\n";
          break;
        case SearchOutcome::Result::kBudget:
          out += "unobstructed; search budget exhausted\n";
          break;
      }
    } else {
      out += "unobstructed\n";
    }
  }
  out += "verdict: " + std::string(verdict_name(verdict)) + "\n";
  out += "note: " + soundness_note + "\n";
  return out;
}

nlohmann::ordered_json MinimalityCertificate::record() const {
  const FiniteHyperfield& l = *extension;
  const auto names = [&](ElemSet s) {
    auto arr = nlohmann::ordered_json::array();
    for (Elem e : s) arr.push_back(l.name(e));
    return arr;
  };
  nlohmann::ordered_json rec;
  rec["extension"] = l.label();
  rec["units"] = l.size() - 1;
  rec["base_embedding"] = base_embedding.record();
  rec["root"] = l.name(root);
  rec["required"] = names(required);
  auto cands = nlohmann::ordered_json::array();
  for (const auto& c : candidates) {
    nlohmann::ordered_json item;
    item["order"] = c.subgroup.size();
    item["elements"] = names(c.subgroup);
    item["proper"] = c.proper;
    if (c.obstruction) {
      item["obstructed"] = true;
      item["witness"] = {l.name(c.obstruction->first), l.name(c.obstruction->second)};
      item["witness_sum"] = names(c.obstruction_sum);
    } else {
      item["obstructed"] = false;
    }
    if (c.search) {
      static constexpr const char* kResult[] = {"found", "none", "budget"};
      item["search"] = kResult[static_cast<int>(c.search->result)];
      item["search_leaves"] = c.search->leaves;
      if (c.search->result == SearchOutcome::Result::kFound) {
        nlohmann::ordered_json sums = nlohmann::ordered_json::object();
        for (const auto& [t, v] : c.search->one_plus) sums[l.name(l.one()) + " + " + l.name(t)] = names(v);
        item["one_plus"] = sums;
      }
    }
    cands.push_back(item);
  }
  rec["candidates"] = cands;
  rec["verdict"] = verdict_name(verdict);
  rec["soundness_note"] = soundness_note;
  return rec;
}

}  // namespace hyperlab
