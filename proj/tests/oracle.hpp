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


#ifndef HYPERLAB_TESTS_ORACLE_HPP
#define HYPERLAB_TESTS_ORACLE_HPP

// Slow reference implementations for tests. Nothing here calls into the library's arithmetic.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hyperlab/hyperfield.hpp"
#include "hyperlab/morph.hpp"

namespace oracle {

// a + b·i with i^2 = -1 over F_p, p ≡ 3 (mod 4)
struct Gauss {
  int p;
  int a;
  int b;

  static int mod(int v, int p) { return ((v % p) + p) % p; }
  Gauss operator+(const Gauss& o) const { return {p, mod(a + o.a, p), mod(b + o.b, p)}; }
  Gauss operator*(const Gauss& o) const { return {p, mod(a * o.a - b * o.b, p), mod(a * o.b + b * o.a, p)}; }
  bool operator==(const Gauss& o) const { return a == o.a && b == o.b; }
  bool operator<(const Gauss& o) const { return code() < o.code(); }
  bool is_zero() const { return a == 0 && b == 0; }
  // library encoding: c0 + c1·p
  std::uint32_t code() const { return static_cast<std::uint32_t>(a + b * p); }

  static int sym(int c, int p) { return c > p / 2 ? c - p : c; }
  // "2i-3", "-i", "3"
  std::string name() const {
    const int sa = sym(a, p);
    const int sb = sym(b, p);
    std::string out;
    if (sb != 0) {
      out += sb == 1 ? "" : sb == -1 ? "-" : std::to_string(sb);
      out += "i";
    }
    if (sa != 0 || sb == 0) {
      if (!out.empty() && sa > 0) out += "+";
      out += std::to_string(sa);
    }
    return out;
  }
};

inline std::vector<Gauss> gauss_elements(int p) {
  std::vector<Gauss> out;
  for (int b = 0; b < p; ++b) {
    for (int a = 0; a < p; ++a) out.push_back({p, a, b});
  }
  return out;
}

// nonzero squares of F_p, as elements of F_p[i]
inline std::vector<Gauss> base_squares(int p) {
  std::set<int> sq;
  for (int x = 1; x < p; ++x) sq.insert(x * x % p);
  std::vector<Gauss> out;
  for (int s : sq) out.push_back({p, s, 0});
  return out;
}

using Coset = std::set<std::uint32_t>;

inline Coset coset_of(const Gauss& x, const std::vector<Gauss>& g) {
  Coset c;
  for (const auto& s : g) c.insert((x * s).code());
  return c;
}

// all cosets x·G of F_p[i]
inline std::set<Coset> cosets(int p, const std::vector<Gauss>& g) {
  std::set<Coset> out;
  for (const auto& x : gauss_elements(p)) out.insert(coset_of(x, g));
  return out;
}

// {x' + y' : x' ∈ X, y' ∈ Y} as a union of codes
inline std::set<std::uint32_t> coset_sum(int p, const Coset& x, const Coset& y) {
  std::set<std::uint32_t> out;
  for (auto cx : x) {
    for (auto cy : y) {
      const Gauss gx{p, static_cast<int>(cx % p), static_cast<int>(cx / p)};
      const Gauss gy{p, static_cast<int>(cy % p), static_cast<int>(cy / p)};
      out.insert((gx + gy).code());
    }
  }
  return out;
}

using Turn = boost::rational<std::int64_t>;

inline Turn frac(Turn t) {
  const std::int64_t whole = t.numerator() / t.denominator();
  t -= whole;
  if (t < 0) t += 1;
  return t;
}

// z ∈ x ⊞ y in the phase hyperfield; angles as turns, nullopt-like zero flag
struct Phase {
  bool zero;
  Turn t;
};

inline bool phase_member(const Phase& z, const Phase& x, const Phase& y) {
  if (x.zero) return y.zero ? z.zero : (!z.zero && z.t == y.t);
  if (y.zero) return !z.zero && z.t == x.t;
  const Turn d = frac(y.t - x.t);
  if (d == Turn(0)) return !z.zero && z.t == x.t;
  if (d == Turn(1, 2)) return z.zero || z.t == x.t || z.t == y.t;
  if (z.zero) return false;
  // open shorter arc
  if (d < Turn(1, 2)) {
    const Turn e = frac(z.t - x.t);
    return e > 0 && e < d;
  }
  const Turn e = frac(z.t - y.t);
  return e > 0 && e < 1 - d;
}

// direct classification from the definitions: weak iff φ(x ⊞ y) ⊆ φ(x) ⊞ φ(y), strong iff equal
inline hyperlab::MapKind classify(const hyperlab::FiniteHyperfield& k, const hyperlab::FiniteHyperfield& l,
                                  const std::vector<hyperlab::Elem>& img) {
  using hyperlab::Elem;
  if (img[k.zero()] != l.zero() || img[k.one()] != l.one()) return hyperlab::MapKind::kNotHom;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      if (img[k.mul(x, y)] != l.mul(img[x], img[y])) return hyperlab::MapKind::kNotHom;
    }
  }
  bool strong = true;
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      std::set<Elem> lhs;
      for (Elem z = 0; z < k.size(); ++z) {
        if (k.add(x, y).contains(z)) lhs.insert(img[z]);
      }
      std::set<Elem> rhs;
      for (Elem z = 0; z < l.size(); ++z) {
        if (l.add(img[x], img[y]).contains(z)) rhs.insert(z);
      }
      if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())) return hyperlab::MapKind::kNotHom;
      if (lhs != rhs) strong = false;
    }
  }
  return strong ? hyperlab::MapKind::kStrong : hyperlab::MapKind::kWeak;
}

}  // namespace oracle

#endif  // HYPERLAB_TESTS_ORACLE_HPP
