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


#include <cctype>
#include <map>

#include "hyperlab/hpoly.hpp"

namespace hyperlab {

namespace {

constexpr std::size_t kMaxPower = 1000;

// ASCII copy of the input with ⊞ → '+' and − → '-', remembering where each character came from.
struct Source {
  std::string text;
  std::vector<std::size_t> origin;
  std::size_t raw_size = 0;

  explicit Source(std::string_view raw) : raw_size(raw.size()) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string_view rest = raw.substr(i);
      if (rest.starts_with("⊞")) {
        text.push_back('+');
        origin.push_back(i);
        i += 2;
      } else if (rest.starts_with("−")) {
        text.push_back('-');
        origin.push_back(i);
        i += 2;
      } else {
        text.push_back(raw[i]);
        origin.push_back(i);
      }
    }
  }
  std::size_t at(std::size_t pos) const { return pos < origin.size() ? origin[pos] : raw_size; }
};

class Parser {
 public:
  Parser(const HyperfieldPtr& h, std::string_view raw) : h_(h), src_(raw) {}

  HyperPolynomial parse() {
    std::map<std::size_t, Elem> terms;
    skip_space();
    if (pos_ >= s().size()) fail("polynomial term", "empty polynomial");
    while (true) {
      const std::size_t start = pos_;
      auto [coeff, power] = term();
      if (!terms.emplace(power, coeff).second) {
        throw ParseError(src_.at(start), "a new power of T", "T^" + std::to_string(power) + " appears twice");
      }
      skip_space();
      if (pos_ >= s().size()) break;
      if (s()[pos_] != '+') fail("'+' or end of input", std::string("unexpected '") + s()[pos_] + "'");
      ++pos_;
      skip_space();
    }
    std::vector<Elem> coeffs(terms.rbegin()->first + 1, h_->zero());
    for (const auto& [power, c] : terms) coeffs[power] = c;
    return HyperPolynomial(h_, std::move(coeffs));
  }

 private:
  const std::string& s() const { return src_.text; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(src_.at(pos_), expected, message);
  }

  void skip_space() {
    while (pos_ < s().size() && std::isspace(static_cast<unsigned char>(s()[pos_]))) ++pos_;
  }

  bool at_t() const { return pos_ < s().size() && s()[pos_] == 'T'; }

  std::pair<Elem, std::size_t> term() {
    Elem coeff = h_->one();
    if (!at_t() && s()[pos_] == '-' && next_nonspace_is_t(pos_ + 1)) {
      coeff = h_->neg(h_->one());
      ++pos_;
      skip_space();
    } else if (!at_t()) {
      coeff = coefficient();
      skip_space();
      if (pos_ < s().size() && s()[pos_] == '*') {
        ++pos_;
        skip_space();
        if (!at_t()) fail("'T'", "dangling '*'");
      }
    }
    if (!at_t()) return {coeff, 0};
    ++pos_;
    skip_space();
    if (pos_ >= s().size() || s()[pos_] != '^') return {coeff, 1};
    ++pos_;
    skip_space();
    if (pos_ >= s().size() || !std::isdigit(static_cast<unsigned char>(s()[pos_]))) fail("exponent", "missing exponent");
    std::size_t power = 0;
    while (pos_ < s().size() && std::isdigit(static_cast<unsigned char>(s()[pos_]))) {
      power = power * 10 + static_cast<std::size_t>(s()[pos_] - '0');
      if (power > kMaxPower) fail("exponent at most 1000", "exponent too large");
      ++pos_;
    }
    return {coeff, power};
  }

  bool next_nonspace_is_t(std::size_t p) const {
    while (p < s().size() && std::isspace(static_cast<unsigned char>(s()[p]))) ++p;
    return p < s().size() && s()[p] == 'T';
  }

  Elem coefficient() {
    const std::size_t start = pos_;
    std::string name;
    if (s()[pos_] == '[') {
      const std::size_t close = s().find(']', pos_);
      if (close == std::string::npos) {
        pos_ = s().size();
        fail("']'", "unterminated bracket");
      }
      name = s().substr(pos_, close + 1 - pos_);
      pos_ = close + 1;
    } else {
      while (pos_ < s().size()) {
        const char c = s()[pos_];
        if (std::isspace(static_cast<unsigned char>(c)) || c == 'T' || c == '*' || c == '[' || c == ']') break;
        if (c == '+' && pos_ > start) break;
        ++pos_;
      }
      name = s().substr(start, pos_ - start);
    }
    if (name.empty()) {
      pos_ = start;
      fail("coefficient or 'T'", "missing term");
    }
    if (auto e = h_->find(name)) return *e;
    pos_ = start;
    fail("element name of " + (h_->label().empty() ? std::string("the hyperfield") : h_->label()),
         "unknown element '" + name + "'");
  }

  HyperfieldPtr h_;
  Source src_;
  std::size_t pos_ = 0;
};

}  // namespace

HyperPolynomial parse_polynomial(const HyperfieldPtr& h, std::string_view text) { return Parser(h, text).parse(); }

}  // namespace hyperlab
