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

#include "hyperlab/hyperfield.hpp"

namespace hyperlab {

namespace {

std::string compact_set(const FiniteHyperfield& h, ElemSet s) {
  std::string out = "{";
  for (Elem e : s) out += (out.size() > 1 ? "," : "") + h.name(e);
  return out + "}";
}

// Display width of ASCII text plus the single-column operator glyphs.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80 ? 1 : 0;
  return w;
}

std::string table(const std::string& corner, const std::vector<std::string>& heads,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(heads.size() + 1, width(corner));
  for (std::size_t r = 0; r < rows.size(); ++r) widths[0] = std::max(widths[0], width(heads[r]));
  for (std::size_t c = 0; c < heads.size(); ++c) {
    widths[c + 1] = width(heads[c]);
    for (const auto& row : rows) widths[c + 1] = std::max(widths[c + 1], width(row[c]));
  }
  auto line = [&](const std::string& first, const std::vector<std::string>& cells) {
    std::string out = first + std::string(widths[0] - width(first), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += " | " + cells[c];
      if (c + 1 < cells.size()) out += std::string(widths[c + 1] - width(cells[c]), ' ');
    }
    return out + "\n";
  };
  std::string out = line(corner, heads);
  std::size_t total = widths[0];
  for (std::size_t c = 1; c < widths.size(); ++c) total += 3 + widths[c];
  out += std::string(total, '-') + "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) out += line(heads[r], rows[r]);
  return out;
}

Elem lookup(const std::vector<std::string>& names, const nlohmann::json& v, const char* where) {
  if (!v.is_string()) throw Error(std::string("exchange record: ") + where + " must be an element name");
  const auto it = std::find(names.begin(), names.end(), v.get<std::string>());
  if (it == names.end()) {
    throw Error(std::string("exchange record: unknown element '") + v.get<std::string>() + "' in " + where);
  }
  return static_cast<Elem>(it - names.begin());
}

}  // namespace

nlohmann::ordered_json to_exchange(const FiniteHyperfield& h) {
  nlohmann::ordered_json rec;
  rec["elements"] = h.names();
  rec["zero"] = h.name(h.zero());
  rec["one"] = h.name(h.one());
  nlohmann::ordered_json neg = nlohmann::ordered_json::object();
  for (Elem a = 0; a < h.size(); ++a) neg[h.name(a)] = h.name(h.neg(a));
  rec["neg"] = neg;
  auto mul = nlohmann::ordered_json::array();
  auto add = nlohmann::ordered_json::array();
  for (Elem a = 0; a < h.size(); ++a) {
    auto mrow = nlohmann::ordered_json::array();
    auto arow = nlohmann::ordered_json::array();
    for (Elem b = 0; b < h.size(); ++b) {
      mrow.push_back(h.name(h.mul(a, b)));
      auto cell = nlohmann::ordered_json::array();
      for (Elem e : h.add(a, b)) cell.push_back(h.name(e));
      arow.push_back(cell);
    }
    mul.push_back(mrow);
    add.push_back(arow);
  }
  rec["mul"] = mul;
  rec["add"] = add;
  if (!h.label().empty()) rec["label"] = h.label();
  return rec;
}

FiniteHyperfield from_exchange(const nlohmann::json& rec) {
  if (!rec.is_object()) throw Error("exchange record must be an object");
  for (const char* key : {"elements", "zero", "one", "neg", "mul", "add"}) {
    if (!rec.contains(key)) throw Error(std::string("exchange record is missing '") + key + "'");
  }
  const auto names = rec.at("elements").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  if (n < 2 || n > kMaxCarrier) throw Error("exchange record: carrier size must be in 2..64");
  const Elem zero = lookup(names, rec.at("zero"), "zero");
  const Elem one = lookup(names, rec.at("one"), "one");
  std::vector<Elem> neg(n);
  const auto& negs = rec.at("neg");
  if (!negs.is_object() || negs.size() != n) throw Error("exchange record: neg must map every element");
  for (Elem a = 0; a < n; ++a) {
    if (!negs.contains(names[a])) throw Error("exchange record: neg has no entry for '" + names[a] + "'");
    neg[a] = lookup(names, negs.at(names[a]), "neg");
  }
  const auto& mul_rows = rec.at("mul");
  const auto& add_rows = rec.at("add");
  if (!mul_rows.is_array() || mul_rows.size() != n || !add_rows.is_array() || add_rows.size() != n) {
    throw Error("exchange record: mul and add must have one row per element");
  }
  std::vector<Elem> mul(n * n);
  std::vector<ElemSet> add(n * n);
  for (Elem a = 0; a < n; ++a) {
    if (mul_rows[a].size() != n || add_rows[a].size() != n) throw Error("exchange record: ragged table row");
    for (Elem b = 0; b < n; ++b) {
      mul[a * n + b] = lookup(names, mul_rows[a][b], "mul");
      if (!add_rows[a][b].is_array()) throw Error("exchange record: add cells must be lists of names");
      for (const auto& e : add_rows[a][b]) add[a * n + b].insert(lookup(names, e, "add"));
    }
  }
  const std::string label = rec.contains("label") ? rec.at("label").get<std::string>() : std::string();
  return FiniteHyperfield(names, zero, one, std::move(neg), std::move(mul), std::move(add), label);
}

std::string cayley_tables(const FiniteHyperfield& h) {
  std::vector<std::string> all = h.names();
  std::vector<std::vector<std::string>> add_rows;
  for (Elem a = 0; a < h.size(); ++a) {
    std::vector<std::string> row;
    for (Elem b = 0; b < h.size(); ++b) row.push_back(compact_set(h, h.add(a, b)));
    add_rows.push_back(std::move(row));
  }
  std::vector<std::string> units;
  std::vector<std::vector<std::string>> mul_rows;
  for (Elem a : h.units()) units.push_back(h.name(a));
  for (Elem a : h.units()) {
    std::vector<std::string> row;
    for (Elem b : h.units()) row.push_back(h.name(h.mul(a, b)));
    mul_rows.push_back(std::move(row));
  }
  return table("⊞", all, add_rows) + "\n" + table("⊙", units, mul_rows);
}

}  // namespace hyperlab
