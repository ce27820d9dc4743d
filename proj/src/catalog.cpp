// Copyright 2026 The jjdeform Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jjdeform/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace jj {
namespace {

struct Entry {
  std::size_t i, j, k;
  int coef;
};

// Products e_i e_j = coef e_k, 1-based, for the indecomposable algebras.
const std::map<std::string, std::pair<std::size_t, std::vector<Entry>>, std::less<>>&
indecomposables() {
  static const std::map<std::string, std::pair<std::size_t, std::vector<Entry>>, std::less<>>
      table = {
          {"J_1_2", {2, {{1, 1, 2, 1}}}},
          {"J_1_3", {3, {{1, 1, 2, 1}, {3, 3, 2, 1}}}},
          {"J_1_4", {4, {{1, 1, 2, 1}, {1, 3, 4, 1}}}},
          {"J_2_4", {4, {{1, 1, 2, 1}, {3, 4, 2, 1}}}},
          {"J_1_5", {5, {{1, 1, 2, 1}, {1, 3, 5, 1}, {3, 3, 4, 1}}}},
          {"J_2_5", {5, {{1, 1, 2, 1}, {1, 4, 5, 1}, {3, 3, 5, 1}}}},
          {"J_3_5",
           {5, {{1, 1, 2, 1}, {1, 4, 5, 1}, {3, 4, 5, 1}, {3, 3, 2, -1}, {3, 3, 5, 1}}}},
          {"J_4_5", {5, {{1, 1, 2, 1}, {3, 3, 4, 1}, {5, 5, 2, -1}, {5, 5, 4, 1}}}},
          {"J_5_5", {5, {{1, 1, 2, 1}, {3, 3, 4, 1}, {3, 5, 2, -1}, {3, 5, 4, 1}}}},
          {"J_6_5", {5, {{1, 1, 2, 1}, {1, 4, 2, 1}, {1, 3, 5, 1}}}},
          {"J_7_5", {5, {{1, 1, 2, 1}, {3, 3, 2, 1}, {4, 5, 2, 1}}}},
          {"J_8_5", {5, {{1, 1, 2, 1}, {1, 4, 5, 1}, {2, 4, 3, 2}, {1, 5, 3, -1}}}},
      };
  return table;
}

JJAlgebra build(std::string_view name) {
  auto it = indecomposables().find(name);
  if (it == indecomposables().end()) throw Error("unknown algebra '" + std::string(name) + "'");
  JJAlgebra a(std::string(name), it->second.first);
  for (const auto& e : it->second.second) a.add_product(e.i - 1, e.j - 1, e.k - 1, e.coef);
  return a;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// One summand in normalized spelling: its algebra and canonical text.
struct Summand {
  JJAlgebra algebra;
  std::string text;
  std::size_t trivial_dim = 0;  // nonzero only for F^k summands
};

Summand parse_summand(const std::string& s) {
  if (s == "F") return {trivial_algebra(1), "F", 1};
  if (s.size() > 1 && s[0] == 'F') {
    std::string rest = s.substr(s[1] == '^' ? 2 : 1);
    if (!all_digits(rest)) throw Error("unknown algebra summand '" + s + "'");
    std::size_t k = std::stoul(rest);
    return {trivial_algebra(k), "F" + rest, k};
  }
  if (s.size() > 2 && s[0] == 'H' && s[1] == '_' && all_digits(s.substr(2))) {
    JJAlgebra h = heisenberg(std::stoul(s.substr(2)));
    return {h, h.name(), 0};
  }
  std::string base = s;
  std::size_t power = 1;
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    std::string p = s.substr(caret + 1);
    if (!all_digits(p)) throw Error("unknown algebra summand '" + s + "'");
    power = std::stoul(p);
    base = s.substr(0, caret);
    if (power == 0) throw Error("zero power in '" + s + "'");
  }
  JJAlgebra one = build(base);
  JJAlgebra acc = one;
  for (std::size_t i = 1; i < power; ++i) acc = direct_sum(acc, one);
  std::string text = power == 1 ? base : base + "^" + std::to_string(power);
  acc.set_name(text);
  return {acc, text, 0};
}

std::vector<std::string> split_summands(std::string_view name) {
  std::string s(name);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  s = replace_all(s, "\\oplus", "+");
  s = replace_all(s, "\xE2\x8A\x95", "+");  // U+2295
  s = replace_all(s, "(+)", "+");
  s = replace_all(s, "\\mathbb{F}", "F");
  s = replace_all(s, "\\J", "J");
  // J_{1,2} -> J_1_2 ; F^{2} -> F^2
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '{' || c == '}') continue;
    if (c == ',') {
      out += '_';
      continue;
    }
    out += c;
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = out.find('+', start);
    parts.push_back(out.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  for (const auto& p : parts)
    if (p.empty()) throw Error("malformed algebra name '" + std::string(name) + "'");
  return parts;
}

std::pair<JJAlgebra, std::string> parse_name(std::string_view name) {
  std::vector<std::string> parts = split_summands(name);
  // A lone F^m (or F) is the zero algebra of that dimension.
  if (parts.size() == 1 && parts[0][0] == 'F') {
    Summand t = parse_summand(parts[0]);
    std::string text = "F^" + std::to_string(t.trivial_dim);
    JJAlgebra a = trivial_algebra(t.trivial_dim);
    a.set_name(text);
    return {a, text};
  }
  JJAlgebra acc("", 0);
  std::string text;
  std::size_t trivial = 0;
  for (const auto& p : parts) {
    Summand s = parse_summand(p);
    if (s.algebra.is_trivial() && p[0] == 'F') {
      trivial += s.trivial_dim;
      continue;
    }
    if (trivial > 0) throw Error("trivial summands must come last in '" + std::string(name) + "'");
    acc = acc.dim() == 0 ? s.algebra : direct_sum(acc, s.algebra);
    text += (text.empty() ? "" : "+") + s.text;
  }
  if (trivial > 0) {
    acc = direct_sum(acc, trivial_algebra(trivial));
    text += trivial == 1 ? "+F" : "+F" + std::to_string(trivial);
  }
  acc.set_name(text);
  return {acc, text};
}

#include "catalog_data.inc"

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    auto comma = s.find(", ", start);
    out.emplace_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 2;
  }
  return out;
}

std::vector<std::string> lookup(
    const std::vector<std::pair<std::string_view, std::string_view>>& table,
    std::string_view name) {
  std::string key = canonical_name(name);
  for (const auto& [k, v] : table)
    if (k == key) return split_list(v);
  return {};
}

}  // namespace

std::string canonical_name(std::string_view name) { return parse_name(name).second; }

JJAlgebra catalog(std::string_view name) { return parse_name(name).first; }

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "J_1_2",
      "J_1_2+F",  "J_1_3",
      "J_1_2+F2", "J_1_3+F", "J_1_2^2", "J_1_4", "J_2_4",
      "J_1_2+F3", "J_1_3+F2", "J_1_2^2+F", "J_1_4+F", "J_2_4+F", "J_1_2+J_1_3",
      "J_1_5",    "J_2_5",    "J_3_5",     "J_4_5",   "J_5_5",   "J_6_5",
      "J_7_5",    "J_8_5",
  };
  return names;
}

std::vector<std::string> catalog_names(std::size_t dim) {
  std::vector<std::string> out;
  for (const auto& n : catalog_names())
    if (catalog(n).dim() == dim) out.push_back(n);
  return out;
}

bool is_indecomposable(std::string_view name) {
  std::string key = canonical_name(name);
  return indecomposables().count(key) > 0;
}

std::vector<std::string> reference_representatives(std::string_view name) {
  return lookup(kReferenceReps, name);
}

std::vector<std::string> reference_extendible(std::string_view name) {
  return lookup(kReferenceExtendible, name);
}

}  // namespace jj
