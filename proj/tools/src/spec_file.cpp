/*
   Copyright 2026 The cuphom Authors

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

#include "cuphom/cli/spec_file.hpp"

#include <fstream>
#include <set>

namespace cuphom::cli {

namespace {

std::int64_t as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<std::int64_t>();
}

Integer as_big(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw SchemaError(where + " is not a decimal integer");
    return out;
  }
  throw SchemaError(where + " must be an integer or a decimal string");
}

}  // namespace

ManifoldSpec spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("spec must be a JSON object");
  static const std::set<std::string> known{"b1", "xi", "cup3", "ring", "truncation_power"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw SchemaError("unknown key \"" + key + "\"");
  }
  if (!doc.contains("b1")) throw SchemaError("missing \"b1\"");
  if (!doc.contains("xi")) throw SchemaError("missing \"xi\"");
  const std::int64_t b1 = as_int(doc["b1"], "b1");
  if (b1 < 1 || b1 > 16) throw SchemaError("b1 must lie in 1..16");

  const Json& xs = doc["xi"];
  if (!xs.is_array()) throw SchemaError("xi must be an array");
  if (static_cast<std::int64_t>(xs.size()) != b1) {
    throw SchemaError("xi has " + std::to_string(xs.size()) + " entries, expected b1 = " + std::to_string(b1));
  }
  std::vector<std::int64_t> xi;
  for (std::size_t i = 0; i < xs.size(); ++i) xi.push_back(as_int(xs[i], "xi[" + std::to_string(i) + "]"));

  std::map<CupIndex, Integer> cup;
  if (doc.contains("cup3")) {
    const Json& cs = doc["cup3"];
    if (!cs.is_array()) throw SchemaError("cup3 must be an array");
    for (std::size_t e = 0; e < cs.size(); ++e) {
      const std::string where = "cup3[" + std::to_string(e) + "]";
      if (!cs[e].is_array() || cs[e].size() != 4) throw SchemaError(where + " must be [i, j, k, value]");
      CupIndex idx{};
      for (int t = 0; t < 3; ++t) idx[t] = static_cast<int>(as_int(cs[e][t], where));
      if (!(1 <= idx[0] && idx[0] < idx[1] && idx[1] < idx[2] && idx[2] <= b1)) {
        throw SchemaError(where + " indices must satisfy 1 <= i < j < k <= b1");
      }
      if (cup.count(idx)) throw SchemaError(where + " repeats an index triple");
      cup[idx] = as_big(cs[e][3], where);
    }
  }

  CoeffRing ring = CoeffRing::integers();
  if (doc.contains("ring")) {
    if (!doc["ring"].is_string()) throw SchemaError("ring must be a string");
    ring = CoeffRing::parse(doc["ring"].get<std::string>());
  }
  std::optional<int> power;
  if (doc.contains("truncation_power")) {
    const std::int64_t p = as_int(doc["truncation_power"], "truncation_power");
    if (p < 1 || p > 64) throw SchemaError("truncation_power must lie in 1..64");
    power = static_cast<int>(p);
  }
  return ManifoldSpec(static_cast<int>(b1), xi, cup, ring, power);
}

ManifoldSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open spec file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return spec_from_json(doc);
}

}  // namespace cuphom::cli
