// Copyright 2026 The Authors.
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

#include "adasub/instance_io.h"

#include <fstream>
#include <sstream>

#include "adasub/errors.h"
#include "json.hpp"

namespace adasub {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

std::string Where(std::string_view source, const std::string& path) {
  return std::string(source) + ": " + path;
}

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  const json& Field(const json& object, const char* key,
                    const std::string& path) const {
    if (!object.is_object()) Fail(path, "expected an object");
    const auto it = object.find(key);
    if (it == object.end()) Fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  int Int(const json& value, const std::string& path) const {
    if (!value.is_number_integer()) Fail(path, "expected an integer");
    return value.get<int>();
  }

  double Number(const json& value, const std::string& path) const {
    if (!value.is_number()) Fail(path, "expected a number");
    return value.get<double>();
  }

  const json& Array(const json& value, const std::string& path) const {
    if (!value.is_array()) Fail(path, "expected an array");
    return value;
  }

  std::vector<int> IntList(const json& value, const std::string& path) const {
    std::vector<int> out;
    const json& array = Array(value, path);
    for (std::size_t i = 0; i < array.size(); ++i) {
      out.push_back(Int(array[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::string_view source() const { return source_; }

  [[noreturn]] void Fail(const std::string& path,
                         const std::string& message) const {
    throw ParseError(Where(source_, path) + ": " + message);
  }

 private:
  std::string_view source_;
};

std::shared_ptr<const Objective> ReadObjective(const Reader& r, const json& j,
                                               const std::string& path) {
  const json& type_field = r.Field(j, "type", path);
  if (!type_field.is_string()) r.Fail(path + ".type", "expected a string");
  const std::string type = type_field.get<std::string>();
  try {
    if (type == "coverage") {
      const int targets = r.Int(r.Field(j, "targets", path), path + ".targets");
      const std::string covers_path = path + ".covers";
      const json& covers_json = r.Array(r.Field(j, "covers", path), covers_path);
      std::vector<std::vector<std::vector<int>>> covers;
      for (std::size_t e = 0; e < covers_json.size(); ++e) {
        const std::string item_path = covers_path + "[" + std::to_string(e) + "]";
        const json& per_state = r.Array(covers_json[e], item_path);
        auto& out = covers.emplace_back();
        for (std::size_t s = 0; s < per_state.size(); ++s) {
          out.push_back(
              r.IntList(per_state[s], item_path + "[" + std::to_string(s) + "]"));
        }
      }
      return std::make_shared<CoverageObjective>(targets, std::move(covers));
    }
    if (type == "cut") {
      const std::string edges_path = path + ".edges";
      const json& edges_json = r.Array(r.Field(j, "edges", path), edges_path);
      std::vector<WeightedEdge> edges;
      int max_vertex = -1;
      for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string edge_path = edges_path + "[" + std::to_string(i) + "]";
        const json& edge = r.Array(edges_json[i], edge_path);
        if (edge.size() != 3) r.Fail(edge_path, "expected [u, v, weight]");
        WeightedEdge w{r.Int(edge[0], edge_path + "[0]"),
                       r.Int(edge[1], edge_path + "[1]"),
                       r.Number(edge[2], edge_path + "[2]")};
        max_vertex = std::max({max_vertex, w.u, w.v});
        edges.push_back(w);
      }
      int vertices = max_vertex + 1;
      if (j.contains("vertices")) {
        vertices = r.Int(j["vertices"], path + ".vertices");
      }
      return std::make_shared<CutObjective>(vertices, std::move(edges));
    }
    if (type == "sum") {
      const std::string parts_path = path + ".parts";
      const json& parts_json = r.Array(r.Field(j, "parts", path), parts_path);
      std::vector<std::shared_ptr<const Objective>> parts;
      for (std::size_t i = 0; i < parts_json.size(); ++i) {
        parts.push_back(ReadObjective(
            r, parts_json[i], parts_path + "[" + std::to_string(i) + "]"));
      }
      return std::make_shared<SumObjective>(std::move(parts));
    }
    if (type == "squared_cardinality") {
      return std::make_shared<SquaredCardinalityObjective>();
    }
  } catch (const InvalidInputError& e) {
    throw ValidationError(Where(r.source(), path) + ": " + e.what());
  }
  r.Fail(path + ".type", "unknown objective type '" + type + "'");
}

json WriteObjective(const Objective& objective) {
  if (const auto* coverage = dynamic_cast<const CoverageObjective*>(&objective)) {
    return {{"type", "coverage"},
            {"targets", coverage->n_targets()},
            {"covers", coverage->covers()}};
  }
  if (const auto* cut = dynamic_cast<const CutObjective*>(&objective)) {
    json edges = json::array();
    for (const auto& e : cut->edges()) edges.push_back({e.u, e.v, e.weight});
    return {{"type", "cut"}, {"vertices", cut->n_vertices()}, {"edges", edges}};
  }
  if (const auto* sum = dynamic_cast<const SumObjective*>(&objective)) {
    json parts = json::array();
    for (const auto& part : sum->parts()) parts.push_back(WriteObjective(*part));
    return {{"type", "sum"}, {"parts", parts}};
  }
  if (dynamic_cast<const SquaredCardinalityObjective*>(&objective) != nullptr) {
    return {{"type", "squared_cardinality"}};
  }
  throw InvalidInputError("cannot serialize objective type '" +
                          std::string(objective.type()) + "'");
}

std::string LineColumn(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Instance ParseInstance(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true,
                      /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + LineColumn(text, e.byte) +
                     ": malformed document");
  }
  const Reader r(source);
  const int version = r.Int(r.Field(doc, "version", "<root>"), "version");
  if (version != kFormatVersion) {
    r.Fail("version", "unsupported version " + std::to_string(version));
  }
  const int n = r.Int(r.Field(doc, "items", "<root>"), "items");
  if (n < 0) r.Fail("items", "must be non-negative");

  Instance instance;
  instance.name = std::string(source);
  if (doc.contains("name") && doc["name"].is_string()) {
    instance.name = doc["name"].get<std::string>();
  }

  if (doc.contains("joint")) {
    const json& table_json = r.Array(doc["joint"], "joint");
    std::vector<int> alphabets(n, 1);
    const bool explicit_alphabets = doc.contains("alphabets");
    if (explicit_alphabets) {
      alphabets = r.IntList(doc["alphabets"], "alphabets");
      if (static_cast<int>(alphabets.size()) != n) {
        throw ValidationError(Where(source, "alphabets") +
                              ": expected one entry per item");
      }
    }
    std::vector<WeightedRealization> table;
    for (std::size_t i = 0; i < table_json.size(); ++i) {
      const std::string path = "joint[" + std::to_string(i) + "]";
      std::vector<int> assignment =
          r.IntList(r.Field(table_json[i], "assignment", path), path + ".assignment");
      if (static_cast<int>(assignment.size()) != n) {
        throw ValidationError(Where(source, path) +
                              ": assignment must give a state for every item");
      }
      if (!explicit_alphabets) {
        for (int e = 0; e < n; ++e) {
          alphabets[e] = std::max(alphabets[e], assignment[e] + 1);
        }
      }
      const double p = r.Number(r.Field(table_json[i], "probability", path),
                                path + ".probability");
      table.push_back({Realization(std::move(assignment)), p});
    }
    try {
      instance.prior = Prior::Joint(alphabets, std::move(table),
                                    EnumerationLimits::FromEnvironment());
    } catch (const InvalidInputError& e) {
      throw ValidationError(Where(source, "joint") + ": " + e.what());
    }
    instance.ground = GroundSet(alphabets);
  } else {
    const json& states = r.Array(r.Field(doc, "states", "<root>"), "states");
    if (static_cast<int>(states.size()) != n) {
      throw ValidationError(Where(source, "states") + ": expected " +
                            std::to_string(n) + " entries (one per item), got " +
                            std::to_string(states.size()));
    }
    std::vector<std::vector<double>> marginals(n);
    instance.state_labels.resize(n);
    for (int e = 0; e < n; ++e) {
      const std::string path = "states[" + std::to_string(e) + "]";
      const json& item = r.Array(states[e], path);
      for (std::size_t s = 0; s < item.size(); ++s) {
        const std::string state_path = path + "[" + std::to_string(s) + "]";
        marginals[e].push_back(r.Number(
            r.Field(item[s], "probability", state_path), state_path + ".probability"));
        std::string label = "s" + std::to_string(s);
        if (item[s].contains("label")) {
          if (!item[s]["label"].is_string()) {
            r.Fail(state_path + ".label", "expected a string");
          }
          label = item[s]["label"].get<std::string>();
        }
        instance.state_labels[e].push_back(std::move(label));
      }
    }
    std::vector<int> alphabets;
    for (const auto& m : marginals) alphabets.push_back(static_cast<int>(m.size()));
    try {
      instance.prior = Prior::Independent(std::move(marginals));
    } catch (const InvalidInputError& e) {
      throw ValidationError(Where(source, "states") + ": " + e.what());
    }
    instance.ground = GroundSet(std::move(alphabets));
  }

  instance.objective =
      ReadObjective(r, r.Field(doc, "objective", "<root>"), "objective");

  if (doc.contains("matroid")) {
    const json& m = doc["matroid"];
    PartitionMatroid matroid;
    const json& blocks = r.Array(r.Field(m, "blocks", "matroid"), "matroid.blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      matroid.blocks.push_back(
          r.IntList(blocks[i], "matroid.blocks[" + std::to_string(i) + "]"));
    }
    matroid.limits = r.IntList(r.Field(m, "limits", "matroid"), "matroid.limits");
    instance.matroid = std::move(matroid);
  }

  try {
    instance.Validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
  return instance;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str(), path);
}

std::string SerializeInstance(const Instance& instance) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["name"] = instance.name;
  doc["items"] = instance.n();
  if (instance.prior.kind() == Prior::Kind::kJoint) {
    doc["alphabets"] = std::vector<int>(instance.prior.alphabets().begin(),
                                        instance.prior.alphabets().end());
    json table = json::array();
    for (const auto& w : instance.prior.table()) {
      table.push_back(
          {{"assignment", std::vector<int>(w.realization.states().begin(),
                                           w.realization.states().end())},
           {"probability", w.probability}});
    }
    doc["joint"] = table;
  } else {
    json states = json::array();
    for (int e = 0; e < instance.n(); ++e) {
      json item = json::array();
      const auto& probs = instance.prior.marginals()[e];
      for (std::size_t s = 0; s < probs.size(); ++s) {
        std::string label = "s" + std::to_string(s);
        if (e < static_cast<int>(instance.state_labels.size()) &&
            s < instance.state_labels[e].size()) {
          label = instance.state_labels[e][s];
        }
        item.push_back({{"label", label}, {"probability", probs[s]}});
      }
      states.push_back(item);
    }
    doc["states"] = states;
  }
  doc["objective"] = WriteObjective(*instance.objective);
  if (instance.matroid.has_value()) {
    doc["matroid"] = {{"blocks", instance.matroid->blocks},
                      {"limits", instance.matroid->limits}};
  }
  return doc.dump(2) + "\n";
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError(path + ": cannot open for writing");
  out << SerializeInstance(instance);
  if (!out) throw InvalidInputError(path + ": write failed");
}

}  // namespace adasub
