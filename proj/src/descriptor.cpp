#include "matroidlab/descriptor.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

namespace matroidlab {

namespace {

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}

void check_fields(const json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* a : allowed)
      if (it.key() == a) known = true;
    if (!known) throw SchemaError(path + "." + it.key(), "unknown field");
  }
  for (const char* a : allowed)
    if (!j.contains(a)) throw SchemaError(path + "." + a, "missing field");
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

GroundSet ground_of(const json& j, const std::string& path) {
  auto ids = string_list(j, path);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!seen.insert(ids[i]).second)
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "duplicate element id '" + ids[i] + "'");
  try {
    return GroundSet(ids);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

int nonneg_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw SchemaError(path, "expected a nonnegative integer");
  return j.get<int>();
}

}  // namespace

GraphInstance graph_from_json(const json& j, const std::string& path) {
  expect_object(j, path);
  check_fields(j, path, {"vertices", "edges"});
  GraphInstance g;
  g.vertices = string_list(j["vertices"], path + ".vertices");
  const json& edges = j["edges"];
  if (!edges.is_array()) throw SchemaError(path + ".edges", "expected an array");
  std::unordered_set<std::string> vset(g.vertices.begin(), g.vertices.end());
  if (vset.size() != g.vertices.size())
    throw SchemaError(path + ".vertices", "duplicate vertex");
  std::unordered_set<std::string> eids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string epath = path + ".edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw SchemaError(epath, "expected [\"id\",\"tail\",\"head\"]");
    GraphEdge ge{e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()};
    if (!eids.insert(ge.id).second)
      throw SchemaError(epath + "[0]", "duplicate edge id '" + ge.id + "'");
    if (!vset.count(ge.tail)) throw SchemaError(epath + "[1]", "unknown endpoint '" + ge.tail + "'");
    if (!vset.count(ge.head)) throw SchemaError(epath + "[2]", "unknown endpoint '" + ge.head + "'");
    g.edges.push_back(std::move(ge));
  }
  return g;
}

Matroid graphic_from_instance(const GraphInstance& g) {
  return Matroid::graphic(g.vertices, g.edges);
}

Matroid matroid_from_descriptor(const json& j, const std::string& path) {
  expect_object(j, path);
  if (!j.contains("type")) throw SchemaError(path + ".type", "missing field");
  if (!j["type"].is_string()) throw SchemaError(path + ".type", "expected a string");
  const std::string type = j["type"].get<std::string>();

  if (type == "uniform") {
    check_fields(j, path, {"type", "k", "ground"});
    int k = nonneg_int(j["k"], path + ".k");
    return Matroid::uniform(k, ground_of(j["ground"], path + ".ground"));
  }
  if (type == "circuit") {
    check_fields(j, path, {"type", "ground"});
    GroundSet g = ground_of(j["ground"], path + ".ground");
    if (g.empty()) throw SchemaError(path + ".ground", "circuit needs a nonempty ground");
    return Matroid::circuit(std::move(g));
  }
  if (type == "free") {
    check_fields(j, path, {"type", "ground"});
    return Matroid::free_on(ground_of(j["ground"], path + ".ground"));
  }
  if (type == "loops") {
    check_fields(j, path, {"type", "ground"});
    return Matroid::loops_on(ground_of(j["ground"], path + ".ground"));
  }
  if (type == "graphic") {
    check_fields(j, path, {"type", "vertices", "edges"});
    json g = {{"vertices", j["vertices"]}, {"edges", j["edges"]}};
    return graphic_from_instance(graph_from_json(g, path));
  }
  if (type == "dual") {
    check_fields(j, path, {"type", "of"});
    return Matroid::dual(matroid_from_descriptor(j["of"], path + ".of"));
  }
  if (type == "sum") {
    check_fields(j, path, {"type", "parts"});
    const json& parts = j["parts"];
    if (!parts.is_array()) throw SchemaError(path + ".parts", "expected an array");
    std::vector<Matroid> ms;
    for (std::size_t i = 0; i < parts.size(); ++i)
      ms.push_back(matroid_from_descriptor(parts[i], path + ".parts[" + std::to_string(i) + "]"));
    try {
      return Matroid::direct_sum(ms);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + ".parts", e.what());  // overlapping grounds
    }
  }
  if (type == "restrict" || type == "contract") {
    check_fields(j, path, {"type", "of", "set"});
    Matroid m = matroid_from_descriptor(j["of"], path + ".of");
    auto names = string_list(j["set"], path + ".set");
    Mask s = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!m.ground().contains(names[i]))
        throw SchemaError(path + ".set[" + std::to_string(i) + "]",
                          "element '" + names[i] + "' not in ground");
      s |= bit(m.ground().index_of(names[i]));
    }
    return type == "restrict" ? Matroid::restriction(m, s) : Matroid::contraction_onto(m, s);
  }
  throw SchemaError(path + ".type", "unknown descriptor type '" + type + "'");
}

json load_json_file(const std::string& filepath) {
  std::ifstream in(filepath);
  if (!in) throw SchemaError("$", "cannot open file '" + filepath + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON in '") + filepath + "': " + e.what());
  }
  return j;
}

}  // namespace matroidlab
