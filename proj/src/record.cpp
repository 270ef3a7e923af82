#include "lct/record.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace lct {

std::string record_serialize(const GConfiguration& config) {
  // Hand-rolled for byte stability: fixed key order, no whitespace.
  std::ostringstream os;
  os << "{\"n\":" << config.n << ",\"tree_edges\":[";
  bool first = true;
  for (const auto& [child, par] : config.tree.parent_map()) {
    if (!first) os << ',';
    first = false;
    os << '[' << par << ',' << child << ']';
  }
  os << "],\"arcs\":[";
  first = true;
  for (const auto& [src, dst] : config.arcs) {
    if (!first) os << ',';
    first = false;
    os << '[' << src << ',' << dst << ']';
  }
  os << "]}";
  return os.str();
}

GConfiguration record_parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("tree_edges") ||
      !j.contains("arcs"))
    throw ParseError("record: expected object with n, tree_edges, arcs");
  if (!j["n"].is_number_integer())
    throw ParseError("record: field 'n' must be an integer");
  int n = j["n"].get<int>();

  auto read_pairs = [](const nlohmann::json& arr, const char* field) {
    std::vector<std::pair<Vertex, Vertex>> out;
    if (!arr.is_array())
      throw ParseError(std::string("record: field '") + field +
                       "' must be an array");
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2 ||
          !item[0].is_number_integer() || !item[1].is_number_integer())
        throw ParseError(std::string("record: field '") + field +
                         "' entries must be integer pairs");
      out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
  };
  auto edge_list = read_pairs(j["tree_edges"], "tree_edges");
  auto arc_list = read_pairs(j["arcs"], "arcs");

  std::set<Vertex> vset = {1};
  std::map<Vertex, Vertex> pmap;
  for (const auto& [p, c] : edge_list) {
    vset.insert(p);
    vset.insert(c);
    if (pmap.count(c))
      throw RecordError("record: vertex has two parents",
                        {"vertex " + std::to_string(c) + " has two parents"});
    pmap[c] = p;
  }
  std::map<Vertex, Vertex> arcs;
  for (const auto& [s, t] : arc_list) {
    if (arcs.count(s))
      throw RecordError("record: vertex starts two arcs",
                        {"vertex " + std::to_string(s) + " starts two arcs"});
    arcs[s] = t;
  }
  GConfiguration config = [&] {
    try {
      LabeledRootedTree tree(std::vector<Vertex>(vset.begin(), vset.end()), 1,
                             std::move(pmap));
      return GConfiguration{n, std::move(tree), std::move(arcs)};
    } catch (const std::invalid_argument& e) {
      throw RecordError(std::string("record: ") + e.what(), {e.what()});
    }
  }();
  auto violations = validate(config);
  if (!violations.empty())
    throw RecordError("record: invalid configuration", violations);
  return config;
}

std::string export_dot(const GConfiguration& config) {
  std::ostringstream os;
  os << "digraph gconfiguration {\n";
  os << "  node [shape=circle];\n";
  os << "  " << 1 << " [shape=doublecircle];\n";
  for (const auto& [src, dst] : config.arcs)
    os << "  " << src << " [color=blue, fontcolor=blue];\n";
  for (Vertex v = 2; v <= config.n; ++v)
    if (config.tree.contains(v)) os << "  " << v << ";\n";
  for (const auto& [child, par] : config.tree.parent_map())
    os << "  " << par << " -> " << child << " [dir=none];\n";
  for (const auto& [src, dst] : config.arcs)
    os << "  " << src << " -> " << dst << " [color=blue];\n";
  os << "}\n";
  return os.str();
}

}  // namespace lct
