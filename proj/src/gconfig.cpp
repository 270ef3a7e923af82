#include "lct/gconfig.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lct {

std::vector<std::string> validate(const GConfiguration& config) {
  std::vector<std::string> violations;
  const auto& V = config.tree.vertices();
  if (config.n < 1) violations.push_back("ambient size n must be positive");
  if (config.tree.root() != 1) violations.push_back("tree root is not 1");
  if (!config.tree.contains(1)) violations.push_back("vertex 1 not in tree");
  for (Vertex v : V)
    if (v < 1 || v > config.n)
      violations.push_back("tree vertex " + std::to_string(v) +
                           " outside [n]");
  // Arc sources must be exactly [n] \ V, one arc each.
  for (Vertex v = 1; v <= config.n; ++v) {
    bool in_tree = config.tree.contains(v);
    bool has_arc = config.arcs.count(v) > 0;
    if (!in_tree && !has_arc)
      violations.push_back("vertex " + std::to_string(v) +
                           " has neither tree membership nor an arc");
    if (in_tree && has_arc)
      violations.push_back("tree vertex " + std::to_string(v) +
                           " starts an arc");
  }
  for (const auto& [src, dst] : config.arcs) {
    if (src < 1 || src > config.n)
      violations.push_back("arc source " + std::to_string(src) +
                           " outside [n]");
    if (dst < 1 || dst > config.n)
      violations.push_back("arc target " + std::to_string(dst) +
                           " outside [n]");
    if (dst == 1) violations.push_back("arc " + std::to_string(src) +
                                       ">" + std::to_string(dst) +
                                       " targets root");
  }
  std::set<Vertex> targets;
  for (const auto& [src, dst] : config.arcs)
    if (!targets.insert(dst).second)
      violations.push_back("duplicate arc target " + std::to_string(dst));
  return violations;
}

bool is_arc_vertex(const GConfiguration& config, Vertex v) {
  return config.arcs.count(v) > 0;
}

int weight(const GConfiguration& config) {
  std::size_t arc_count = config.arcs.size();  // n - k
  return arc_count % 2 == 0 ? 1 : -1;
}

ArcStructure arc_structure_from(const GConfiguration& config, Vertex v) {
  auto it = config.arcs.find(v);
  if (it == config.arcs.end())
    throw std::invalid_argument("arc_structure_from: not an arc vertex");
  Vertex cur = it->second;
  int steps = 1;
  while (true) {
    if (cur == v) return ArcCycle{};
    if (config.tree.contains(cur)) return ArcPathTo{cur};
    auto next = config.arcs.find(cur);
    if (next == config.arcs.end() || ++steps > config.n)
      throw std::logic_error("arc walk failed to terminate");
    cur = next->second;
  }
}

std::optional<Vertex> max_special_vertex(const GConfiguration& config) {
  Vertex best = 0;
  for (const auto& [src, dst] : config.arcs) best = std::max(best, src);
  for (Vertex v : lone_child_vertices(config.tree)) best = std::max(best, v);
  if (best == 0) return std::nullopt;
  return best;
}

std::string canonical_serialize(const GConfiguration& config) {
  std::ostringstream os;
  os << "n=" << config.n << ";V=";
  bool first = true;
  for (Vertex v : config.tree.vertices()) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << ";edges=";
  first = true;
  for (const auto& [child, par] : config.tree.parent_map()) {
    if (!first) os << ',';
    first = false;
    os << par << '-' << child;
  }
  os << ";arcs=";
  first = true;
  for (const auto& [src, dst] : config.arcs) {
    if (!first) os << ',';
    first = false;
    os << src << '>' << dst;
  }
  return os.str();
}

namespace {

int parse_int(const std::string& s, const char* field) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("field '") + field + "': bad integer '" + s +
                     "'");
  }
}

std::string expect_field(std::istringstream& is, const char* name) {
  std::string part;
  if (!std::getline(is, part, ';'))
    throw ParseError(std::string("line 1: missing field '") + name + "'");
  std::string prefix = std::string(name) + "=";
  if (part.rfind(prefix, 0) != 0)
    throw ParseError(std::string("line 1: expected field '") + name +
                     "', got '" + part + "'");
  return part.substr(prefix.size());
}

}  // namespace

GConfiguration canonical_parse(const std::string& text) {
  std::istringstream is(text);
  int n = parse_int(expect_field(is, "n"), "n");
  std::string v_body = expect_field(is, "V");
  std::string e_body = expect_field(is, "edges");
  std::string a_body = expect_field(is, "arcs");

  std::vector<Vertex> V;
  if (!v_body.empty()) {
    std::istringstream vs(v_body);
    std::string item;
    while (std::getline(vs, item, ',')) V.push_back(parse_int(item, "V"));
  }
  std::map<Vertex, Vertex> pmap;
  if (!e_body.empty()) {
    std::istringstream es(e_body);
    std::string item;
    while (std::getline(es, item, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos)
        throw ParseError("field 'edges': bad edge '" + item + "'");
      pmap[parse_int(item.substr(dash + 1), "edges")] =
          parse_int(item.substr(0, dash), "edges");
    }
  }
  std::map<Vertex, Vertex> arcs;
  if (!a_body.empty()) {
    std::istringstream as(a_body);
    std::string item;
    while (std::getline(as, item, ',')) {
      auto gt = item.find('>');
      if (gt == std::string::npos)
        throw ParseError("field 'arcs': bad arc '" + item + "'");
      arcs[parse_int(item.substr(0, gt), "arcs")] =
          parse_int(item.substr(gt + 1), "arcs");
    }
  }
  try {
    LabeledRootedTree tree(std::move(V), 1, std::move(pmap));
    return GConfiguration{n, std::move(tree), std::move(arcs)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field 'edges': ") + e.what());
  }
}

}  // namespace lct
