#ifndef LCT_GCONFIG_HPP
#define LCT_GCONFIG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lct/tree.hpp"

namespace lct {

/// Hybrid object on [n]: a rooted tree on a subset V containing 1 (root 1)
/// plus exactly one arc out of each vertex of [n]\V into [n]\{1}, arc targets
/// pairwise distinct. Self-loops are allowed.
struct GConfiguration {
  int n;
  LabeledRootedTree tree;           // on V, root 1
  std::map<Vertex, Vertex> arcs;    // source -> target, keyed ascending

  bool operator==(const GConfiguration& other) const {
    return n == other.n && tree == other.tree && arcs == other.arcs;
  }
};

/// Empty means ok; otherwise one message per violated invariant.
std::vector<std::string> validate(const GConfiguration& config);

bool is_arc_vertex(const GConfiguration& config, Vertex v);

/// (-1)^{n-k} where k = |V|; requires a valid config.
int weight(const GConfiguration& config);

struct ArcCycle {
  bool operator==(const ArcCycle&) const = default;
};
struct ArcPathTo {
  Vertex terminus;
  bool operator==(const ArcPathTo&) const = default;
};

/// The arc walk from an arc vertex either returns to its start (in-degree
/// <= 1 rules out rho shapes) or ends at a tree vertex.
using ArcStructure = std::variant<ArcCycle, ArcPathTo>;

ArcStructure arc_structure_from(const GConfiguration& config, Vertex v);

/// Maximum label among arc vertices and lone-child vertices; nullopt exactly
/// when the tree spans [n] and is lone-child-avoiding.
std::optional<Vertex> max_special_vertex(const GConfiguration& config);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `n=N;V=v1,v2,...;edges=p-c,...;arcs=s>t,...` with V ascending, edges
/// sorted by child, arcs by source. Equal configs serialize identically.
std::string canonical_serialize(const GConfiguration& config);
GConfiguration canonical_parse(const std::string& text);

}  // namespace lct

#endif
