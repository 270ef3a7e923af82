#ifndef LCT_TREE_HPP
#define LCT_TREE_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lct {

using Vertex = int;

/// Rooted tree on an arbitrary finite labeled vertex set, stored as a parent
/// map. Immutable after construction; the constructor rejects anything that
/// is not a connected acyclic parent structure.
class LabeledRootedTree {
 public:
  LabeledRootedTree(std::vector<Vertex> vertices, Vertex root,
                    std::map<Vertex, Vertex> parent);

  static LabeledRootedTree single(Vertex v);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex root() const { return root_; }
  const std::map<Vertex, Vertex>& parent_map() const { return parent_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(Vertex v) const;

  /// Parent of v; throws if v is the root or not in the tree.
  Vertex parent(Vertex v) const;

  /// Children of v, ascending by label. Throws if v is not in the tree.
  std::vector<Vertex> children(Vertex v) const;

  bool operator==(const LabeledRootedTree& other) const {
    return root_ == other.root_ && vertices_ == other.vertices_ &&
           parent_ == other.parent_;
  }

 private:
  std::vector<Vertex> vertices_;  // sorted ascending
  Vertex root_;
  std::map<Vertex, Vertex> parent_;
};

/// Planted tree: rooted tree on {0, 1, ..., n} whose root 0 has exactly one
/// child. Thin validated wrapper.
class PlantedTree {
 public:
  explicit PlantedTree(LabeledRootedTree tree);
  const LabeledRootedTree& tree() const { return tree_; }

  bool operator==(const PlantedTree& other) const {
    return tree_ == other.tree_;
  }

 private:
  LabeledRootedTree tree_;
};

bool is_lone_child_avoiding(const LabeledRootedTree& tree);

/// Every vertex that is the unique child of its parent, ascending.
std::vector<Vertex> lone_child_vertices(const LabeledRootedTree& tree);

/// Decode a Prufer sequence of length n-2 over [n] into the tree on [n]
/// rooted at `root`. Smallest-labeled-leaf-first convention. n = 1 takes the
/// empty sequence and yields the single-vertex tree.
LabeledRootedTree prufer_decode(std::span<const Vertex> seq, int n,
                                Vertex root);

/// Inverse of prufer_decode; requires the tree to live on contiguous [n].
std::vector<Vertex> prufer_encode(const LabeledRootedTree& tree);

/// Attach a new root 0 above vertex 1 of a tree on [n] rooted at 1.
PlantedTree to_planted(const LabeledRootedTree& tree);

/// Delete root 0 and its single edge, re-rooting at the old root's child.
LabeledRootedTree from_planted(const PlantedTree& planted);

/// Canonical text form `n;root;edges=p1-c1,p2-c2,...`, edges sorted by child.
std::string tree_to_text(const LabeledRootedTree& tree);
LabeledRootedTree tree_from_text(const std::string& text);

namespace detail {

/// Undirected edge list of the decoded sequence; seq entries in [1..n].
std::vector<std::pair<Vertex, Vertex>> prufer_edges(std::span<const Vertex> seq,
                                                    int n);

/// Orient an undirected tree edge list toward `root`; parent[v] for v != root,
/// parent[root] = 0. Vertex labels must lie in [1..n].
void orient_to_root(std::span<const std::pair<Vertex, Vertex>> edges, int n,
                    Vertex root, std::vector<Vertex>& parent);

}  // namespace detail

}  // namespace lct

#endif
