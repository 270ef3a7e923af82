#include "lct/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lct {

LabeledRootedTree::LabeledRootedTree(std::vector<Vertex> vertices, Vertex root,
                                     std::map<Vertex, Vertex> parent)
    : vertices_(std::move(vertices)), root_(root), parent_(std::move(parent)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end())
    throw std::invalid_argument("tree: duplicate vertex label");
  if (!contains(root_)) throw std::invalid_argument("tree: root not in vertex set");
  if (parent_.count(root_))
    throw std::invalid_argument("tree: root has a parent");
  if (parent_.size() != vertices_.size() - 1)
    throw std::invalid_argument("tree: parent map size mismatch");
  for (const auto& [child, par] : parent_) {
    if (!contains(child) || !contains(par))
      throw std::invalid_argument("tree: parent edge leaves vertex set");
  }
  // Every vertex must reach the root; step bound rules out cycles.
  for (Vertex v : vertices_) {
    Vertex cur = v;
    std::size_t steps = 0;
    while (cur != root_) {
      cur = parent_.at(cur);
      if (++steps > vertices_.size())
        throw std::invalid_argument("tree: parent links do not reach root");
    }
  }
}

LabeledRootedTree LabeledRootedTree::single(Vertex v) {
  return LabeledRootedTree({v}, v, {});
}

bool LabeledRootedTree::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Vertex LabeledRootedTree::parent(Vertex v) const {
  auto it = parent_.find(v);
  if (it == parent_.end())
    throw std::invalid_argument("parent: vertex is root or not in tree");
  return it->second;
}

std::vector<Vertex> LabeledRootedTree::children(Vertex v) const {
  if (!contains(v)) throw std::invalid_argument("children: vertex not in tree");
  std::vector<Vertex> out;
  for (const auto& [child, par] : parent_)
    if (par == v) out.push_back(child);
  return out;  // parent_ is ordered by child, so already ascending
}

PlantedTree::PlantedTree(LabeledRootedTree tree) : tree_(std::move(tree)) {
  if (tree_.root() != 0)
    throw std::invalid_argument("planted tree: root must be 0");
  if (tree_.children(0).size() != 1)
    throw std::invalid_argument("planted tree: root must have exactly one child");
}

bool is_lone_child_avoiding(const LabeledRootedTree& tree) {
  std::map<Vertex, int> child_count;
  for (const auto& [child, par] : tree.parent_map()) child_count[par]++;
  for (const auto& [v, count] : child_count)
    if (count == 1) return false;
  return true;
}

std::vector<Vertex> lone_child_vertices(const LabeledRootedTree& tree) {
  std::map<Vertex, int> child_count;
  for (const auto& [child, par] : tree.parent_map()) child_count[par]++;
  std::vector<Vertex> out;
  for (const auto& [child, par] : tree.parent_map())
    if (child_count[par] == 1) out.push_back(child);
  return out;
}

namespace detail {

std::vector<std::pair<Vertex, Vertex>> prufer_edges(std::span<const Vertex> seq,
                                                    int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n == 1) return edges;
  std::vector<int> degree(n + 1, 1);
  for (Vertex v : seq) {
    if (v < 1 || v > n)
      throw std::invalid_argument("prufer: sequence entry out of range");
    degree[v]++;
  }
  int ptr = 1;
  while (degree[ptr] != 1) ptr++;
  int leaf = ptr;
  for (Vertex v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ptr++;
      while (degree[ptr] != 1) ptr++;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return edges;
}

void orient_to_root(std::span<const std::pair<Vertex, Vertex>> edges, int n,
                    Vertex root, std::vector<Vertex>& parent) {
  static thread_local std::vector<int> head, nxt, to, stack;
  head.assign(n + 1, -1);
  int m = static_cast<int>(edges.size());
  nxt.assign(2 * m, -1);
  to.assign(2 * m, 0);
  int idx = 0;
  for (const auto& [a, b] : edges) {
    to[idx] = b; nxt[idx] = head[a]; head[a] = idx; ++idx;
    to[idx] = a; nxt[idx] = head[b]; head[b] = idx; ++idx;
  }
  parent.assign(n + 1, 0);
  stack.clear();
  stack.push_back(root);
  parent[root] = root;  // sentinel, cleared below
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e = head[v]; e != -1; e = nxt[e]) {
      int w = to[e];
      if (parent[w] == 0 && w != root) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  parent[root] = 0;
}

}  // namespace detail

LabeledRootedTree prufer_decode(std::span<const Vertex> seq, int n,
                                Vertex root) {
  if (n < 1) throw std::invalid_argument("prufer_decode: n must be positive");
  int expected = n >= 2 ? n - 2 : 0;
  if (static_cast<int>(seq.size()) != expected)
    throw std::invalid_argument("prufer_decode: wrong sequence length");
  if (root < 1 || root > n)
    throw std::invalid_argument("prufer_decode: root out of range");
  auto edges = detail::prufer_edges(seq, n);
  std::vector<Vertex> parent;
  detail::orient_to_root(edges, n, root, parent);
  std::vector<Vertex> vertices(n);
  std::map<Vertex, Vertex> pmap;
  for (int v = 1; v <= n; ++v) {
    vertices[v - 1] = v;
    if (v != root) pmap[v] = parent[v];
  }
  return LabeledRootedTree(std::move(vertices), root, std::move(pmap));
}

std::vector<Vertex> prufer_encode(const LabeledRootedTree& tree) {
  int n = static_cast<int>(tree.size());
  for (int i = 0; i < n; ++i)
    if (tree.vertices()[i] != i + 1)
      throw std::invalid_argument("prufer_encode: tree not on contiguous [n]");
  std::vector<Vertex> seq;
  if (n <= 2) return seq;
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const auto& [child, par] : tree.parent_map()) {
    adj[child].push_back(par);
    adj[par].push_back(child);
  }
  std::vector<int> degree(n + 1);
  std::vector<bool> removed(n + 1, false);
  for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 0;
    for (int v = 1; v <= n; ++v)
      if (!removed[v] && degree[v] == 1) { leaf = v; break; }
    Vertex nb = 0;
    for (Vertex w : adj[leaf])
      if (!removed[w]) { nb = w; break; }
    seq.push_back(nb);
    removed[leaf] = true;
    degree[leaf]--;
    degree[nb]--;
  }
  return seq;
}

PlantedTree to_planted(const LabeledRootedTree& tree) {
  if (tree.root() != 1)
    throw std::invalid_argument("to_planted: tree must be rooted at 1");
  int n = static_cast<int>(tree.size());
  for (int i = 0; i < n; ++i)
    if (tree.vertices()[i] != i + 1)
      throw std::invalid_argument("to_planted: tree not on contiguous [n]");
  std::vector<Vertex> vertices(n + 1);
  for (int v = 0; v <= n; ++v) vertices[v] = v;
  std::map<Vertex, Vertex> pmap = tree.parent_map();
  pmap[1] = 0;
  return PlantedTree(LabeledRootedTree(std::move(vertices), 0, std::move(pmap)));
}

LabeledRootedTree from_planted(const PlantedTree& planted) {
  const LabeledRootedTree& t = planted.tree();
  Vertex new_root = t.children(0)[0];
  std::vector<Vertex> vertices;
  for (Vertex v : t.vertices())
    if (v != 0) vertices.push_back(v);
  if (vertices.empty())
    throw std::invalid_argument("from_planted: degenerate planted tree");
  std::map<Vertex, Vertex> pmap = t.parent_map();
  pmap.erase(new_root);
  return LabeledRootedTree(std::move(vertices), new_root, std::move(pmap));
}

std::string tree_to_text(const LabeledRootedTree& tree) {
  std::ostringstream os;
  os << tree.size() << ';' << tree.root() << ";edges=";
  bool first = true;
  for (const auto& [child, par] : tree.parent_map()) {
    if (!first) os << ',';
    first = false;
    os << par << '-' << child;
  }
  return os.str();
}

LabeledRootedTree tree_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string n_part, root_part, edge_part;
  if (!std::getline(is, n_part, ';') || !std::getline(is, root_part, ';') ||
      !std::getline(is, edge_part))
    throw std::invalid_argument("tree text: expected n;root;edges=...");
  if (edge_part.rfind("edges=", 0) != 0)
    throw std::invalid_argument("tree text: missing edges= field");
  int n = std::stoi(n_part);
  Vertex root = std::stoi(root_part);
  std::map<Vertex, Vertex> pmap;
  std::string body = edge_part.substr(6);
  std::istringstream es(body);
  std::string item;
  while (std::getline(es, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("tree text: bad edge " + item);
    Vertex p = std::stoi(item.substr(0, dash));
    Vertex c = std::stoi(item.substr(dash + 1));
    pmap[c] = p;
  }
  std::vector<Vertex> vertices(n);
  for (int v = 1; v <= n; ++v) vertices[v - 1] = v;
  return LabeledRootedTree(std::move(vertices), root, std::move(pmap));
}

}  // namespace lct
