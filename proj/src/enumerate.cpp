#include "lct/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace lct {

namespace {

// Decode an index-space Prufer sequence (entries in [1..k]) into a tree on
// the given sorted vertex set rooted at its minimum. Monotone relabeling
// keeps both the lexicographic order and the smallest-leaf convention.
LabeledRootedTree decode_on(const std::vector<Vertex>& vertices,
                            std::span<const int> seq_idx) {
  int k = static_cast<int>(vertices.size());
  if (k == 1) return LabeledRootedTree::single(vertices[0]);
  auto edges = detail::prufer_edges(seq_idx, k);
  std::vector<Vertex> parent;
  detail::orient_to_root(edges, k, 1, parent);
  std::map<Vertex, Vertex> pmap;
  for (int i = 2; i <= k; ++i) pmap[vertices[i - 1]] = vertices[parent[i] - 1];
  return LabeledRootedTree(vertices, vertices[0], std::move(pmap));
}

std::vector<Vertex> contiguous(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

}  // namespace

TreeEnumerator::TreeEnumerator(int n, bool force)
    : TreeEnumerator(contiguous(n), force) {}

TreeEnumerator::TreeEnumerator(std::vector<Vertex> vertices, bool force)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw std::invalid_argument("TreeEnumerator: empty vertex set");
  if (!std::is_sorted(vertices_.begin(), vertices_.end()))
    throw std::invalid_argument("TreeEnumerator: vertex set must be sorted");
  int k = static_cast<int>(vertices_.size());
  if (k > kTreeGuard && !force)
    throw GuardExceeded("TreeEnumerator: size exceeds enumeration guard");
  seq_.assign(k >= 2 ? k - 2 : 0, 1);
}

std::optional<LabeledRootedTree> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  LabeledRootedTree t = current();
  if (!advance_seq()) done_ = true;
  return t;
}

LabeledRootedTree TreeEnumerator::current() const {
  return decode_on(vertices_, seq_);
}

bool TreeEnumerator::advance_seq() {
  int k = static_cast<int>(vertices_.size());
  for (int i = static_cast<int>(seq_.size()) - 1; i >= 0; --i) {
    if (seq_[i] < k) {
      seq_[i]++;
      std::fill(seq_.begin() + i + 1, seq_.end(), 1);
      return true;
    }
  }
  return false;
}

InjectiveTupleEnumerator::InjectiveTupleEnumerator(std::vector<int> pool,
                                                   int length)
    : pool_(std::move(pool)), used_(pool_.size(), false) {
  if (length < 0 || length > static_cast<int>(pool_.size())) {
    done_ = true;
    return;
  }
  if (!std::is_sorted(pool_.begin(), pool_.end()))
    throw std::invalid_argument("InjectiveTupleEnumerator: unsorted pool");
  tuple_.resize(length);
  pos_.resize(length);
  for (int i = 0; i < length; ++i) {
    pos_[i] = i;
    used_[i] = true;
    tuple_[i] = pool_[i];
  }
}

const std::vector<int>* InjectiveTupleEnumerator::current() const {
  return done_ ? nullptr : &tuple_;
}

bool InjectiveTupleEnumerator::advance() {
  if (done_) return false;
  int len = static_cast<int>(tuple_.size());
  int pool_size = static_cast<int>(pool_.size());
  for (int i = len - 1; i >= 0; --i) {
    used_[pos_[i]] = false;
    int p = pos_[i] + 1;
    while (p < pool_size && used_[p]) ++p;
    if (p < pool_size) {
      pos_[i] = p;
      used_[p] = true;
      tuple_[i] = pool_[p];
      for (int j = i + 1; j < len; ++j) {
        int q = 0;
        while (used_[q]) ++q;
        pos_[j] = q;
        used_[q] = true;
        tuple_[j] = pool_[q];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

std::uint64_t GConfigEnumerator::mask_space(int n) {
  if (n < 1 || n > 63)
    throw std::invalid_argument("mask_space: n out of range");
  return std::uint64_t{1} << (n - 1);
}

GConfigEnumerator::GConfigEnumerator(int n, bool force)
    : GConfigEnumerator(n, 0, mask_space(n), force) {}

GConfigEnumerator::GConfigEnumerator(int n, std::uint64_t mask_lo,
                                     std::uint64_t mask_hi, bool force)
    : n_(n), mask_(mask_lo), mask_end_(std::min(mask_hi, mask_space(n))) {
  if (n > kGConfigGuard && !force)
    throw GuardExceeded("GConfigEnumerator: n exceeds enumeration guard");
}

void GConfigEnumerator::init_subset() {
  subset_.clear();
  arc_sources_.clear();
  subset_.push_back(1);
  for (int v = 2; v <= n_; ++v) {
    if (mask_ & (std::uint64_t{1} << (v - 2)))
      subset_.push_back(v);
    else
      arc_sources_.push_back(v);
  }
  int k = static_cast<int>(subset_.size());
  seq_.assign(k >= 2 ? k - 2 : 0, 1);
  decode_tree();
  std::vector<int> pool;
  for (int v = 2; v <= n_; ++v) pool.push_back(v);
  arcs_.emplace(std::move(pool), static_cast<int>(arc_sources_.size()));
  subset_ready_ = true;
}

void GConfigEnumerator::decode_tree() { tree_ = decode_on(subset_, seq_); }

bool GConfigEnumerator::advance_seq() {
  int k = static_cast<int>(subset_.size());
  for (int i = static_cast<int>(seq_.size()) - 1; i >= 0; --i) {
    if (seq_[i] < k) {
      seq_[i]++;
      std::fill(seq_.begin() + i + 1, seq_.end(), 1);
      return true;
    }
  }
  return false;
}

GConfiguration GConfigEnumerator::current() const {
  std::map<Vertex, Vertex> arc_map;
  const std::vector<int>& targets = *arcs_->current();
  for (std::size_t i = 0; i < arc_sources_.size(); ++i)
    arc_map[arc_sources_[i]] = targets[i];
  return GConfiguration{n_, *tree_, std::move(arc_map)};
}

std::optional<GConfiguration> GConfigEnumerator::next() {
  while (mask_ < mask_end_) {
    if (!subset_ready_) init_subset();
    if (arcs_->current()) {
      GConfiguration c = current();
      arcs_->advance();
      return c;
    }
    if (advance_seq()) {
      decode_tree();
      std::vector<int> pool;
      for (int v = 2; v <= n_; ++v) pool.push_back(v);
      arcs_.emplace(std::move(pool), static_cast<int>(arc_sources_.size()));
      continue;
    }
    ++mask_;
    subset_ready_ = false;
  }
  return std::nullopt;
}

std::vector<LabeledRootedTree> all_trees(int n, bool force) {
  std::vector<LabeledRootedTree> out;
  TreeEnumerator en(n, force);
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<GConfiguration> all_gconfigs(int n, bool force) {
  std::vector<GConfiguration> out;
  GConfigEnumerator en(n, force);
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

BigInt fixed_root_tree_count(int k) {
  if (k < 1) throw std::invalid_argument("fixed_root_tree_count: k < 1");
  return k <= 2 ? BigInt(1) : int_pow(k, k - 2);
}

BigInt gconfig_count_by_k(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("gconfig_count_by_k: k out of range");
  return binomial(n - 1, k - 1) * fixed_root_tree_count(k) *
         range_product(k, n - 1);
}

}  // namespace lct
