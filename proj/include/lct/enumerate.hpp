#ifndef LCT_ENUMERATE_HPP
#define LCT_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lct/bigint.hpp"
#include "lct/gconfig.hpp"
#include "lct/tree.hpp"

namespace lct {

/// Thrown when an exhaustive enumeration would exceed the guard limit and
/// force was not requested.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default enumeration guards; past these the streams refuse to start unless
/// forced. 10^8 trees at n=10, ~3.9M configurations at n=8.
inline constexpr int kTreeGuard = 10;
inline constexpr int kGConfigGuard = 8;

/// All trees on a sorted vertex set rooted at its minimum element, in
/// lexicographic Prufer order. Yields exactly k^{k-2} trees, no repeats.
class TreeEnumerator {
 public:
  /// Trees on [n] rooted at 1.
  explicit TreeEnumerator(int n, bool force = false);
  /// Trees on an explicit vertex set (sorted ascending, root = minimum).
  explicit TreeEnumerator(std::vector<Vertex> vertices, bool force = false);

  std::optional<LabeledRootedTree> next();

 private:
  std::vector<Vertex> vertices_;
  std::vector<int> seq_;  // index space, entries in [1..k]
  bool done_ = false;

  LabeledRootedTree current() const;
  bool advance_seq();
};

/// Lexicographic injective tuples over a fixed candidate pool. Position i of
/// the tuple is the arc target of the i-th source; tuples are ordered
/// lexicographically and never repeat a value.
class InjectiveTupleEnumerator {
 public:
  InjectiveTupleEnumerator(std::vector<int> pool, int length);

  /// Current tuple, or nullopt when exhausted; advance() moves on.
  const std::vector<int>* current() const;
  bool advance();

 private:
  std::vector<int> pool_;  // sorted ascending
  std::vector<int> tuple_;
  std::vector<bool> used_;  // indexed by pool position
  std::vector<int> pos_;    // pool index chosen at each tuple slot
  bool done_ = false;
};

/// All G-configurations of size n: subsets V (containing 1) by ascending
/// bitmask over {2..n}, trees on V by lexicographic Prufer order, arc-target
/// tuples lexicographic. Restartable on a half-open mask range for parallel
/// partitioning.
class GConfigEnumerator {
 public:
  explicit GConfigEnumerator(int n, bool force = false);
  GConfigEnumerator(int n, std::uint64_t mask_lo, std::uint64_t mask_hi,
                    bool force = false);

  std::optional<GConfiguration> next();

  /// Number of subset masks, 2^{n-1}; the unit of partitioning.
  static std::uint64_t mask_space(int n);

 private:
  int n_;
  std::uint64_t mask_, mask_end_;
  bool subset_ready_ = false;
  std::vector<Vertex> subset_;       // V, sorted, contains 1
  std::vector<Vertex> arc_sources_;  // [n] \ V, sorted
  std::vector<int> seq_;             // Prufer over V in index space
  std::optional<LabeledRootedTree> tree_;
  std::optional<InjectiveTupleEnumerator> arcs_;

  void init_subset();
  void decode_tree();
  bool advance_seq();
  GConfiguration current() const;
};

std::vector<LabeledRootedTree> all_trees(int n, bool force = false);
std::vector<GConfiguration> all_gconfigs(int n, bool force = false);

/// Closed-form count of configurations of size n with k tree vertices:
/// C(n-1,k-1) * k^{k-2} * (n-1)!/(k-1)!, with the k^{k-2} convention giving
/// one tree at k = 1 and k = 2.
BigInt gconfig_count_by_k(int n, int k);

/// Rooted trees on k labeled vertices with a fixed root: k^{k-2}, with
/// k <= 2 giving 1.
BigInt fixed_root_tree_count(int k);

}  // namespace lct

#endif
