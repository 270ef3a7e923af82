#ifndef LCT_INVOLUTION_HPP
#define LCT_INVOLUTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "lct/gconfig.hpp"

namespace lct {

/// Which conversion applies to a configuration's maximum special vertex m.
/// ArcCycle / ArcPath convert an arc vertex into a lone child; the two
/// LoneChild cases run the conversion backwards. In ArcPath and
/// LoneChildOfInner, c is the tree vertex involved and is never the root.
struct CaseTag {
  enum class Kind { ArcCycle, ArcPath, LoneChildOfRoot, LoneChildOfInner };
  Kind kind;
  Vertex m;
  Vertex c = 0;  // meaningful for ArcPath and LoneChildOfInner only

  bool operator==(const CaseTag&) const = default;
};

std::string to_string(const CaseTag& tag);

/// nullopt marks a fixed point: the tree spans [n] with no lone child.
std::optional<CaseTag> classify(const GConfiguration& config);

/// Fixed point carries the full lone-child-avoiding tree; otherwise the
/// partner configuration with opposite weight.
using InvolutionOutcome = std::variant<LabeledRootedTree, GConfiguration>;

/// Applies the conversion at the maximum special vertex. Pure: builds a new
/// configuration. With check=true the output is validated and the structural
/// assertions (arc-chain termination, new-arc legality) are enforced; bulk
/// counting may pass check=false.
InvolutionOutcome apply(const GConfiguration& config, bool check = true);

struct InvolutionReport {
  int n = 0;
  std::uint64_t total_configs = 0;
  std::map<int, std::uint64_t> configs_by_k;
  std::uint64_t pair_count = 0;        // unordered pairs
  std::uint64_t fixed_count = 0;
  std::int64_t signed_total = 0;
  std::uint64_t violations = 0;
  std::string first_counterexample;    // empty when clean

  bool clean() const { return violations == 0; }
};

/// Exhaustively checks, over every configuration of size n: double
/// application is the identity, pairing flips the weight and preserves the
/// maximum special vertex, and the fixed-point set is exactly the set of
/// lone-child-avoiding spanning trees rooted at 1. Guarded like the
/// configuration enumerator; jobs > 1 partitions the subset-mask range.
InvolutionReport verify_involution(int n, int jobs = 1, bool force = false);

}  // namespace lct

#endif
