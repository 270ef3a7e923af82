#ifndef LCT_COUNTING_HPP
#define LCT_COUNTING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lct/bigint.hpp"

namespace lct {

/// Signed term (-1)^{n-k} C(n,k) (n-1)!/(k-1)! k^{k-1}, without the
/// leading 1/n.
BigInt formula_term(int n, int k);

/// Number of lone-child-avoiding trees on [n] rooted at 1: the alternating
/// sum of formula_term over k, divided exactly by n. The divisibility is
/// asserted; a failure is an implementation bug.
BigInt formula_count(int n);

/// n * formula_count(n): lone-child-avoiding rooted trees on [n], any root.
BigInt rooted_count(int n);

/// Independent oracle: enumerate all n^{n-2} trees on [n] rooted at 1 and
/// count those with no lone child. Guarded at n <= 10 unless forced.
BigInt brute_force_count(int n, bool force = false);

/// Exhaustive tally of the configuration stream.
struct GConfigTally {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> count_by_k;
  std::int64_t signed_total = 0;
};

/// Streams every configuration of size n; jobs > 1 partitions the subset-mask
/// range, with an order-insensitive exact sum. Guarded at n <= 8 unless
/// forced.
GConfigTally tally_gconfigs(int n, int jobs = 1, bool force = false);

/// Sum of (-1)^{n-k} over the full configuration stream; equals
/// formula_count(n).
BigInt signed_weight_total(int n, int jobs = 1, bool force = false);

struct SequenceTable {
  std::vector<std::pair<int, BigInt>> entries;  // contiguous n from 1
};

SequenceTable sequence(int n_max);

/// OEIS b-file: `n a(n)` per line, single space, newline-terminated.
std::string to_bfile(const SequenceTable& table);

}  // namespace lct

#endif
