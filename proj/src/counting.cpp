#include "lct/counting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "lct/enumerate.hpp"
#include "lct/tree.hpp"

namespace lct {

BigInt formula_term(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("formula_term: k out of range");
  BigInt t = binomial(n, k) * range_product(k, n - 1) * int_pow(k, k - 1);
  return (n - k) % 2 == 0 ? t : -t;
}

BigInt formula_count(int n) {
  if (n < 1) throw std::invalid_argument("formula_count: n must be >= 1");
  BigInt sum = 0;
  for (int k = 1; k <= n; ++k) sum += formula_term(n, k);
  if (sum % n != 0)
    throw std::logic_error("formula_count: alternating sum not divisible by n");
  return sum / n;
}

BigInt rooted_count(int n) { return n * formula_count(n); }

BigInt brute_force_count(int n, bool force) {
  if (n < 1) throw std::invalid_argument("brute_force_count: n must be >= 1");
  if (n > kTreeGuard && !force)
    throw GuardExceeded("brute_force_count: n exceeds enumeration guard");
  if (n == 1) return 1;
  if (n == 2) return 0;  // the single tree 1-2 has a lone child

  // Walk every Prufer sequence, decode the tree, and test the predicate.
  // Flat buffers; the decode is the same smallest-leaf algorithm as
  // prufer_decode. A non-root vertex has one child fewer than its degree,
  // so the lone-child test reads off the decoded edges directly.
  std::vector<int> seq(n - 2, 1);
  std::vector<int> degree(n + 1), deg(n + 1);
  std::vector<std::pair<int, int>> edges(n - 1);
  std::uint64_t count = 0;
  while (true) {
    std::fill(degree.begin() + 1, degree.end(), 1);
    for (int v : seq) degree[v]++;
    int ptr = 1;
    while (degree[ptr] != 1) ptr++;
    int leaf = ptr;
    int ei = 0;
    for (int v : seq) {
      edges[ei++] = {leaf, v};
      if (--degree[v] == 1 && v < ptr) {
        leaf = v;
      } else {
        ptr++;
        while (degree[ptr] != 1) ptr++;
        leaf = ptr;
      }
    }
    edges[ei++] = {leaf, n};

    std::fill(deg.begin() + 1, deg.end(), 0);
    for (const auto& [a, b] : edges) {
      deg[a]++;
      deg[b]++;
    }
    bool lca = deg[1] != 1;  // root's child count is its degree
    if (lca)
      for (int v = 2; v <= n && lca; ++v) lca = deg[v] != 2;
    if (lca) ++count;

    int i = n - 3;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    seq[i]++;
  }
  return count;
}

namespace {

void tally_range(int n, std::uint64_t lo, std::uint64_t hi, GConfigTally& out) {
  GConfigEnumerator en(n, lo, hi, /*force=*/true);
  while (auto c = en.next()) {
    int k = static_cast<int>(c->tree.size());
    out.total++;
    out.count_by_k[k]++;
    out.signed_total += weight(*c);
  }
}

}  // namespace

GConfigTally tally_gconfigs(int n, int jobs, bool force) {
  if (n < 1) throw std::invalid_argument("tally_gconfigs: n must be >= 1");
  if (n > kGConfigGuard && !force)
    throw GuardExceeded("tally_gconfigs: n exceeds enumeration guard");
  if (jobs < 1) jobs = 1;
  std::uint64_t masks = GConfigEnumerator::mask_space(n);
  std::uint64_t chunks = std::min<std::uint64_t>(jobs, masks);
  std::vector<GConfigTally> partials(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    std::uint64_t lo = masks * i / chunks;
    std::uint64_t hi = masks * (i + 1) / chunks;
    threads.emplace_back(tally_range, n, lo, hi, std::ref(partials[i]));
  }
  for (auto& t : threads) t.join();
  GConfigTally total;
  for (const GConfigTally& p : partials) {
    total.total += p.total;
    for (const auto& [k, c] : p.count_by_k) total.count_by_k[k] += c;
    total.signed_total += p.signed_total;
  }
  return total;
}

BigInt signed_weight_total(int n, int jobs, bool force) {
  return tally_gconfigs(n, jobs, force).signed_total;
}

SequenceTable sequence(int n_max) {
  if (n_max < 1) throw std::invalid_argument("sequence: n_max must be >= 1");
  SequenceTable table;
  table.entries.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) table.entries.emplace_back(n, formula_count(n));
  return table;
}

std::string to_bfile(const SequenceTable& table) {
  std::ostringstream os;
  for (const auto& [n, a] : table.entries) os << n << ' ' << a << '\n';
  return os.str();
}

}  // namespace lct
