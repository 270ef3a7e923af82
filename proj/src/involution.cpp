#include "lct/involution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lct/enumerate.hpp"

namespace lct {

std::string to_string(const CaseTag& tag) {
  std::ostringstream os;
  switch (tag.kind) {
    case CaseTag::Kind::ArcCycle:
      os << "ArcCycle(m=" << tag.m << ")";
      break;
    case CaseTag::Kind::ArcPath:
      os << "ArcPath(m=" << tag.m << ", c=" << tag.c << ")";
      break;
    case CaseTag::Kind::LoneChildOfRoot:
      os << "LoneChildOfRoot(m=" << tag.m << ")";
      break;
    case CaseTag::Kind::LoneChildOfInner:
      os << "LoneChildOfInner(m=" << tag.m << ", c=" << tag.c << ")";
      break;
  }
  return os.str();
}

std::optional<CaseTag> classify(const GConfiguration& config) {
  auto violations = validate(config);
  if (!violations.empty())
    throw std::invalid_argument("classify: invalid configuration: " +
                                violations.front());
  auto m_opt = max_special_vertex(config);
  if (!m_opt) return std::nullopt;
  Vertex m = *m_opt;
  if (is_arc_vertex(config, m)) {
    ArcStructure st = arc_structure_from(config, m);
    if (std::holds_alternative<ArcCycle>(st))
      return CaseTag{CaseTag::Kind::ArcCycle, m};
    return CaseTag{CaseTag::Kind::ArcPath, m, std::get<ArcPathTo>(st).terminus};
  }
  Vertex p = config.tree.parent(m);
  if (p == 1) return CaseTag{CaseTag::Kind::LoneChildOfRoot, m};
  return CaseTag{CaseTag::Kind::LoneChildOfInner, m, p};
}

namespace {

// Start of the maximal incoming-arc chain ending at `from`. In-degree <= 1
// makes the predecessor unique at every step; the step bound asserts the
// chain never loops.
Vertex chain_start(const std::map<Vertex, Vertex>& arcs, Vertex from, int n) {
  Vertex y = from;
  int steps = 0;
  while (true) {
    Vertex pred = 0;
    for (const auto& [src, dst] : arcs)
      if (dst == y) {
        pred = src;
        break;
      }
    if (pred == 0) return y;
    y = pred;
    if (++steps > n)
      throw std::logic_error("backward arc walk failed to terminate");
  }
}

GConfiguration insert_as_lone_child(const GConfiguration& config, Vertex m,
                                    Vertex attach) {
  std::map<Vertex, Vertex> arcs = config.arcs;
  arcs.erase(m);
  std::map<Vertex, Vertex> pmap = config.tree.parent_map();
  for (Vertex child : config.tree.children(attach)) pmap[child] = m;
  pmap[m] = attach;
  std::vector<Vertex> vertices = config.tree.vertices();
  vertices.push_back(m);
  return GConfiguration{
      config.n, LabeledRootedTree(std::move(vertices), 1, std::move(pmap)),
      std::move(arcs)};
}

GConfiguration extract_as_arc_vertex(const GConfiguration& config, Vertex m,
                                     Vertex attach) {
  std::map<Vertex, Vertex> pmap = config.tree.parent_map();
  for (Vertex child : config.tree.children(m)) pmap[child] = attach;
  pmap.erase(m);
  std::vector<Vertex> vertices;
  for (Vertex v : config.tree.vertices())
    if (v != m) vertices.push_back(v);
  std::map<Vertex, Vertex> arcs = config.arcs;
  // Recreate the removed arc: its target is the start of the incoming-arc
  // chain ending at m (cycle case, attach == 1) or at attach (path case).
  Vertex chain_end = attach == 1 ? m : attach;
  Vertex y = chain_start(arcs, chain_end, config.n);
  if (y == 1) throw std::logic_error("reverse conversion would target root");
  for (const auto& [src, dst] : arcs)
    if (dst == y) throw std::logic_error("reverse conversion target collision");
  arcs[m] = y;
  return GConfiguration{
      config.n, LabeledRootedTree(std::move(vertices), 1, std::move(pmap)),
      std::move(arcs)};
}

}  // namespace

InvolutionOutcome apply(const GConfiguration& config, bool check) {
  std::optional<CaseTag> tag = classify(config);
  if (!tag) return config.tree;
  GConfiguration out = [&] {
    switch (tag->kind) {
      case CaseTag::Kind::ArcCycle:
        return insert_as_lone_child(config, tag->m, 1);
      case CaseTag::Kind::ArcPath:
        return insert_as_lone_child(config, tag->m, tag->c);
      case CaseTag::Kind::LoneChildOfRoot:
        return extract_as_arc_vertex(config, tag->m, 1);
      case CaseTag::Kind::LoneChildOfInner:
        return extract_as_arc_vertex(config, tag->m, tag->c);
    }
    throw std::logic_error("unreachable case tag");
  }();
  if (check) {
    auto violations = validate(out);
    if (!violations.empty())
      throw std::logic_error("involution produced invalid configuration: " +
                             violations.front());
    if (max_special_vertex(out) != tag->m)
      throw std::logic_error("involution did not preserve the special vertex");
    if (weight(out) != -weight(config))
      throw std::logic_error("involution did not reverse the sign");
  }
  return out;
}

namespace {

struct Partial {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_k;
  std::uint64_t paired = 0;
  std::uint64_t fixed = 0;
  std::int64_t signed_total = 0;
  std::uint64_t violations = 0;
  std::string first_cex;
  std::vector<std::string> fixed_trees;  // canonical text of fixed points
};

void note(Partial& p, const GConfiguration& x, const std::string& reason) {
  p.violations++;
  if (p.first_cex.empty()) p.first_cex = canonical_serialize(x) + " : " + reason;
}

void check_range(int n, std::uint64_t lo, std::uint64_t hi, Partial& p) {
  GConfigEnumerator en(n, lo, hi, /*force=*/true);
  while (auto x = en.next()) {
    int k = static_cast<int>(x->tree.size());
    p.total++;
    p.by_k[k]++;
    int w = weight(*x);
    p.signed_total += w;
    try {
      InvolutionOutcome outcome = apply(*x, /*check=*/true);
      if (std::holds_alternative<LabeledRootedTree>(outcome)) {
        p.fixed++;
        const auto& t = std::get<LabeledRootedTree>(outcome);
        if (k != n)
          note(p, *x, "fixed point does not span [n]");
        else if (!is_lone_child_avoiding(t))
          note(p, *x, "fixed point has a lone child");
        else if (w != 1)
          note(p, *x, "fixed point with negative weight");
        else
          p.fixed_trees.push_back(tree_to_text(t));
      } else {
        const auto& partner = std::get<GConfiguration>(outcome);
        p.paired++;
        if (weight(partner) != -w) note(p, *x, "sign not reversed");
        if (max_special_vertex(partner) != max_special_vertex(*x))
          note(p, *x, "special vertex not preserved");
        InvolutionOutcome back = apply(partner, /*check=*/true);
        if (!std::holds_alternative<GConfiguration>(back) ||
            !(std::get<GConfiguration>(back) == *x))
          note(p, *x, "double application is not the identity");
      }
    } catch (const std::exception& e) {
      note(p, *x, std::string("exception: ") + e.what());
    }
  }
}

}  // namespace

InvolutionReport verify_involution(int n, int jobs, bool force) {
  if (n < 1) throw std::invalid_argument("verify_involution: n must be >= 1");
  if (n > kGConfigGuard && !force)
    throw GuardExceeded("verify_involution: n exceeds enumeration guard");
  if (jobs < 1) jobs = 1;
  std::uint64_t masks = GConfigEnumerator::mask_space(n);
  std::uint64_t chunks = std::min<std::uint64_t>(jobs, masks);

  std::vector<Partial> partials(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    std::uint64_t lo = masks * i / chunks;
    std::uint64_t hi = masks * (i + 1) / chunks;
    threads.emplace_back(check_range, n, lo, hi, std::ref(partials[i]));
  }
  for (auto& t : threads) t.join();

  InvolutionReport report;
  report.n = n;
  std::vector<std::string> fixed_trees;
  std::uint64_t paired = 0;
  for (const Partial& p : partials) {
    report.total_configs += p.total;
    for (const auto& [k, c] : p.by_k) report.configs_by_k[k] += c;
    paired += p.paired;
    report.fixed_count += p.fixed;
    report.signed_total += p.signed_total;
    report.violations += p.violations;
    if (report.first_counterexample.empty() && !p.first_cex.empty())
      report.first_counterexample = p.first_cex;
    fixed_trees.insert(fixed_trees.end(), p.fixed_trees.begin(),
                       p.fixed_trees.end());
  }
  if (paired % 2 != 0) {
    report.violations++;
    if (report.first_counterexample.empty())
      report.first_counterexample = "odd number of paired configurations";
  }
  report.pair_count = paired / 2;

  if (report.signed_total !=
      static_cast<std::int64_t>(report.fixed_count)) {
    report.violations++;
    if (report.first_counterexample.empty())
      report.first_counterexample = "signed total differs from fixed count";
  }

  // Fixed-point set must be exactly the lone-child-avoiding spanning trees.
  std::vector<std::string> expected;
  TreeEnumerator te(n, force);
  while (auto t = te.next())
    if (is_lone_child_avoiding(*t)) expected.push_back(tree_to_text(*t));
  std::sort(expected.begin(), expected.end());
  std::sort(fixed_trees.begin(), fixed_trees.end());
  if (expected != fixed_trees) {
    report.violations++;
    if (report.first_counterexample.empty())
      report.first_counterexample =
          "fixed-point set differs from lone-child-avoiding spanning trees";
  }
  return report;
}

}  // namespace lct
