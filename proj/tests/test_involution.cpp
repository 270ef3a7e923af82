#include <doctest.h>

#include "figures.hpp"
#include "lct/enumerate.hpp"
#include "lct/involution.hpp"

using namespace lct;
using namespace lct::testing;

TEST_CASE("classification of the figure configurations") {
  CHECK(classify(figure2a_left()) ==
        CaseTag{CaseTag::Kind::ArcCycle, 8});
  CHECK(classify(figure2a_right()) ==
        CaseTag{CaseTag::Kind::LoneChildOfRoot, 8});
  CHECK(classify(figure2b_left()) ==
        CaseTag{CaseTag::Kind::ArcPath, 9, 7});
  CHECK(classify(figure2b_right()) ==
        CaseTag{CaseTag::Kind::LoneChildOfInner, 9, 7});

  auto full_star = make_config(4, {{1, 2}, {1, 3}, {1, 4}}, {});
  CHECK(classify(full_star) == std::nullopt);
}

TEST_CASE("classify rejects invalid configurations") {
  auto bad = figure1();
  bad.arcs[5] = 1;
  CHECK_THROWS_AS(classify(bad), std::invalid_argument);
}

TEST_CASE("cycle-case conversion matches the figure, both directions") {
  auto left = figure2a_left();
  auto right = figure2a_right();
  CHECK(std::get<GConfiguration>(apply(left)) == right);
  CHECK(std::get<GConfiguration>(apply(right)) == left);
}

TEST_CASE("path-case conversion matches the figure, both directions") {
  auto left = figure2b_left();
  auto right = figure2b_right();
  CHECK(std::get<GConfiguration>(apply(left)) == right);
  CHECK(std::get<GConfiguration>(apply(right)) == left);
}

TEST_CASE("the two configurations at n = 2 pair with each other") {
  auto arc = make_config(2, {}, {{2, 2}});
  auto tree = make_config(2, {{1, 2}}, {});
  CHECK(std::get<GConfiguration>(apply(arc)) == tree);
  CHECK(std::get<GConfiguration>(apply(tree)) == arc);
}

TEST_CASE("a spanning lone-child-avoiding tree is a fixed point") {
  auto full_star = make_config(4, {{1, 2}, {1, 3}, {1, 4}}, {});
  auto outcome = apply(full_star);
  REQUIRE(std::holds_alternative<LabeledRootedTree>(outcome));
  CHECK(std::get<LabeledRootedTree>(outcome) == full_star.tree);
}

TEST_CASE("exhaustive involution checks at small sizes") {
  auto r2 = verify_involution(2);
  CHECK(r2.total_configs == 2);
  CHECK(r2.pair_count == 1);
  CHECK(r2.fixed_count == 0);
  CHECK(r2.signed_total == 0);
  CHECK(r2.clean());

  auto r3 = verify_involution(3);
  CHECK(r3.total_configs == 9);
  CHECK(r3.pair_count == 4);
  CHECK(r3.fixed_count == 1);
  CHECK(r3.signed_total == 1);
  CHECK(r3.configs_by_k == std::map<int, std::uint64_t>{{1, 2}, {2, 4}, {3, 3}});
  CHECK(r3.clean());

  for (int n = 1; n <= 5; ++n) CHECK(verify_involution(n).clean());
}

TEST_CASE("verification report is independent of the worker count") {
  auto serial = verify_involution(5, 1);
  auto parallel = verify_involution(5, 4);
  CHECK(serial.total_configs == parallel.total_configs);
  CHECK(serial.configs_by_k == parallel.configs_by_k);
  CHECK(serial.pair_count == parallel.pair_count);
  CHECK(serial.fixed_count == parallel.fixed_count);
  CHECK(serial.signed_total == parallel.signed_total);
  CHECK(serial.violations == parallel.violations);
}

TEST_CASE("guard refuses oversized verification unless forced") {
  CHECK_THROWS_AS(verify_involution(12), GuardExceeded);
}

TEST_CASE("case tags print their parameters") {
  CHECK(to_string(CaseTag{CaseTag::Kind::ArcPath, 9, 7}) == "ArcPath(m=9, c=7)");
  CHECK(to_string(CaseTag{CaseTag::Kind::ArcCycle, 8}) == "ArcCycle(m=8)");
}
