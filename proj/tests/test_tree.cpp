#include <doctest.h>

#include <algorithm>
#include <set>

#include "figures.hpp"
#include "lct/enumerate.hpp"
#include "lct/tree.hpp"

using namespace lct;
using lct::testing::make_tree;

namespace {

LabeledRootedTree star3() { return make_tree(1, {{1, 2}, {1, 3}}); }
LabeledRootedTree path3() { return make_tree(1, {{1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("children are read off the parent map in ascending order") {
  auto star = star3();
  CHECK(star.children(1) == std::vector<Vertex>{2, 3});
  CHECK(star.children(2).empty());
  CHECK_THROWS_AS(star.children(9), std::invalid_argument);

  auto fig2b_right = testing::figure2b_right().tree;
  CHECK(fig2b_right.children(9) == std::vector<Vertex>{2, 10});
}

TEST_CASE("lone-child predicates") {
  CHECK(is_lone_child_avoiding(make_tree(1, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK_FALSE(is_lone_child_avoiding(path3()));
  CHECK(is_lone_child_avoiding(LabeledRootedTree::single(1)));

  CHECK(lone_child_vertices(testing::figure2b_left().tree) ==
        std::vector<Vertex>{5, 7});
  CHECK(lone_child_vertices(star3()).empty());
  CHECK(lone_child_vertices(path3()) == std::vector<Vertex>{2, 3});
}

TEST_CASE("tree constructor rejects broken parent structures") {
  CHECK_THROWS_AS(make_tree(1, {{2, 3}, {3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(LabeledRootedTree({1, 2}, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(LabeledRootedTree({1, 2}, 1, {{2, 5}}),
                  std::invalid_argument);
}

TEST_CASE("prufer decoding") {
  std::vector<Vertex> seq = {1};
  CHECK(prufer_decode(seq, 3, 1) == star3());
  CHECK(prufer_decode({}, 2, 1) == make_tree(1, {{1, 2}}));
  CHECK(prufer_decode({}, 1, 1) == LabeledRootedTree::single(1));

  std::vector<Vertex> bad = {4};
  CHECK_THROWS_AS(prufer_decode(bad, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(prufer_decode(seq, 4, 1), std::invalid_argument);
}

TEST_CASE("prufer encoding") {
  CHECK(prufer_encode(star3()) == std::vector<Vertex>{1});
  CHECK(prufer_encode(make_tree(1, {{1, 2}})).empty());
  CHECK_THROWS_AS(prufer_encode(make_tree(1, {{1, 3}})),
                  std::invalid_argument);
}

TEST_CASE("prufer round trips exhaustively for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    // decode then encode over all sequences
    int len = n >= 2 ? n - 2 : 0;
    std::vector<Vertex> seq(len, 1);
    std::uint64_t count = 0;
    while (true) {
      auto tree = prufer_decode(seq, n, 1);
      CHECK(prufer_encode(tree) == seq);
      ++count;
      int i = len - 1;
      while (i >= 0 && seq[i] == n) seq[i--] = 1;
      if (i < 0) break;
      seq[i]++;
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < len; ++i) expected *= n;
    CHECK(count == expected);
    // encode then decode over all trees
    TreeEnumerator en(n);
    while (auto t = en.next())
      CHECK(prufer_decode(prufer_encode(*t), n, 1) == *t);
  }
}

TEST_CASE("child counts sum to edge count") {
  TreeEnumerator en(5);
  while (auto t = en.next()) {
    std::size_t total = 0;
    for (Vertex v : t->vertices()) total += t->children(v).size();
    CHECK(total == t->size() - 1);
    CHECK(is_lone_child_avoiding(*t) == lone_child_vertices(*t).empty());
  }
}

TEST_CASE("planted bijection") {
  auto star = star3();
  auto planted = to_planted(star);
  CHECK(planted.tree() == make_tree(0, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(from_planted(planted) == star);

  auto single = LabeledRootedTree::single(1);
  CHECK(to_planted(single).tree() == make_tree(0, {{0, 1}}));
  CHECK(from_planted(to_planted(single)) == single);

  CHECK_THROWS_AS(PlantedTree(make_tree(0, {{0, 1}, {0, 2}})),
                  std::invalid_argument);
}

TEST_CASE("planted round trip and degree-2 equivalence, exhaustively n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    TreeEnumerator en(n);
    while (auto t = en.next()) {
      auto planted = to_planted(*t);
      CHECK(from_planted(planted) == *t);
      // degree in the planted tree = child count + 1 for non-root vertices
      bool has_degree2 = false;
      for (Vertex v : planted.tree().vertices()) {
        int deg = static_cast<int>(planted.tree().children(v).size()) +
                  (v == 0 ? 0 : 1);
        if (deg == 2) has_degree2 = true;
      }
      CHECK(is_lone_child_avoiding(*t) == !has_degree2);
    }
  }
}

TEST_CASE("tree text form round trips") {
  auto star = star3();
  CHECK(tree_to_text(star) == "3;1;edges=1-2,1-3");
  CHECK(tree_from_text(tree_to_text(star)) == star);
  CHECK(tree_from_text("1;1;edges=") == LabeledRootedTree::single(1));
  TreeEnumerator en(5);
  while (auto t = en.next()) CHECK(tree_from_text(tree_to_text(*t)) == *t);
}
