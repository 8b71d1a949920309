#include "thompson/treepair.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "thompson/words.hpp"

using namespace thompson;
using thompson::testing::random_word;

namespace {

BinTree random_tree(std::mt19937& rng, int leaves) {
  if (leaves == 1) return BinTree::leaf();
  std::uniform_int_distribution<int> split(1, leaves - 1);
  int l = split(rng);
  return BinTree::node(random_tree(rng, l), random_tree(rng, leaves - l));
}

// Attaches a caret below leaf i of both trees: an explicit common caret.
TreePair unreduce_at(const TreePair& p, int i) {
  auto caret = [](const BinTree& t, int leaf, auto&& self) -> BinTree {
    if (t.is_leaf()) return BinTree::node(BinTree::leaf(), BinTree::leaf());
    int cl = t.left().leaf_count();
    if (leaf < cl) return BinTree::node(self(t.left(), leaf, self), t.right());
    return BinTree::node(t.left(), self(t.right(), leaf - cl, self));
  };
  return TreePair(caret(p.dom, i, caret), caret(p.ran, i, caret));
}

TreePair word_as_pair(const Word& w) {
  TreePair acc;
  for (const auto& l : w.letters) {
    TreePair gen = from_map(generator_map(l.index));
    if (l.exp < 0) gen = inverse(gen);
    for (long e = l.exp < 0 ? -l.exp : l.exp; e-- > 0;) acc = multiply(acc, gen);
  }
  return acc;
}

}  // namespace

TEST_CASE("tree text form") {
  BinTree x0_dom = BinTree::parse("((*,*),*)");
  CHECK(x0_dom.str() == "((*,*),*)");
  CHECK(x0_dom.leaf_count() == 3);
  CHECK(BinTree::parse("*") == BinTree::leaf());
  CHECK_THROWS_AS(BinTree::parse("((*,*)"), SyntaxError);
  CHECK_THROWS_AS(BinTree::parse("(*,*) "), SyntaxError);
  CHECK(TreePair(x0_dom, BinTree::parse("(*,(*,*))")).str() == "((*,*),*) -> (*,(*,*))");
}

TEST_CASE("to_map") {
  CHECK(to_map(TreePair()) == PLMap::identity(unit_interval()));

  // The caret-left -> caret-right pair is exactly x0.
  TreePair p(BinTree::parse("((*,*),*)"), BinTree::parse("(*,(*,*))"));
  CHECK(to_map(p) == generator_map(0));

  CHECK_THROWS_AS(TreePair(BinTree::parse("((*,*),*)"), BinTree::parse("(*,(*,(*,*)))")),
                  LeafCountMismatch);
}

TEST_CASE("from_map") {
  CHECK(from_map(PLMap::identity(unit_interval())) == TreePair());
  TreePair x0_pair = from_map(generator_map(0));
  CHECK(x0_pair.dom.leaf_count() == 3);
  CHECK(to_map(x0_pair) == generator_map(0));
  TreePair b_pair = from_map(b_map());
  CHECK(to_map(b_pair) == b_map());
}

TEST_CASE("multiply") {
  TreePair x0_pair = from_map(generator_map(0));
  CHECK(multiply(x0_pair, TreePair()) == x0_pair);
  CHECK(multiply(x0_pair, inverse(x0_pair)) == TreePair());
  CHECK(to_map(multiply(x0_pair, x0_pair)) == compose(generator_map(0), generator_map(0)));
}

TEST_CASE("reduce") {
  TreePair x0_pair = from_map(generator_map(0));
  CHECK(reduce(x0_pair) == x0_pair);
  for (int i = 0; i < 3; ++i) CHECK(reduce(unreduce_at(x0_pair, i)) == x0_pair);
  std::mt19937 rng(53);
  for (int i = 0; i < 30; ++i) {
    TreePair p = from_map(thompson::testing::random_map(rng, 6));
    CHECK(reduce(p) == p);
    std::uniform_int_distribution<int> leaf(0, p.dom.leaf_count() - 1);
    TreePair grown = unreduce_at(p, leaf(rng));
    CHECK(to_map(grown) == to_map(p));
    CHECK(reduce(grown) == p);
  }
}

TEST_CASE("round trips") {
  std::mt19937 rng(59);
  SUBCASE("to_map . from_map is the identity on maps") {
    for (int i = 0; i < 40; ++i) {
      PLMap f = thompson::testing::random_map(rng, 8);
      CHECK(to_map(from_map(f)) == f);
    }
  }
  SUBCASE("from_map . to_map is the identity on reduced pairs") {
    std::uniform_int_distribution<int> leaves(1, 12);
    for (int i = 0; i < 40; ++i) {
      int n = leaves(rng);
      TreePair p = reduce(TreePair(random_tree(rng, n), random_tree(rng, n)));
      CHECK(from_map(to_map(p)) == p);
    }
  }
}

TEST_CASE("tree-pair evaluation matches breakpoint evaluation") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> len(0, 10);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, len(rng));
    CHECK(to_map(word_as_pair(w)) == eval_word(w));
  }
}
