#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "thompson/plmap.hpp"

namespace thompson {

/// Immutable finite binary tree; a leaf is the empty tree handle.  A leaf
/// at path p (left = 0, right = 1) stands for the standard dyadic interval
/// of [0,1] whose binary expansion starts with p, so a tree is the same
/// thing as a standard dyadic partition of [0,1].
class BinTree {
 public:
  BinTree() = default;  // leaf

  static BinTree leaf() { return BinTree(); }
  static BinTree node(BinTree left, BinTree right);

  bool is_leaf() const { return node_ == nullptr; }
  const BinTree& left() const;
  const BinTree& right() const;
  int leaf_count() const;

  friend bool operator==(const BinTree& a, const BinTree& b);

  /// Parenthesized form: "*" for a leaf, "(L,R)" for a node.
  std::string str() const;
  static BinTree parse(std::string_view text);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Tree-pair diagram: leaf i of dom maps linearly onto leaf i of ran.
/// The pair (((*,*),*) -> (*,(*,*))) is the generator x0; this orientation
/// is what makes to_map agree with the breakpoint table of x0.
///
/// Construction only checks equal leaf counts; reduce() removes common
/// carets, and from_map/multiply always return reduced pairs.
struct TreePair {
  BinTree dom, ran;

  TreePair() = default;  // identity: leaf -> leaf
  TreePair(BinTree d, BinTree r);

  friend bool operator==(const TreePair& p, const TreePair& q) = default;
  std::string str() const;  // "dom -> ran"
};

/// The PL map sending dom's dyadic partition linearly onto ran's.
PLMap to_map(const TreePair& p);

/// The unique reduced pair with to_map(from_map(f)) == f; requires
/// domain [0,1].
TreePair from_map(const PLMap& f);

/// Right-action product: to_map(multiply(p, q)) == compose(to_map(p),
/// to_map(q)).  Computed on the trees themselves via the common
/// refinement of p.ran and q.dom; result is reduced.
TreePair multiply(const TreePair& p, const TreePair& q);

/// Removes every common caret (leaves i, i+1 forming a sibling pair in
/// both trees); idempotent and preserves to_map.
TreePair reduce(const TreePair& p);

TreePair inverse(const TreePair& p);

}  // namespace thompson
