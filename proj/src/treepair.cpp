#include "thompson/treepair.hpp"

#include <vector>

namespace thompson {

struct BinTree::Node {
  BinTree left, right;
  int leaves;
};

BinTree BinTree::node(BinTree left, BinTree right) {
  BinTree t;
  int leaves = left.leaf_count() + right.leaf_count();
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves});
  return t;
}

const BinTree& BinTree::left() const { return node_->left; }
const BinTree& BinTree::right() const { return node_->right; }
int BinTree::leaf_count() const { return node_ ? node_->leaves : 1; }

bool operator==(const BinTree& a, const BinTree& b) {
  if (a.node_ == b.node_) return true;  // covers leaf == leaf and shared subtrees
  if (a.is_leaf() || b.is_leaf()) return false;
  if (a.leaf_count() != b.leaf_count()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

std::string BinTree::str() const {
  if (is_leaf()) return "*";
  return "(" + left().str() + "," + right().str() + ")";
}

namespace {

BinTree parse_tree(std::string_view text, std::size_t& i) {
  if (i >= text.size()) throw SyntaxError("unexpected end of tree", i);
  if (text[i] == '*') {
    ++i;
    return BinTree::leaf();
  }
  if (text[i] != '(') throw SyntaxError("expected '*' or '('", i);
  ++i;
  BinTree left = parse_tree(text, i);
  if (i >= text.size() || text[i] != ',') throw SyntaxError("expected ','", i);
  ++i;
  BinTree right = parse_tree(text, i);
  if (i >= text.size() || text[i] != ')') throw SyntaxError("expected ')'", i);
  ++i;
  return BinTree::node(std::move(left), std::move(right));
}

// The partition points 0 = p_0 < ... < p_n = 1 of the tree's standard
// dyadic decomposition of [lo, hi].
void partition_points(const BinTree& t, const Dyadic& lo, const Dyadic& hi,
                      std::vector<Dyadic>& out) {
  if (t.is_leaf()) {
    out.push_back(hi);
    return;
  }
  Dyadic mid = (lo + hi).times_pow2(-1);
  partition_points(t.left(), lo, mid, out);
  partition_points(t.right(), mid, hi, out);
}

std::vector<Dyadic> partition_points(const BinTree& t) {
  std::vector<Dyadic> out;
  out.reserve(t.leaf_count() + 1);
  out.push_back(Dyadic(0));
  partition_points(t, Dyadic(0), Dyadic(1), out);
  return out;
}

// True iff leaves i and i+1 of t are children of one node.
bool is_sibling_pair(const BinTree& t, int i) {
  if (t.is_leaf()) return false;
  int cl = t.left().leaf_count();
  if (i + 1 < cl) return is_sibling_pair(t.left(), i);
  if (i >= cl) return is_sibling_pair(t.right(), i - cl);
  // the pair straddles the root split
  return t.left().is_leaf() && t.right().is_leaf();
}

// Replaces the caret whose leaves are i, i+1 by a single leaf.
BinTree remove_caret(const BinTree& t, int i) {
  int cl = t.left().leaf_count();
  if (i + 1 < cl) return BinTree::node(remove_caret(t.left(), i), t.right());
  if (i >= cl) return BinTree::node(t.left(), remove_caret(t.right(), i - cl));
  return BinTree::leaf();
}

// Replaces leaf i of t by the subtree s.
BinTree graft_leaf(const BinTree& t, int i, const BinTree& s) {
  if (t.is_leaf()) return s;
  int cl = t.left().leaf_count();
  if (i < cl) return BinTree::node(graft_leaf(t.left(), i, s), t.right());
  return BinTree::node(t.left(), graft_leaf(t.right(), i - cl, s));
}

// For each leaf of `coarse`, the subtree sitting at that position in the
// refinement `fine`.  Requires coarse <= fine leafwise.
void overhang(const BinTree& coarse, const BinTree& fine, std::vector<BinTree>& out) {
  if (coarse.is_leaf()) {
    out.push_back(fine);
    return;
  }
  if (fine.is_leaf()) throw Error("overhang: tree is not a refinement");
  overhang(coarse.left(), fine.left(), out);
  overhang(coarse.right(), fine.right(), out);
}

// Smallest common refinement of two trees.
BinTree merge_trees(const BinTree& s, const BinTree& t) {
  if (s.is_leaf()) return t;
  if (t.is_leaf()) return s;
  return BinTree::node(merge_trees(s.left(), t.left()), merge_trees(s.right(), t.right()));
}

// Grafts per-leaf subtrees onto t, left to right.
BinTree graft_all(const BinTree& t, const std::vector<BinTree>& subtrees, int& next) {
  if (t.is_leaf()) return subtrees[static_cast<std::size_t>(next++)];
  BinTree l = graft_all(t.left(), subtrees, next);
  BinTree r = graft_all(t.right(), subtrees, next);
  return BinTree::node(std::move(l), std::move(r));
}

BinTree graft_all(const BinTree& t, const std::vector<BinTree>& subtrees) {
  int next = 0;
  return graft_all(t, subtrees, next);
}

}  // namespace

BinTree BinTree::parse(std::string_view text) {
  std::size_t i = 0;
  BinTree t = parse_tree(text, i);
  if (i != text.size()) throw SyntaxError("trailing characters after tree", i);
  return t;
}

TreePair::TreePair(BinTree d, BinTree r) : dom(std::move(d)), ran(std::move(r)) {
  if (dom.leaf_count() != ran.leaf_count())
    throw LeafCountMismatch("tree pair with " + std::to_string(dom.leaf_count()) + " vs " +
                            std::to_string(ran.leaf_count()) + " leaves");
}

std::string TreePair::str() const { return dom.str() + " -> " + ran.str(); }

PLMap to_map(const TreePair& p) {
  std::vector<Dyadic> xs = partition_points(p.dom);
  std::vector<Dyadic> ys = partition_points(p.ran);
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({std::move(xs[i]), std::move(ys[i])});
  return PLMap::make(unit_interval(), std::move(pts));
}

namespace {

// Builds the coarsest standard dyadic partition of [lo, hi] on which f is
// linear with a standard dyadic image, as a tree.
BinTree build_dom(const PLMap& f, const Dyadic& lo, const Dyadic& hi) {
  Dyadic flo = f.evaluate(lo);
  Dyadic fhi = f.evaluate(hi);
  // linear on [lo, hi]?
  bool linear = true;
  for (const auto& p : f.points())
    if (lo < p.x && p.x < hi) {
      linear = false;
      break;
    }
  if (linear) {
    // image standard: length 2^-m and left endpoint a multiple of it
    Dyadic len = fhi - flo;
    if (len.num() == 1) {
      int m = len.exp();
      if (flo.exp() <= m) return BinTree::leaf();
    }
  }
  Dyadic mid = (lo + hi).times_pow2(-1);
  return BinTree::node(build_dom(f, lo, mid), build_dom(f, mid, hi));
}

// Rebuilds the tree whose leaf partition of [lo, hi] is the given point
// run points[first..last].
BinTree build_from_partition(const std::vector<Dyadic>& points, std::size_t first,
                             std::size_t last, const Dyadic& lo, const Dyadic& hi) {
  if (first + 1 == last) return BinTree::leaf();
  Dyadic mid = (lo + hi).times_pow2(-1);
  std::size_t split = first;
  while (split < last && points[split] != mid) ++split;
  if (split >= last) throw Error("partition is not standard dyadic");
  return BinTree::node(build_from_partition(points, first, split, lo, mid),
                       build_from_partition(points, split, last, mid, hi));
}

}  // namespace

TreePair from_map(const PLMap& f) {
  if (f.domain() != unit_interval())
    throw DomainMismatch("from_map needs domain [0, 1], got " + f.domain().str());
  BinTree dom = build_dom(f, Dyadic(0), Dyadic(1));
  std::vector<Dyadic> xs = partition_points(dom);
  std::vector<Dyadic> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f.evaluate(x));
  BinTree ran = build_from_partition(ys, 0, ys.size() - 1, Dyadic(0), Dyadic(1));
  return TreePair(std::move(dom), std::move(ran));
}

TreePair multiply(const TreePair& p, const TreePair& q) {
  // Common refinement E of p.ran and q.dom; grow p and q onto it, then
  // compose leafwise and reduce.
  BinTree e = merge_trees(p.ran, q.dom);
  std::vector<BinTree> growth_p, growth_q;
  overhang(p.ran, e, growth_p);
  overhang(q.dom, e, growth_q);
  BinTree new_dom = graft_all(p.dom, growth_p);
  BinTree new_ran = graft_all(q.ran, growth_q);
  return reduce(TreePair(std::move(new_dom), std::move(new_ran)));
}

TreePair reduce(const TreePair& p) {
  BinTree dom = p.dom;
  BinTree ran = p.ran;
  bool changed = true;
  while (changed && !dom.is_leaf()) {
    changed = false;
    int n = dom.leaf_count();
    for (int i = 0; i + 1 < n; ++i) {
      if (is_sibling_pair(dom, i) && is_sibling_pair(ran, i)) {
        dom = remove_caret(dom, i);
        ran = remove_caret(ran, i);
        changed = true;
        break;
      }
    }
  }
  return TreePair(std::move(dom), std::move(ran));
}

TreePair inverse(const TreePair& p) { return TreePair(p.ran, p.dom); }

}  // namespace thompson
