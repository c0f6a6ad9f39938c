// Markov triples a^2 + b^2 + c^2 = 3abc, their mutation tree, and the
// lockstep correspondence with the tree of base triangles.
#pragma once

#include <array>
#include <vector>

#include "atfkit/lattice.hpp"
#include "atfkit/triangle.hpp"

namespace atfkit {

/// Exact test of the Markov equation. Throws std::invalid_argument if any
/// entry is non-positive.
bool is_markov(const Integer& a, const Integer& b, const Integer& c);

/// Positive solution of the Markov equation, entries kept in the given order.
class MarkovTriple {
 public:
  MarkovTriple(Integer a, Integer b, Integer c);

  const std::array<Integer, 3>& entries() const { return e_; }
  /// Entry by 1-based position.
  const Integer& operator[](int pos) const;
  /// Descending order, the way the tree is usually drawn.
  MarkovTriple sorted() const;
  bool same_multiset(const MarkovTriple& other) const;

  friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) { return a.e_ == b.e_; }

 private:
  std::array<Integer, 3> e_;
};

/// Replaces the entry x at pos (1..3) by 3yz - x.
MarkovTriple mutate_triple(const MarkovTriple& t, int pos);

struct TreeNode {
  MarkovTriple triple;      // stored sorted descending
  std::vector<int> path;    // positions, each relative to the parent's sorted triple
  std::vector<TreeNode> children;
};

/// The Markov tree to the given depth (edges from (1,1,1)). Children are
/// sorted, the mutation back to the parent is skipped and sibling duplicates
/// (which only occur above the first branching) are merged.
TreeNode markov_tree(int depth);

/// Pre-order flattening, convenient for membership checks.
std::vector<const TreeNode*> flatten(const TreeNode& root);

struct GeometricMatch {
  BaseTriangle triangle;
  MarkovTriple triple;           // walk order; see vertex_position
  WeightTriple weights;
  std::array<int, 3> vertex_position;  // triple position (1-based) matched to vertex j
  bool multiset_match;           // weights == squares of triple, as multisets
  bool aligned;                  // w_j == triple[vertex_position[j]]^2 for every j
};

/// Walks mutate and mutate_triple in lockstep along a path of vertex
/// indices, tracking which triple position each vertex carries.
GeometricMatch match_geometric(const std::vector<int>& path);

/// Integer square roots of the weights. Throws std::domain_error("triangle
/// not in the mutation tree") for a non-square weight or a non-Markov result.
MarkovTriple triple_of_triangle(const BaseTriangle& t);

}  // namespace atfkit
