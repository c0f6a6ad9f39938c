#include "atfkit/markov.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace atfkit {

bool is_markov(const Integer& a, const Integer& b, const Integer& c) {
  if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("Markov entries must be positive");
  return a * a + b * b + c * c == 3 * a * b * c;
}

MarkovTriple::MarkovTriple(Integer a, Integer b, Integer c) : e_{std::move(a), std::move(b), std::move(c)} {
  if (!is_markov(e_[0], e_[1], e_[2])) throw std::invalid_argument("not a Markov triple");
}

const Integer& MarkovTriple::operator[](int pos) const {
  if (pos < 1 || pos > 3) throw std::out_of_range("Markov position must be 1, 2 or 3");
  return e_[static_cast<std::size_t>(pos - 1)];
}

MarkovTriple MarkovTriple::sorted() const {
  auto s = e_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return MarkovTriple(s[0], s[1], s[2]);
}

bool MarkovTriple::same_multiset(const MarkovTriple& other) const { return sorted() == other.sorted(); }

MarkovTriple mutate_triple(const MarkovTriple& t, int pos) {
  if (pos < 1 || pos > 3) throw std::out_of_range("Markov position must be 1, 2 or 3, got " + std::to_string(pos));
  auto e = t.entries();
  const std::size_t k = static_cast<std::size_t>(pos - 1);
  e[k] = 3 * e[(k + 1) % 3] * e[(k + 2) % 3] - e[k];
  return MarkovTriple(e[0], e[1], e[2]);
}

namespace {

void grow(TreeNode& node, const MarkovTriple* parent, int remaining) {
  if (remaining == 0) return;
  for (int pos = 1; pos <= 3; ++pos) {
    MarkovTriple child = mutate_triple(node.triple, pos).sorted();
    if (parent && child == *parent) continue;
    const bool dup = std::any_of(node.children.begin(), node.children.end(),
                                 [&](const TreeNode& c) { return c.triple == child; });
    if (dup) continue;
    auto path = node.path;
    path.push_back(pos);
    node.children.push_back(TreeNode{std::move(child), std::move(path), {}});
  }
  for (auto& c : node.children) grow(c, &node.triple, remaining - 1);
}

void collect(const TreeNode& n, std::vector<const TreeNode*>& out) {
  out.push_back(&n);
  for (const auto& c : n.children) collect(c, out);
}

}  // namespace

TreeNode markov_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  TreeNode root{MarkovTriple(1, 1, 1), {}, {}};
  grow(root, nullptr, depth);
  return root;
}

std::vector<const TreeNode*> flatten(const TreeNode& root) {
  std::vector<const TreeNode*> out;
  collect(root, out);
  return out;
}

GeometricMatch match_geometric(const std::vector<int>& path) {
  BaseTriangle tri = root_triangle();
  MarkovTriple triple(1, 1, 1);
  std::array<int, 3> position{1, 2, 3};
  for (int i : path) {
    const MutationResult m = mutate(tri, i);
    triple = mutate_triple(triple, position[static_cast<std::size_t>(i - 1)]);
    std::array<int, 3> next{};
    for (std::size_t j = 0; j < 3; ++j) next[j] = position[static_cast<std::size_t>(m.source_index[j] - 1)];
    position = next;
    tri = m.triangle;
  }
  tri.set_label(path_to_string(path));

  const WeightTriple w = weights(tri);
  WeightTriple squares;
  bool aligned = true;
  for (std::size_t j = 0; j < 3; ++j) {
    const Integer& n = triple.entries()[j];
    squares.w[j] = n * n;
    const Integer& m = triple.entries()[static_cast<std::size_t>(position[j] - 1)];
    aligned = aligned && w.w[j] == m * m;
  }
  const bool multiset = same_multiset(w, squares);
  return GeometricMatch{std::move(tri), std::move(triple), w, position, multiset, aligned};
}

MarkovTriple triple_of_triangle(const BaseTriangle& t) {
  const WeightTriple w = weights(t);
  std::array<Integer, 3> roots;
  for (std::size_t k = 0; k < 3; ++k) {
    auto r = exact_sqrt(w.w[k]);
    if (!r) throw std::domain_error("triangle not in the mutation tree");
    roots[k] = *r;
  }
  if (!is_markov(roots[0], roots[1], roots[2])) throw std::domain_error("triangle not in the mutation tree");
  return MarkovTriple(roots[0], roots[1], roots[2]);
}

}  // namespace atfkit
