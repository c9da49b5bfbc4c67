#ifndef HALIN_PLANE_TREE_HPP
#define HALIN_PLANE_TREE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "halin/boundary.hpp"

namespace halin {

// Rooted plane tree; child order encodes the clockwise plane embedding.
struct PlaneTree {
  struct Node {
    std::vector<int> kids;
    int parent = -1;
  };
  std::vector<Node> nodes;
  int root = 0;

  bool is_leaf(int v) const { return nodes[v].kids.empty(); }

  int leaf_count() const {
    int n = 0;
    for (const auto& nd : nodes) n += nd.kids.empty();
    return n;
  }

  int internal_count() const { return static_cast<int>(nodes.size()) - leaf_count(); }
};

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(size_t off, const std::string& msg)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

// Grammar: node := "*" | "(" node ("," node)* ")".  Whitespace ignored.
inline PlaneTree parse_tree(const std::string& text) {
  PlaneTree t;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
  std::vector<int> stack;  // open internal nodes
  int made_root = -1;

  auto attach = [&](int node) {
    if (stack.empty()) {
      if (made_root != -1) throw ParseError(i, "trailing content after root node");
      made_root = node;
    } else {
      t.nodes[node].parent = stack.back();
      t.nodes[stack.back()].kids.push_back(node);
    }
  };

  skip();
  while (i < text.size()) {
    char c = text[i];
    if (c == '*') {
      t.nodes.emplace_back();
      attach(static_cast<int>(t.nodes.size()) - 1);
      ++i;
    } else if (c == '(') {
      if (made_root != -1 && stack.empty()) throw ParseError(i, "trailing content after root node");
      t.nodes.emplace_back();
      int id = static_cast<int>(t.nodes.size()) - 1;
      if (!stack.empty()) {
        t.nodes[id].parent = stack.back();
        t.nodes[stack.back()].kids.push_back(id);
      } else {
        made_root = id;
      }
      stack.push_back(id);
      ++i;
    } else if (c == ',') {
      if (stack.empty()) throw ParseError(i, "',' outside parentheses");
      if (t.nodes[stack.back()].kids.empty()) throw ParseError(i, "',' before first child");
      ++i;
      skip();
      if (i >= text.size() || (text[i] != '*' && text[i] != '('))
        throw ParseError(i, "expected node after ','");
      continue;
    } else if (c == ')') {
      if (stack.empty()) throw ParseError(i, "unmatched ')'");
      if (t.nodes[stack.back()].kids.empty()) throw ParseError(i, "empty node list");
      stack.pop_back();
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    skip();
  }
  if (!stack.empty()) throw ParseError(i, "unmatched '('");
  if (made_root == -1) throw ParseError(i, "empty input");
  t.root = made_root;
  return t;
}

inline std::string serialize_tree(const PlaneTree& t) {
  std::string out;
  // iterative pre-order; frame = (node, next child index)
  std::vector<std::pair<int, size_t>> stack;
  stack.emplace_back(t.root, 0);
  while (!stack.empty()) {
    auto& [v, ci] = stack.back();
    const auto& kids = t.nodes[v].kids;
    if (kids.empty()) {
      out.push_back('*');
      stack.pop_back();
      continue;
    }
    if (ci == 0) out.push_back('(');
    if (ci < kids.size()) {
      if (ci > 0) out.push_back(',');
      int k = kids[ci];
      ++ci;
      stack.emplace_back(k, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

// Rooted plane tree encoding of a Halin tripole.  The root node is the root
// vertex r* (or the single vertex of the trivial tripole when it is a leaf).
struct Tripole {
  PlaneTree tree;

  int rank() const { return tree.internal_count(); }

  // In cubic mode every internal node has exactly 2 children; subcubic
  // modes also allow single-child (degree-2) internal nodes.
  void validate(Mode mode) const {
    for (const auto& nd : tree.nodes) {
      size_t k = nd.kids.size();
      if (k > 2) throw std::invalid_argument("tripole node with more than 2 children");
      if (k == 1 && !mode_allows_unary(mode))
        throw std::invalid_argument("degree-2 spanning vertex in cubic mode");
    }
  }
};

inline Tripole parse_tripole(Mode mode, const std::string& text) {
  Tripole t{parse_tree(text)};
  t.validate(mode);
  return t;
}

struct Decomposition {
  enum Kind { Trivial, Unary, Binary } kind;
  Tripole left, right;  // Unary: child in `left`
};

// Lemma-3 style decomposition at the root.
inline Decomposition decompose(const Tripole& t) {
  const PlaneTree& tr = t.tree;
  if (tr.is_leaf(tr.root)) return {Decomposition::Trivial, {}, {}};

  auto subtree = [&](int sub_root) {
    PlaneTree s;
    std::vector<int> map(tr.nodes.size(), -1);
    s.nodes.emplace_back();
    map[sub_root] = 0;
    // BFS copy preserving child order
    std::vector<int> order{sub_root};
    for (size_t q = 0; q < order.size(); ++q) {
      int v = order[q];
      for (int k : tr.nodes[v].kids) {
        map[k] = static_cast<int>(s.nodes.size());
        s.nodes.emplace_back();
        s.nodes[map[k]].parent = map[v];
        s.nodes[map[v]].kids.push_back(map[k]);
        order.push_back(k);
      }
    }
    s.root = 0;
    return Tripole{std::move(s)};
  };

  const auto& kids = tr.nodes[tr.root].kids;
  if (kids.size() == 1) return {Decomposition::Unary, subtree(kids[0]), {}};
  return {Decomposition::Binary, subtree(kids[0]), subtree(kids[1])};
}

// Rebuild a tripole from child tripoles under a fresh root.
inline Tripole compose_tripole(const Tripole& t1, const Tripole& t2) {
  PlaneTree t;
  t.nodes.emplace_back();
  t.root = 0;
  auto graft = [&](const Tripole& src) {
    int base = static_cast<int>(t.nodes.size());
    for (const auto& nd : src.tree.nodes) {
      PlaneTree::Node n;
      n.parent = nd.parent == -1 ? 0 : nd.parent + base;
      for (int k : nd.kids) n.kids.push_back(k + base);
      t.nodes.push_back(std::move(n));
    }
    t.nodes[0].kids.push_back(src.tree.root + base);
  };
  graft(t1);
  graft(t2);
  return Tripole{std::move(t)};
}

inline Tripole unary_tripole(const Tripole& child) {
  PlaneTree t;
  t.nodes.emplace_back();
  t.root = 0;
  int base = 1;
  for (const auto& nd : child.tree.nodes) {
    PlaneTree::Node n;
    n.parent = nd.parent == -1 ? 0 : nd.parent + base;
    for (int k : nd.kids) n.kids.push_back(k + base);
    t.nodes.push_back(std::move(n));
  }
  t.nodes[0].kids.push_back(child.tree.root + base);
  return Tripole{std::move(t)};
}

// Reverse all child orders (reflection of the plane embedding).
inline PlaneTree mirror_tree(PlaneTree t) {
  for (auto& nd : t.nodes) std::reverse(nd.kids.begin(), nd.kids.end());
  return t;
}

inline Tripole mirror(const Tripole& t) { return Tripole{mirror_tree(t.tree)}; }

// Random cubic Halin tree: start from the 3-leaf star and repeatedly expand
// a uniformly random leaf into an internal node with two leaf children.
inline PlaneTree random_cubic_tree(int n_leaves, std::mt19937& rng) {
  if (n_leaves < 3) throw std::invalid_argument("need at least 3 leaves");
  PlaneTree t;
  t.nodes.resize(4);
  t.root = 0;
  t.nodes[0].kids = {1, 2, 3};
  for (int i = 1; i <= 3; ++i) t.nodes[i].parent = 0;
  std::vector<int> leaves{1, 2, 3};
  while (static_cast<int>(leaves.size()) < n_leaves) {
    size_t pick = std::uniform_int_distribution<size_t>(0, leaves.size() - 1)(rng);
    int v = leaves[pick];
    int a = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    t.nodes.emplace_back();
    t.nodes[a].parent = v;
    t.nodes[a + 1].parent = v;
    t.nodes[v].kids = {a, a + 1};
    leaves[pick] = a;
    leaves.push_back(a + 1);
  }
  return t;
}

}  // namespace halin

#endif
