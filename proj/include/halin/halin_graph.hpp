#ifndef HALIN_HALIN_GRAPH_HPP
#define HALIN_HALIN_GRAPH_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "halin/plane_tree.hpp"

namespace halin {

// A Halin graph: plane tree plus the cycle through its leaves in plane order.
struct HalinGraph {
  PlaneTree tree;
  std::vector<int> leaves;  // in plane (DFS) order; the leaf cycle
  struct Edge {
    int u, v;
    bool peripheral;
  };
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> edge_id;

  int n_vertices() const { return static_cast<int>(tree.nodes.size()); }
  int n_spanning() const { return tree.internal_count(); }
  bool is_peripheral(int v) const { return tree.is_leaf(v); }

  int find_edge(int u, int v) const {
    auto it = edge_id.find(std::minmax(u, v));
    return it == edge_id.end() ? -1 : it->second;
  }
};

namespace detail {
inline std::vector<int> plane_leaves(const PlaneTree& t) {
  std::vector<int> out;
  std::vector<std::pair<int, size_t>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto& [v, ci] = stack.back();
    const auto& kids = t.nodes[v].kids;
    if (kids.empty()) {
      out.push_back(v);
      stack.pop_back();
    } else if (ci < kids.size()) {
      int k = kids[ci++];
      stack.emplace_back(k, 0);
    } else {
      stack.pop_back();
    }
  }
  return out;
}
}  // namespace detail

inline HalinGraph make_halin(Mode mode, PlaneTree tree) {
  HalinGraph h;
  h.tree = std::move(tree);
  const PlaneTree& t = h.tree;
  if (t.is_leaf(t.root)) throw std::invalid_argument("Halin root must be internal");
  for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
    size_t k = t.nodes[v].kids.size();
    if (k == 0) continue;
    size_t deg = k + (v == t.root ? 0 : 1);
    if (deg > 3) throw std::invalid_argument("internal degree above 3");
    if (deg != 3 && !mode_allows_unary(mode))
      throw std::invalid_argument("degree-2 spanning vertex in cubic mode");
    if (deg < 2) throw std::invalid_argument("internal vertex of degree 1");
  }
  h.leaves = detail::plane_leaves(t);
  if (h.leaves.size() < 3) throw std::invalid_argument("Halin graph needs at least 3 leaves");

  auto add_edge = [&](int u, int v, bool per) {
    h.edge_id[std::minmax(u, v)] = static_cast<int>(h.edges.size());
    h.edges.push_back({u, v, per});
  };
  for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
    if (t.nodes[v].parent != -1) add_edge(t.nodes[v].parent, v, false);
  for (size_t i = 0; i < h.leaves.size(); ++i)
    add_edge(h.leaves[i], h.leaves[(i + 1) % h.leaves.size()], true);
  return h;
}

inline HalinGraph parse_halin(Mode mode, const std::string& text) {
  return make_halin(mode, parse_tree(text));
}

namespace detail {

// Clockwise neighbor lists of the tree: root's kids as written, elsewhere
// parent first.
inline std::vector<std::vector<int>> tree_adjacency(const PlaneTree& t) {
  std::vector<std::vector<int>> adj(t.nodes.size());
  for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
    if (v != t.root) adj[v].push_back(t.nodes[v].parent);
    for (int k : t.nodes[v].kids) adj[v].push_back(k);
  }
  return adj;
}

// Serialize the tree rerooted at `w`, with w's neighbor list rotated to start
// at position `rot`.  Non-root nodes list their children in cyclic order
// after the parent.
inline std::string serialize_rerooted(const std::vector<std::vector<int>>& adj, int w, int rot) {
  std::string out;
  struct Frame {
    int v, parent;
    size_t emitted;
  };
  std::vector<Frame> stack{{w, -1, 0}};
  auto kids_of = [&](int v, int parent, size_t i) -> int {
    const auto& a = adj[v];
    size_t deg = a.size();
    if (parent == -1) return a[(rot + i) % deg];
    size_t p = 0;
    while (a[p] != parent) ++p;
    return a[(p + 1 + i) % deg];
  };
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& a = adj[fr.v];
    size_t nkids = fr.parent == -1 ? a.size() : a.size() - 1;
    if (nkids == 0) {
      out.push_back('*');
      stack.pop_back();
      continue;
    }
    if (fr.emitted == 0) out.push_back('(');
    if (fr.emitted < nkids) {
      if (fr.emitted > 0) out.push_back(',');
      int k = kids_of(fr.v, fr.parent, fr.emitted);
      ++fr.emitted;
      stack.push_back({k, fr.v, 0});
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace detail

// Lexicographically least parse string over all internal rerootings, child
// rotations, and both orientations.  Equal strings identify isomorphic plane
// graphs up to reflection.
inline std::string canonical_form(const HalinGraph& h) {
  std::string best;
  for (int refl = 0; refl < 2; ++refl) {
    PlaneTree cur = refl ? mirror_tree(h.tree) : h.tree;
    auto adj = detail::tree_adjacency(cur);
    for (int w = 0; w < static_cast<int>(cur.nodes.size()); ++w) {
      if (cur.is_leaf(w)) continue;
      for (size_t rot = 0; rot < adj[w].size(); ++rot) {
        std::string s = detail::serialize_rerooted(adj, w, static_cast<int>(rot));
        if (best.empty() || s < best) best = std::move(s);
      }
    }
  }
  return best;
}

struct TripoleOfResult {
  Tripole tripole;
  std::vector<int> orig_vertex;  // tripole node id -> Halin vertex id
};

// The tripole obtained by deleting the peripheral vertex v.  The root is v's
// tree neighbor; child orders preserve the plane orientation, so the x
// semi-edge sits at the leftmost leaf = cycle successor of v.
inline TripoleOfResult tripole_of(const HalinGraph& h, int v) {
  if (!h.is_peripheral(v)) throw std::invalid_argument("vertex is not peripheral");
  auto adj = detail::tree_adjacency(h.tree);
  int u = h.tree.nodes[v].parent;

  PlaneTree t;
  std::vector<int> orig;
  t.nodes.emplace_back();
  orig.push_back(u);
  t.root = 0;
  // frame: (new id, halin vertex, halin parent)
  struct Item {
    int id, hv, hp;
  };
  std::vector<Item> queue{{0, u, v}};
  for (size_t q = 0; q < queue.size(); ++q) {
    auto [id, hv, hp] = queue[q];
    const auto& a = adj[hv];
    size_t p = 0;
    while (a[p] != hp) ++p;
    for (size_t i = 1; i < a.size(); ++i) {
      int nb = a[(p + i) % a.size()];
      int nid = static_cast<int>(t.nodes.size());
      t.nodes.emplace_back();
      t.nodes[nid].parent = id;
      t.nodes[id].kids.push_back(nid);
      orig.push_back(nb);
      queue.push_back({nid, nb, hv});
    }
  }
  return {Tripole{std::move(t)}, std::move(orig)};
}

}  // namespace halin

#endif
