#ifndef HALIN_ORACLE_HPP
#define HALIN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "halin/halin_graph.hpp"
#include "halin/palette.hpp"

namespace halin {

// Small graph with optional semi-edges (v == -1), the coloring substrate for
// the brute-force checkers.
struct ColorGraph {
  struct E {
    int u, v;  // v = -1 for a semi-edge
  };
  int nv = 0;
  std::vector<E> edges;
  std::vector<std::vector<int>> vedges;  // incident edge ids
  std::vector<std::vector<int>> vadj;    // neighbors via real edges
  // boundary bookkeeping when built from a tripole
  int semi_r = -1, semi_x = -1, semi_y = -1;
  int vert_r = -1, vert_x = -1, vert_y = -1;

  int add_edge(int u, int v) {
    int id = static_cast<int>(edges.size());
    edges.push_back({u, v});
    vedges[u].push_back(id);
    if (v >= 0) {
      vedges[v].push_back(id);
      vadj[u].push_back(v);
      vadj[v].push_back(u);
    }
    return id;
  }
};

inline ColorGraph graph_of_halin(const HalinGraph& h) {
  ColorGraph g;
  g.nv = h.n_vertices();
  g.vedges.resize(g.nv);
  g.vadj.resize(g.nv);
  for (const auto& e : h.edges) g.add_edge(e.u, e.v);
  return g;
}

// Tripole as a colorable graph: tree edges, the peripheral path between
// consecutive leaves, and the three semi-edges r (root), x (leftmost leaf),
// y (rightmost leaf).
inline ColorGraph graph_of_tripole(const Tripole& t) {
  ColorGraph g;
  g.nv = static_cast<int>(t.tree.nodes.size());
  g.vedges.resize(g.nv);
  g.vadj.resize(g.nv);
  for (int v = 0; v < g.nv; ++v)
    if (t.tree.nodes[v].parent != -1) g.add_edge(t.tree.nodes[v].parent, v);
  auto leaves = detail::plane_leaves(t.tree);
  for (size_t i = 0; i + 1 < leaves.size(); ++i) g.add_edge(leaves[i], leaves[i + 1]);
  g.vert_r = t.tree.root;
  g.vert_x = leaves.front();
  g.vert_y = leaves.back();
  g.semi_r = g.add_edge(g.vert_r, -1);
  g.semi_x = g.add_edge(g.vert_x, -1);
  g.semi_y = g.add_edge(g.vert_y, -1);
  return g;
}

enum class BruteKind { Total, Avd, Snd };

struct BruteColoring {
  std::vector<int> edge_color;
  std::vector<int> vert_color;  // empty for edge-only kinds
};

namespace detail {

struct BruteEngine {
  const ColorGraph& g;
  int k;
  BruteKind kind;
  std::vector<int> ec, vc;
  std::vector<uint32_t> inc;    // incident edge color mask per vertex
  std::vector<int> done;        // colored incident edges per vertex
  std::vector<int> deg;
  struct Elem {
    bool is_vertex;
    int id;
  };
  std::vector<Elem> order;
  uint64_t colorings = 0;
  bool stop_at_first = false;
  bool found = false;
  std::function<void(const BruteColoring&)> sink;

  BruteEngine(const ColorGraph& gr, int colors, BruteKind kd)
      : g(gr), k(colors), kind(kd) {
    ec.assign(g.edges.size(), -1);
    if (kind == BruteKind::Total) vc.assign(g.nv, -1);
    inc.assign(g.nv, 0);
    done.assign(g.nv, 0);
    deg.resize(g.nv);
    for (int v = 0; v < g.nv; ++v) deg[v] = static_cast<int>(g.vedges[v].size());
    build_order();
  }

  // Edges in BFS order from vertex 0, each vertex interleaved right after
  // its incident edges (total mode).
  void build_order() {
    std::vector<char> eseen(g.edges.size(), 0), vseen(g.nv, 0);
    std::vector<int> queue{0};
    vseen[0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int e : g.vedges[u]) {
        if (eseen[e]) continue;
        eseen[e] = 1;
        order.push_back({false, e});
        int w = g.edges[e].u == u ? g.edges[e].v : g.edges[e].u;
        if (w >= 0 && !vseen[w]) {
          vseen[w] = 1;
          queue.push_back(w);
        }
      }
      if (kind == BruteKind::Total) order.push_back({true, u});
    }
  }

  // Distinguishing checks once a vertex has all incident edges colored.
  bool complete_ok(int u) const {
    if (kind == BruteKind::Total) return true;
    for (int w : g.vadj[u]) {
      if (done[w] != deg[w]) continue;
      if (kind == BruteKind::Avd) {
        if (inc[u] == inc[w]) return false;
      } else {
        uint32_t a = inc[u], b = inc[w];
        if ((a & b) == a || (a & b) == b) return false;  // one side contained
      }
    }
    return true;
  }

  bool run(size_t pos) {
    if (pos == order.size()) {
      ++colorings;
      found = true;
      if (sink) sink({ec, vc});
      return stop_at_first;
    }
    const Elem& el = order[pos];
    if (el.is_vertex) {
      int u = el.id;
      for (int c = 0; c < k; ++c) {
        if (inc[u] & (1u << c)) continue;
        bool ok = true;
        for (int w : g.vadj[u])
          if (vc[w] == c) { ok = false; break; }
        if (!ok) continue;
        vc[u] = c;
        if (run(pos + 1)) { vc[u] = -1; return true; }
        vc[u] = -1;
      }
      return false;
    }
    int e = el.id;
    int u = g.edges[e].u, v = g.edges[e].v;
    for (int c = 0; c < k; ++c) {
      uint32_t cm = 1u << c;
      if (inc[u] & cm) continue;
      if (v >= 0 && (inc[v] & cm)) continue;
      if (kind == BruteKind::Total) {
        if (vc[u] == c) continue;
        if (v >= 0 && vc[v] == c) continue;
      }
      ec[e] = c;
      inc[u] |= cm;
      ++done[u];
      bool pruned = false;
      if (done[u] == deg[u] && !complete_ok(u)) pruned = true;
      if (!pruned && v >= 0) {
        inc[v] |= cm;
        ++done[v];
        if (done[v] == deg[v] && !complete_ok(v)) {
          inc[v] &= ~cm;
          --done[v];
          pruned = true;
        }
      }
      if (!pruned) {
        bool stop = run(pos + 1);
        if (v >= 0) {
          inc[v] &= ~cm;
          --done[v];
        }
        inc[u] &= ~cm;
        --done[u];
        ec[e] = -1;
        if (stop) return true;
      } else {
        inc[u] &= ~cm;
        --done[u];
        ec[e] = -1;
      }
    }
    return false;
  }
};

}  // namespace detail

// One valid coloring, or nullopt after exhausting the search space.
inline std::optional<BruteColoring> brute_solve(const ColorGraph& g, int k, BruteKind kind) {
  detail::BruteEngine eng(g, k, kind);
  eng.stop_at_first = true;
  std::optional<BruteColoring> out;
  eng.sink = [&](const BruteColoring& c) { out = c; };
  eng.run(0);
  return out;
}

// Visits every valid coloring; returns how many there are.
inline uint64_t brute_enumerate(const ColorGraph& g, int k, BruteKind kind,
                                const std::function<void(const BruteColoring&)>& cb = {}) {
  detail::BruteEngine eng(g, k, kind);
  eng.sink = cb;
  eng.run(0);
  return eng.colorings;
}

inline std::optional<BruteColoring> brute_total(const ColorGraph& g, int k = 4) {
  return brute_solve(g, k, BruteKind::Total);
}
inline std::optional<BruteColoring> brute_avd(const ColorGraph& g, int k = 4) {
  return brute_solve(g, k, BruteKind::Avd);
}
inline std::optional<BruteColoring> brute_snd(const ColorGraph& g, int k) {
  return brute_solve(g, k, BruteKind::Snd);
}

// Direct palette enumeration: every valid coloring of the tripole projected
// to its extended boundary.  The independent oracle for the tuple algebra.
inline Palette palette_brute(Mode mode, const Tripole& t) {
  t.validate(mode);
  ColorGraph g = graph_of_tripole(t);
  Palette p(mode);
  bool avd = mode_is_avd(mode);
  BruteKind kind = avd ? BruteKind::Avd : BruteKind::Total;
  brute_enumerate(g, 4, kind, [&](const BruteColoring& col) {
    BoundaryTuple bt{};
    bt.a = static_cast<uint8_t>(col.edge_color[g.semi_r]);
    bt.c = static_cast<uint8_t>(col.edge_color[g.semi_x]);
    bt.e = static_cast<uint8_t>(col.edge_color[g.semi_y]);
    if (avd) {
      auto missing = [&](int v) {
        uint8_t m = 0;
        for (int e : g.vedges[v]) m |= cmask(col.edge_color[e]);
        return static_cast<uint8_t>(kFullMask & ~m);
      };
      bt.b = missing(g.vert_r);
      bt.d = missing(g.vert_x);
      bt.f = missing(g.vert_y);
    } else {
      bt.b = static_cast<uint8_t>(col.vert_color[g.vert_r]);
      bt.d = static_cast<uint8_t>(col.vert_color[g.vert_x]);
      bt.f = static_cast<uint8_t>(col.vert_color[g.vert_y]);
    }
    p.insert(bt);
  });
  return p;
}

// True iff no proper 4-edge-coloring of T (semi-edges included) satisfies the
// strict neighbor distinguishing condition on every edge of T.
inline bool snd_tripole_empty(const Tripole& t) {
  ColorGraph g = graph_of_tripole(t);
  return !brute_solve(g, 4, BruteKind::Snd).has_value();
}

}  // namespace halin

#endif
