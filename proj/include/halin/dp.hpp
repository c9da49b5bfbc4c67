#ifndef HALIN_DP_HPP
#define HALIN_DP_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "halin/halin_graph.hpp"
#include "halin/palette.hpp"

namespace halin {

// Bottom-up palette computation with the memo table kept per tree node.
struct PaletteMemo {
  std::vector<Palette> by_node;  // indexed by tripole node id
  const Palette& root(const Tripole& t) const { return by_node[t.tree.root]; }
};

inline PaletteMemo palette_dp(Mode mode, const Tripole& t) {
  t.validate(mode);
  const ModeTables& tb = tables(mode);
  const PlaneTree& tr = t.tree;
  PaletteMemo memo;
  memo.by_node.assign(tr.nodes.size(), Palette(mode));

  // children before parents: reverse BFS from the root
  std::vector<int> bfs{tr.root};
  for (size_t q = 0; q < bfs.size(); ++q)
    for (int k : tr.nodes[bfs[q]].kids) bfs.push_back(k);

  Palette p0 = palette_of_trivial(mode);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    int v = *it;
    const auto& kids = tr.nodes[v].kids;
    if (kids.empty()) {
      memo.by_node[v] = p0;
    } else if (kids.size() == 1) {
      memo.by_node[v] = palette_unary(memo.by_node[kids[0]]);
    } else {
      memo.by_node[v] = compose_grouped(tb, group_palette(memo.by_node[kids[0]]),
                                        group_palette(memo.by_node[kids[1]]));
    }
  }
  return memo;
}

// chi'' = 4 (total modes) / chi'_avd = 4 (AVD mode)?
inline bool decide(Mode mode, const HalinGraph& h) {
  auto tor = tripole_of(h, h.leaves[0]);
  PaletteMemo memo = palette_dp(mode, tor.tripole);
  const Palette& p = memo.root(tor.tripole);
  return has_completable(p);
}

struct Coloring {
  std::vector<int> vertex;  // -1 unset; empty vector in AVD mode
  std::vector<int> edge;    // indexed by HalinGraph edge id
};

namespace detail {

// Members of `p` with the given cd index, as dense codes sorted by external key.
inline std::vector<int> members_with_cd(const ModeTables& tb, const Palette& p, int cd) {
  std::vector<std::pair<uint32_t, int>> cand;
  int A = tb.ab_count;
  for (int ef = 0; ef < 12; ++ef)
    for (int ab = 0; ab < A; ++ab) {
      int d = cd + 12 * (ab + A * ef);
      if (p.test(d)) cand.emplace_back(tb.dense_to_ext[d], d);
    }
  std::sort(cand.begin(), cand.end());
  std::vector<int> out;
  out.reserve(cand.size());
  for (auto& [k, d] : cand) out.push_back(d);
  return out;
}

}  // namespace detail

// Builds a full coloring of H (total modes: vertices and edges; AVD: edges
// only), deterministic under the smallest-key tie-breaking.
inline Coloring extract_coloring(Mode mode, const HalinGraph& h) {
  const ModeTables& tb = tables(mode);
  int A = tb.ab_count;
  int v0 = h.leaves[0];
  auto tor = tripole_of(h, v0);
  const Tripole& t = tor.tripole;
  const PlaneTree& tr = t.tree;
  PaletteMemo memo = palette_dp(mode, t);
  const Palette& proot = memo.root(t);

  bool total = !mode_is_avd(mode);
  Coloring col;
  if (total) col.vertex.assign(h.n_vertices(), -1);
  col.edge.assign(h.edges.size(), -1);

  // completable member of the root palette with the smallest external key
  int s_root = -1;
  uint32_t best = 0;
  proot.for_each_dense([&](int d) {
    if (!((tb.completable[d >> 6] >> (d & 63)) & 1)) return;
    uint32_t k = tb.dense_to_ext[d];
    if (s_root == -1 || k < best) {
      s_root = d;
      best = k;
    }
  });
  if (s_root == -1) throw std::logic_error("extract_coloring on a Type-2 graph");

  // leftmost/rightmost leaf per tripole node
  int n = static_cast<int>(tr.nodes.size());
  std::vector<int> lmost(n), rmost(n);
  std::vector<int> bfs{tr.root};
  for (size_t q = 0; q < bfs.size(); ++q)
    for (int k : tr.nodes[bfs[q]].kids) bfs.push_back(k);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    int v = *it;
    const auto& kids = tr.nodes[v].kids;
    lmost[v] = kids.empty() ? v : lmost[kids.front()];
    rmost[v] = kids.empty() ? v : rmost[kids.back()];
  }

  auto set_edge = [&](int hu, int hv, int c) {
    int id = h.find_edge(hu, hv);
    col.edge[id] = c;
  };
  auto parent_vertex = [&](int node) {
    int p = tr.nodes[node].parent;
    return p == -1 ? v0 : tor.orig_vertex[p];
  };

  // top-down assignment: node + its chosen boundary tuple (dense)
  std::vector<std::pair<int, int>> stack{{tr.root, s_root}};
  while (!stack.empty()) {
    auto [v, s] = stack.back();
    stack.pop_back();
    BoundaryTuple st = tb.tuple_of(s);
    set_edge(parent_vertex(v), tor.orig_vertex[v], st.a);
    if (total) col.vertex[tor.orig_vertex[v]] = st.b;

    const auto& kids = tr.nodes[v].kids;
    if (kids.empty()) continue;

    int cd_s = s % 12, ab_s = (s / 12) % A, ef_s = s / (12 * A);
    if (kids.size() == 1) {
      // child tuple shares (c,d,e,f); root slot must extend to ab_s
      const Palette& pc = memo.by_node[kids[0]];
      int chosen = -1;
      uint32_t bk = 0;
      for (int ab1 = 0; ab1 < A; ++ab1) {
        const auto& outs = tb.unary_out[ab1];
        if (std::find(outs.begin(), outs.end(), static_cast<uint8_t>(ab_s)) == outs.end())
          continue;
        int d = cd_s + 12 * (ab1 + A * ef_s);
        if (!pc.test(d)) continue;
        uint32_t k = tb.dense_to_ext[d];
        if (chosen == -1 || k < bk) {
          chosen = d;
          bk = k;
        }
      }
      if (chosen == -1) throw std::logic_error("unary extraction step failed");
      stack.emplace_back(kids[0], chosen);
      continue;
    }

    const Palette& p1 = memo.by_node[kids[0]];
    const Palette& p2 = memo.by_node[kids[1]];
    auto c1 = detail::members_with_cd(tb, p1, cd_s);
    int s1 = -1, s2 = -1;
    for (int d1 : c1) {
      int ab1 = (d1 / 12) % A, ef1 = d1 / (12 * A);
      // right factor candidates, smallest external key first
      std::vector<std::pair<uint32_t, int>> cand2;
      for (int k = 0; k < tb.cd2_cnt[ef1]; ++k) {
        int cd2 = tb.cd2_of_ef1[ef1][k];
        for (int ab2 = 0; ab2 < A; ++ab2) {
          const auto& outs = tb.out_ab[ab1 * A + ab2];
          if (std::find(outs.begin(), outs.end(), static_cast<uint8_t>(ab_s)) == outs.end())
            continue;
          int d2 = cd2 + 12 * (ab2 + A * ef_s);
          if (p2.test(d2)) cand2.emplace_back(tb.dense_to_ext[d2], d2);
        }
      }
      if (cand2.empty()) continue;
      s1 = d1;
      s2 = std::min_element(cand2.begin(), cand2.end())->second;
      break;
    }
    if (s1 == -1) throw std::logic_error("binary extraction step failed");
    // the inner peripheral edge carries the shared color e1 = c2
    BoundaryTuple t1 = tb.tuple_of(s1);
    set_edge(tor.orig_vertex[rmost[kids[0]]], tor.orig_vertex[lmost[kids[1]]], t1.e);
    stack.emplace_back(kids[0], s1);
    stack.emplace_back(kids[1], s2);
  }

  // re-insert v0: its cycle edges get the x/y semi-edge colors, and in the
  // total modes its vertex color is the unique color off the boundary
  BoundaryTuple rs = tb.tuple_of(s_root);
  set_edge(tor.orig_vertex[lmost[tr.root]], v0, rs.c);
  set_edge(tor.orig_vertex[rmost[tr.root]], v0, rs.e);
  if (total) {
    uint8_t used = cmask(rs.a) | cmask(rs.b) | cmask(rs.c) | cmask(rs.d) |
                   cmask(rs.e) | cmask(rs.f);
    col.vertex[v0] = mask_color(kFullMask & ~used);
  }
  return col;
}

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;
};

inline Validation validate_coloring(Mode mode, const HalinGraph& h, const Coloring& col) {
  Validation r;
  auto bad = [&](const std::string& s) {
    r.ok = false;
    r.violations.push_back(s);
  };
  bool total = !mode_is_avd(mode);
  int m = static_cast<int>(h.edges.size());

  for (int e = 0; e < m; ++e) {
    int c = e < static_cast<int>(col.edge.size()) ? col.edge[e] : -1;
    if (c < 0 || c >= 4) bad("edge " + std::to_string(e) + " missing or out-of-range color");
  }
  if (total)
    for (int v = 0; v < h.n_vertices(); ++v) {
      int c = v < static_cast<int>(col.vertex.size()) ? col.vertex[v] : -1;
      if (c < 0 || c >= 4) bad("vertex " + std::to_string(v) + " missing or out-of-range color");
    }
  if (!r.ok) return r;

  std::vector<std::vector<int>> inc(h.n_vertices());
  for (int e = 0; e < m; ++e) {
    inc[h.edges[e].u].push_back(e);
    inc[h.edges[e].v].push_back(e);
  }
  for (int v = 0; v < h.n_vertices(); ++v)
    for (size_t i = 0; i < inc[v].size(); ++i)
      for (size_t j = i + 1; j < inc[v].size(); ++j)
        if (col.edge[inc[v][i]] == col.edge[inc[v][j]])
          bad("edges " + std::to_string(inc[v][i]) + "," + std::to_string(inc[v][j]) +
              " share vertex " + std::to_string(v) + " and color");

  if (total) {
    for (int e = 0; e < m; ++e) {
      const auto& ed = h.edges[e];
      if (col.vertex[ed.u] == col.vertex[ed.v])
        bad("adjacent vertices " + std::to_string(ed.u) + "," + std::to_string(ed.v) +
            " share a color");
      if (col.edge[e] == col.vertex[ed.u] || col.edge[e] == col.vertex[ed.v])
        bad("edge " + std::to_string(e) + " matches an endvertex color");
    }
  } else {
    std::vector<uint8_t> mask(h.n_vertices(), 0);
    for (int e = 0; e < m; ++e) {
      mask[h.edges[e].u] |= cmask(col.edge[e]);
      mask[h.edges[e].v] |= cmask(col.edge[e]);
    }
    for (int e = 0; e < m; ++e) {
      const auto& ed = h.edges[e];
      if (mask[ed.u] == mask[ed.v])
        bad("adjacent vertices " + std::to_string(ed.u) + "," + std::to_string(ed.v) +
            " have equal incident color sets");
    }
  }
  return r;
}

}  // namespace halin

#endif
