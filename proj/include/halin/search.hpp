#ifndef HALIN_SEARCH_HPP
#define HALIN_SEARCH_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "halin/closure.hpp"
#include "halin/dp.hpp"
#include "halin/oracle.hpp"

namespace halin {

namespace detail {

// Full binary plane subtrees by exact leaf count.
inline const std::vector<std::string>& binary_subtrees(int leaves) {
  static std::deque<std::vector<std::string>> memo{{}, {"*"}};
  while (static_cast<int>(memo.size()) <= leaves) {
    int l = static_cast<int>(memo.size());
    std::vector<std::string> cur;
    for (int l1 = 1; l1 < l; ++l1)
      for (const auto& a : memo[l1])
        for (const auto& b : memo[l - l1]) cur.push_back("(" + a + "," + b + ")");
    memo.push_back(std::move(cur));
  }
  return memo[leaves];
}

// Subcubic subtrees (internal nodes with 1 or 2 children) by exact
// (leaves, internal) cost.
inline const std::vector<std::string>& subcubic_subtrees(int leaves, int internal) {
  static std::map<std::pair<int, int>, std::vector<std::string>> memo;
  auto key = std::make_pair(leaves, internal);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::string> cur;
  if (leaves == 1 && internal == 0) {
    cur.push_back("*");
  } else if (leaves >= 1 && internal >= 1) {
    for (const auto& a : subcubic_subtrees(leaves, internal - 1)) cur.push_back("(" + a + ")");
    for (int l1 = 1; l1 < leaves; ++l1)
      for (int i1 = 0; i1 < internal; ++i1) {
        int l2 = leaves - l1, i2 = internal - 1 - i1;
        for (const auto& a : subcubic_subtrees(l1, i1))
          for (const auto& b : subcubic_subtrees(l2, i2)) cur.push_back("(" + a + "," + b + ")");
      }
  }
  return memo.emplace(key, std::move(cur)).first->second;
}

}  // namespace detail

// Rooted (not yet deduplicated) Halin trees within the bounds, streamed to f.
template <class F>
inline void enum_halin_rooted(Mode mode, int max_leaves, int max_spanning, F&& f) {
  if (max_leaves < 3) throw std::invalid_argument("max_leaves must be >= 3");
  if (!mode_allows_unary(mode)) {
    for (int l1 = 1; l1 <= max_leaves - 2; ++l1)
      for (int l2 = 1; l1 + l2 <= max_leaves - 1; ++l2)
        for (int l3 = 1; l1 + l2 + l3 <= max_leaves; ++l3)
          for (const auto& a : detail::binary_subtrees(l1))
            for (const auto& b : detail::binary_subtrees(l2))
              for (const auto& c : detail::binary_subtrees(l3))
                f("(" + a + "," + b + "," + c + ")");
    return;
  }
  // subcubic: root of degree 2 or 3
  for (int l1 = 1; l1 < max_leaves; ++l1)
    for (int i1 = 0; i1 < max_spanning; ++i1) {
      const auto& as = detail::subcubic_subtrees(l1, i1);
      if (as.empty()) continue;
      for (int l2 = 1; l1 + l2 <= max_leaves; ++l2)
        for (int i2 = 0; i1 + i2 < max_spanning; ++i2) {
          const auto& bs = detail::subcubic_subtrees(l2, i2);
          if (bs.empty()) continue;
          if (l1 + l2 >= 3)
            for (const auto& a : as)
              for (const auto& b : bs) f("(" + a + "," + b + ")");
          for (int l3 = 1; l1 + l2 + l3 <= max_leaves; ++l3)
            for (int i3 = 0; i1 + i2 + i3 < max_spanning; ++i3) {
              const auto& cs = detail::subcubic_subtrees(l3, i3);
              if (cs.empty()) continue;
              for (const auto& a : as)
                for (const auto& b : bs)
                  for (const auto& c : cs) f("(" + a + "," + b + "," + c + ")");
            }
        }
    }
}

// Every isomorphism class (up to reflection) once, as sorted canonical strings.
inline std::vector<std::string> enum_halin(Mode mode, int max_leaves, int max_spanning = 10) {
  std::unordered_set<std::string> seen;
  enum_halin_rooted(mode, max_leaves, max_spanning, [&](const std::string& s) {
    seen.insert(canonical_form(parse_halin(mode, s)));
  });
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct Type2Entry {
  std::string canon;
  int spanning = 0;
  int leaves = 0;
};

// All enumerated graphs the palette DP declares non-4-colorable.
inline std::vector<Type2Entry> find_type2(Mode mode, int max_leaves, int max_spanning = 10) {
  std::vector<Type2Entry> out;
  for (const auto& s : enum_halin(mode, max_leaves, max_spanning)) {
    HalinGraph h = parse_halin(mode, s);
    if (!decide(mode, h))
      out.push_back({s, h.n_spanning(), static_cast<int>(h.leaves.size())});
  }
  return out;
}

struct AuditPalette {
  std::string key_hex;
  int closure_id = -1;  // -1 when the palette is not in the supplied closure
  int rank = -1;
  std::vector<std::string> tripoles;  // realizing bad tripoles (tree strings)
  std::vector<int> tripole_ranks;
};

struct AuditReport {
  int n_tripoles = 0;          // distinct bad tripoles, trivial included
  int n_palettes = 0;          // distinct palettes among them
  bool matches_incompletable;  // palette set == closure's incompletable set
  std::vector<AuditPalette> palettes;
  std::vector<AuditPalette> shared;  // palettes realized by >= 2 bad tripoles
};

// Computes P(T^H_v) for every peripheral v of every Type-2 graph plus the
// trivial tripole, and matches the palette set against the closure's
// incompletable palettes.  Tripoles are deduplicated as rooted ordered trees.
inline AuditReport bad_tripole_audit(Mode mode, const Stratification& s,
                                     const std::vector<Type2Entry>& type2) {
  std::map<std::string, Tripole> tripoles;
  tripoles.emplace("*", parse_tripole(mode, "*"));
  for (const auto& t2 : type2) {
    HalinGraph h = parse_halin(mode, t2.canon);
    for (int v : h.leaves) {
      Tripole tr = tripole_of(h, v).tripole;
      tripoles.emplace(serialize_tree(tr.tree), std::move(tr));
    }
  }

  std::map<std::vector<uint64_t>, AuditPalette> by_palette;
  for (const auto& [str, tr] : tripoles) {
    Palette p = palette_dp(mode, tr).root(tr);
    auto& ap = by_palette[p.bits];
    if (ap.tripoles.empty()) {
      ap.key_hex = palette_key_hex(p);
      ap.closure_id = s.id_of(p);
      if (ap.closure_id >= 0) ap.rank = s.rank[ap.closure_id];
    }
    ap.tripoles.push_back(str);
    ap.tripole_ranks.push_back(tr.rank());
  }

  AuditReport rep;
  rep.n_tripoles = static_cast<int>(tripoles.size());
  rep.n_palettes = static_cast<int>(by_palette.size());
  std::unordered_set<int> incompl;
  for (int id : incompletable_palettes(s)) incompl.insert(id);
  bool match = by_palette.size() == incompl.size();
  for (auto& [bits, ap] : by_palette) {
    if (ap.closure_id < 0 || !incompl.count(ap.closure_id)) match = false;
    if (ap.tripoles.size() >= 2) rep.shared.push_back(ap);
    rep.palettes.push_back(std::move(ap));
  }
  rep.matches_incompletable = match;
  return rep;
}

// --- SND search ---------------------------------------------------------

namespace detail {
inline const std::vector<std::string>& tripole_shapes(int rank) {
  static std::deque<std::vector<std::string>> memo{{"*"}};
  while (static_cast<int>(memo.size()) <= rank) {
    int r = static_cast<int>(memo.size());
    std::vector<std::string> cur;
    for (const auto& a : memo[r - 1]) cur.push_back("(" + a + ")");
    for (int r1 = 0; r1 < r; ++r1)
      for (const auto& a : memo[r1])
        for (const auto& b : memo[r - 1 - r1]) cur.push_back("(" + a + "," + b + ")");
    std::sort(cur.begin(), cur.end());
    memo.push_back(std::move(cur));
  }
  return memo[rank];
}
}  // namespace detail

struct SndSearchResult {
  std::optional<std::string> first_empty;  // tree string of the witness
  uint64_t scanned = 0;
};

// Streams subcubic tripoles by ascending rank and reports the first whose
// SND palette with 4 colors is empty.
inline SndSearchResult snd_search(int max_rank, bool stop_at_first = true) {
  SndSearchResult res;
  for (int r = 0; r <= max_rank; ++r)
    for (const auto& s : detail::tripole_shapes(r)) {
      ++res.scanned;
      if (snd_tripole_empty(parse_tripole(Mode::SubcubicTotal, s))) {
        if (!res.first_empty) res.first_empty = s;
        if (stop_at_first) return res;
      }
    }
  return res;
}

}  // namespace halin

#endif
