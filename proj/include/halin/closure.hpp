#ifndef HALIN_CLOSURE_HPP
#define HALIN_CLOSURE_HPP

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "halin/palette.hpp"
#include "halin/plane_tree.hpp"

namespace halin {

// right == -1 encodes a unary production unary(left) = target.
struct Production {
  int32_t left;
  int32_t right;
  bool operator==(const Production&) const = default;
};

// The layered set of realizable palettes, with the full production relation.
struct Stratification {
  Mode mode;
  std::vector<Palette> pals;                 // id -> palette, ids ordered by (rank, key)
  std::vector<int> rank;                     // id -> rank
  std::vector<std::vector<int>> strata;      // rank -> ids
  std::unordered_map<std::vector<uint64_t>, int, PaletteHash> index;
  std::vector<std::vector<Production>> prods;
  std::vector<char> incompletable, ud, ud_binary, ur;

  int size() const { return static_cast<int>(pals.size()); }
  int max_rank() const { return static_cast<int>(strata.size()) - 1; }

  int id_of(const Palette& p) const {
    auto it = index.find(p.bits);
    return it == index.end() ? -1 : it->second;
  }
};

namespace detail {

inline void compute_flags(Stratification& s) {
  int n = s.size();
  s.incompletable.assign(n, 0);
  s.ud.assign(n, 0);
  s.ud_binary.assign(n, 0);
  s.ur.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    s.incompletable[i] = !has_completable(s.pals[i]);
    int nb = 0;
    for (const auto& pr : s.prods[i]) nb += pr.right >= 0;
    // the trivial palette counts as uniquely decomposable (it anchors the
    // unique-realizability recursion)
    s.ud[i] = (i == 0) || s.prods[i].size() == 1;
    s.ud_binary[i] = (i == 0) || nb == 1;
  }
  // UR: trivial, or the single production has uniquely realizable factors.
  // The unique production of a UD palette meets the palette's own rank, so
  // factors have strictly smaller rank and id order is a valid sweep order.
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      s.ur[i] = 1;
      continue;
    }
    if (s.prods[i].size() != 1) continue;
    const Production& pr = s.prods[i][0];
    s.ur[i] = s.ur[pr.left] && (pr.right < 0 || s.ur[pr.right]);
  }
}

}  // namespace detail

// Fixpoint enumeration of all realizable palettes via the layered rank
// recurrence.  The layered loop is continued past stabilization until every
// ordered pair of realizable palettes has been composed once, which both
// proves closure and records the exhaustive production relation.
inline Stratification compute_closure(Mode mode) {
  const ModeTables& tb = tables(mode);
  Stratification s;
  s.mode = mode;

  auto groups = std::vector<PaletteGroups>{};
  auto combined = std::vector<CombinedRight>{};
  auto add_palette = [&](Palette p, int rk) {
    int id = static_cast<int>(s.pals.size());
    s.index.emplace(p.bits, id);
    groups.push_back(group_palette(p));
    combined.push_back(build_combined(tb, groups.back()));
    s.pals.push_back(std::move(p));
    s.rank.push_back(rk);
    s.prods.emplace_back();
    while (static_cast<int>(s.strata.size()) <= rk) s.strata.emplace_back();
    s.strata[rk].push_back(id);
    return id;
  };

  add_palette(palette_of_trivial(mode), 0);

  for (int k = 1;; ++k) {
    bool any_pairs = false;
    for (int i = 0; i < k && !any_pairs; ++i) {
      int j = k - 1 - i;
      any_pairs = i < static_cast<int>(s.strata.size()) &&
                  j < static_cast<int>(s.strata.size()) && !s.strata[i].empty() &&
                  !s.strata[j].empty();
    }
    bool any_unary = tb.allow_unary && k - 1 < static_cast<int>(s.strata.size()) &&
                     !s.strata[k - 1].empty();
    if (!any_pairs && !any_unary) break;

    // new palettes of this step, with the productions that hit them
    std::map<std::vector<uint64_t>, std::vector<Production>> fresh;
    auto record = [&](const Palette& res, Production pr) {
      auto it = s.index.find(res.bits);
      if (it != s.index.end()) {
        s.prods[it->second].push_back(pr);
      } else {
        fresh[res.bits].push_back(pr);
      }
    };

    Palette scratch(mode);
    for (int i = 0; i < k; ++i) {
      int j = k - 1 - i;
      if (i >= static_cast<int>(s.strata.size()) || j >= static_cast<int>(s.strata.size()))
        continue;
      for (int id1 : s.strata[i])
        for (int id2 : s.strata[j]) {
          compose_into(tb, groups[id1], combined[id2], scratch);
          record(scratch, {id1, id2});
        }
    }
    if (any_unary)
      for (int id : s.strata[k - 1])
        record(palette_unary(s.pals[id]), {id, -1});

    for (auto& [bits, prs] : fresh) {  // std::map: sorted by canonical key
      int id = add_palette(Palette(mode, bits), k);
      s.prods[id] = std::move(prs);
    }
  }

  while (!s.strata.empty() && s.strata.back().empty()) s.strata.pop_back();
  detail::compute_flags(s);
  return s;
}

inline std::vector<int> incompletable_palettes(const Stratification& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (s.incompletable[i]) out.push_back(i);
  return out;
}

inline const std::vector<Production>& decompositions(const Stratification& s, const Palette& p) {
  int id = s.id_of(p);
  if (id < 0) throw std::invalid_argument("palette is not realizable");
  return s.prods[id];
}

inline bool uniquely_decomposable(const Stratification& s, const Palette& p) {
  int id = s.id_of(p);
  if (id < 0) throw std::invalid_argument("palette is not realizable");
  return s.ud[id];
}

inline bool uniquely_realizable(const Stratification& s, const Palette& p) {
  int id = s.id_of(p);
  if (id < 0) throw std::invalid_argument("palette is not realizable");
  return s.ur[id];
}

// A realizing tripole, rebuilt by following one production chain down to the
// trivial palette.  The first recorded production of a palette is one found
// at its own stratum, so the witness meets the palette's rank.
inline std::string witness_tree_string(const Stratification& s, int id) {
  if (id < 0 || id >= s.size()) throw std::invalid_argument("palette id out of range");
  if (id == 0) return "*";
  if (s.prods[id].empty()) throw std::logic_error("non-trivial palette without productions");
  const Production& pr = s.prods[id][0];
  if (pr.right < 0) return "(" + witness_tree_string(s, pr.left) + ")";
  return "(" + witness_tree_string(s, pr.left) + "," + witness_tree_string(s, pr.right) + ")";
}

inline Tripole witness_tripole(const Stratification& s, int id) {
  Tripole t{parse_tree(witness_tree_string(s, id))};
  t.validate(s.mode);
  return t;
}

struct StratumRow {
  int stratum, all, ud, incompletable;
};

inline std::vector<StratumRow> stratum_rows(const Stratification& s, bool binary_only_ud = false) {
  std::vector<StratumRow> rows;
  for (int k = 0; k <= s.max_rank(); ++k) {
    StratumRow r{k, static_cast<int>(s.strata[k].size()), 0, 0};
    for (int id : s.strata[k]) {
      r.ud += binary_only_ud ? s.ud_binary[id] : s.ud[id];
      r.incompletable += s.incompletable[id];
    }
    rows.push_back(r);
  }
  return rows;
}

inline std::string report_table(const Stratification& s, bool csv = false,
                                bool binary_only_ud = false) {
  auto rows = stratum_rows(s, binary_only_ud);
  StratumRow tot{-1, 0, 0, 0};
  for (const auto& r : rows) {
    tot.all += r.all;
    tot.ud += r.ud;
    tot.incompletable += r.incompletable;
  }
  std::ostringstream os;
  if (csv) {
    os << "stratum,all,ud,incompletable\n";
    for (const auto& r : rows)
      os << r.stratum << ',' << r.all << ',' << r.ud << ',' << r.incompletable << '\n';
    os << "total," << tot.all << ',' << tot.ud << ',' << tot.incompletable << '\n';
  } else {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-8s %6s %6s %14s\n", "stratum", "all", "UD", "incompletable");
    os << buf;
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%-8d %6d %6d %14d\n", r.stratum, r.all, r.ud,
                    r.incompletable);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%-8s %6d %6d %14d\n", "total", tot.all, tot.ud,
                  tot.incompletable);
    os << buf;
  }
  return os.str();
}

// --- JSONL persistence --------------------------------------------------

constexpr int kClosureFormatVersion = 1;

inline void save_closure_jsonl(const Stratification& s, std::ostream& os,
                               bool with_productions = true) {
  for (int i = 0; i < s.size(); ++i) {
    nlohmann::json j;
    j["id"] = i;
    j["mode"] = mode_name(s.mode);
    j["key"] = palette_key_hex(s.pals[i]);
    j["rank"] = s.rank[i];
    j["size"] = s.pals[i].size();
    j["incompletable"] = static_cast<bool>(s.incompletable[i]);
    j["ud"] = static_cast<bool>(s.ud[i]);
    j["ur"] = static_cast<bool>(s.ur[i]);
    if (with_productions) {
      auto arr = nlohmann::json::array();
      for (const auto& pr : s.prods[i]) {
        if (pr.right >= 0)
          arr.push_back({pr.left, pr.right});
        else
          arr.push_back({pr.left});
      }
      j["productions"] = std::move(arr);
    }
    os << j.dump() << '\n';
  }
}

inline Stratification load_closure_jsonl(Mode mode, std::istream& is) {
  Stratification s;
  s.mode = mode;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    if (j.at("mode").get<std::string>() != mode_name(mode))
      throw std::runtime_error("closure cache mode mismatch");
    int id = j.at("id").get<int>();
    if (id != static_cast<int>(s.pals.size()))
      throw std::runtime_error("closure cache ids out of order");
    Palette p = palette_from_key_hex(mode, j.at("key").get<std::string>());
    int rk = j.at("rank").get<int>();
    s.index.emplace(p.bits, id);
    s.pals.push_back(std::move(p));
    s.rank.push_back(rk);
    while (static_cast<int>(s.strata.size()) <= rk) s.strata.emplace_back();
    s.strata[rk].push_back(id);
    std::vector<Production> prs;
    if (j.contains("productions"))
      for (const auto& a : j.at("productions")) {
        if (a.size() == 2)
          prs.push_back({a[0].get<int32_t>(), a[1].get<int32_t>()});
        else
          prs.push_back({a[0].get<int32_t>(), -1});
      }
    s.prods.push_back(std::move(prs));
  }
  detail::compute_flags(s);
  return s;
}

}  // namespace halin

#endif
