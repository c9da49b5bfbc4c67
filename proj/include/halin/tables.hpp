#ifndef HALIN_TABLES_HPP
#define HALIN_TABLES_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "halin/boundary.hpp"

namespace halin {

// Dense tuple indexing used by palette bitsets and the composition kernel.
//
// A (semi-edge, vertex-state) slot pair is addressed by a small index:
//   - (c,d) and (e,f) slots: 12 combinations in every mode (d and f are a
//     plain color or a singleton mask, either way 4*3 options).
//   - (a,b) slot: 12 combinations in the total modes, 24 in AVD mode
//     (|b| may be 2 at a degree-2 root).
// A tuple's dense index is  cd + 12*(ab + ab_count*ef),  so for fixed (ab,ef)
// the 12 cd variants are consecutive bits; compose() exploits that.
struct ModeTables {
  Mode mode;
  bool avd = false;
  bool allow_unary = false;
  int ab_count = 12;
  int tuple_count = 0;
  int words = 0;

  // (edge color, state color) pairs with edge != state.
  std::array<std::array<int, 4>, 4> pair_idx{};  // -1 when invalid
  std::array<uint8_t, 12> pair_edge{}, pair_state{};

  // (a,b) slot. ab_state is a color in total modes, a mask in AVD mode.
  std::array<std::array<int, 16>, 4> ab_idx{};   // [a][b or b-mask] -> index
  std::array<uint8_t, 24> ab_edge{}, ab_state{};

  // For a given ef index of the left factor, the (at most two) cd indices of
  // the right factor the inner peripheral edge admits.
  std::array<std::array<uint8_t, 2>, 12> cd2_of_ef1{};
  std::array<int, 12> cd2_cnt{};
  // ... and the inverse: the two left ef indices feeding a right cd index.
  std::array<std::array<uint8_t, 2>, 12> ef1_of_cd2{};

  // Root-slot outputs of binary composition / unary extension, by ab index.
  // out_ab[ab1][ab2] empty  <=>  the pair is not composable at the root.
  std::vector<std::vector<uint8_t>> out_ab;    // [ab1*ab_count+ab2]
  std::vector<std::vector<uint8_t>> unary_out; // [ab1]; empty table in cubic

  // Bitset over dense indices of completable tuples.
  std::vector<uint64_t> completable;

  // Dense index <-> external tuple key.
  std::vector<uint32_t> dense_to_ext;
  std::unordered_map<uint32_t, uint32_t> ext_to_dense;

  int dense_of(const BoundaryTuple& t) const {
    int cd = pair_idx[t.c][avd ? mask_color(t.d) : t.d];
    int ef = pair_idx[t.e][avd ? mask_color(t.f) : t.f];
    int ab = ab_idx[t.a][t.b];
    return cd + 12 * (ab + ab_count * ef);
  }

  BoundaryTuple tuple_of(int dense) const {
    int cd = dense % 12;
    int r = dense / 12;
    int ab = r % ab_count;
    int ef = r / ab_count;
    BoundaryTuple t{};
    t.a = ab_edge[ab];
    t.b = ab_state[ab];
    t.c = pair_edge[cd];
    t.d = avd ? cmask(pair_state[cd]) : pair_state[cd];
    t.e = pair_edge[ef];
    t.f = avd ? cmask(pair_state[ef]) : pair_state[ef];
    return t;
  }
};

namespace detail {

inline ModeTables build_tables(Mode mode) {
  ModeTables t;
  t.mode = mode;
  t.avd = mode_is_avd(mode);
  t.allow_unary = mode_allows_unary(mode);
  t.ab_count = t.avd ? 24 : 12;
  t.tuple_count = 12 * t.ab_count * 12;
  t.words = (t.tuple_count + 63) / 64;

  int n = 0;
  for (int c = 0; c < 4; ++c)
    for (int s = 0; s < 4; ++s) {
      t.pair_idx[c][s] = (c == s) ? -1 : n;
      if (c != s) {
        t.pair_edge[n] = static_cast<uint8_t>(c);
        t.pair_state[n] = static_cast<uint8_t>(s);
        ++n;
      }
    }

  for (auto& row : t.ab_idx) row.fill(-1);
  n = 0;
  if (t.avd) {
    for (int a = 0; a < 4; ++a)
      for (uint8_t m = 1; m <= kFullMask; ++m) {
        if ((m & cmask(a)) || popcount4(m) > 2) continue;
        t.ab_idx[a][m] = n;
        t.ab_edge[n] = static_cast<uint8_t>(a);
        t.ab_state[n] = m;
        ++n;
      }
  } else {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        t.ab_idx[a][b] = n;
        t.ab_edge[n] = static_cast<uint8_t>(a);
        t.ab_state[n] = static_cast<uint8_t>(b);
        ++n;
      }
  }

  for (int ef = 0; ef < 12; ++ef) {
    int e1 = t.pair_edge[ef], f1 = t.pair_state[ef];
    t.cd2_cnt[ef] = 0;
    for (int cd = 0; cd < 12; ++cd) {
      int c2 = t.pair_edge[cd], d2 = t.pair_state[cd];
      if (c2 != e1 || d2 == f1) continue;  // covers both mode variants: d2 != c2 held
      t.cd2_of_ef1[ef][t.cd2_cnt[ef]++] = static_cast<uint8_t>(cd);
    }
  }
  {
    std::array<int, 12> cnt{};
    for (int ef = 0; ef < 12; ++ef)
      for (int k = 0; k < t.cd2_cnt[ef]; ++k) {
        int cd = t.cd2_of_ef1[ef][k];
        t.ef1_of_cd2[cd][cnt[cd]++] = static_cast<uint8_t>(ef);
      }
  }

  int A = t.ab_count;
  t.out_ab.assign(A * A, {});
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < A; ++j) {
      BoundaryTuple s1{t.ab_edge[i], t.ab_state[i], 0, 0, 0, 0};
      BoundaryTuple s2{t.ab_edge[j], t.ab_state[j], 0, 0, 0, 0};
      int a1 = s1.a, a2 = s2.a;
      auto& out = t.out_ab[i * A + j];
      if (a1 == a2) continue;
      if (t.avd) {
        for (int a = 0; a < 4; ++a) {
          if (a == a1 || a == a2) continue;
          uint8_t B = kFullMask & ~(cmask(a) | cmask(a1) | cmask(a2));
          if (B == s1.b || B == s2.b) continue;
          out.push_back(static_cast<uint8_t>(t.ab_idx[a][B]));
        }
      } else {
        uint8_t used = cmask(a1) | cmask(s1.b) | cmask(a2) | cmask(s2.b);
        if (popcount4(used) > 3) continue;
        for (int b = 0; b < 4; ++b) {
          if (used & cmask(b)) continue;
          for (int a = 0; a < 4; ++a) {
            if (a == b || a == a1 || a == a2) continue;
            out.push_back(static_cast<uint8_t>(t.ab_idx[a][b]));
          }
        }
      }
    }

  t.unary_out.assign(A, {});
  if (t.allow_unary) {
    for (int i = 0; i < A; ++i) {
      int a1 = t.ab_edge[i];
      uint8_t b1 = t.ab_state[i];
      auto& out = t.unary_out[i];
      if (t.avd) {
        for (int a = 0; a < 4; ++a) {
          if (a == a1) continue;
          uint8_t B = kFullMask & ~(cmask(a) | cmask(a1));
          if (B == b1) continue;
          out.push_back(static_cast<uint8_t>(t.ab_idx[a][B]));
        }
      } else {
        for (int b = 0; b < 4; ++b) {
          if (b == a1 || b == b1) continue;
          for (int a = 0; a < 4; ++a) {
            if (a == b || a == a1) continue;
            out.push_back(static_cast<uint8_t>(t.ab_idx[a][b]));
          }
        }
      }
    }
  }

  t.completable.assign(t.words, 0);
  t.dense_to_ext.resize(t.tuple_count);
  for (int d = 0; d < t.tuple_count; ++d) {
    BoundaryTuple bt = t.tuple_of(d);
    uint32_t ext = encode_tuple(mode, bt);
    t.dense_to_ext[d] = ext;
    t.ext_to_dense.emplace(ext, static_cast<uint32_t>(d));
    if (is_completable(mode, bt)) t.completable[d >> 6] |= 1ull << (d & 63);
  }
  return t;
}

}  // namespace detail

inline const ModeTables& tables(Mode mode) {
  static const ModeTables cubic = detail::build_tables(Mode::CubicTotal);
  static const ModeTables sub_total = detail::build_tables(Mode::SubcubicTotal);
  static const ModeTables sub_avd = detail::build_tables(Mode::SubcubicAvd);
  switch (mode) {
    case Mode::CubicTotal: return cubic;
    case Mode::SubcubicTotal: return sub_total;
    default: return sub_avd;
  }
}

}  // namespace halin

#endif
