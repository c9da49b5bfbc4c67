#ifndef HALIN_PALETTE_HPP
#define HALIN_PALETTE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "halin/tables.hpp"

namespace halin {

// A palette is a set of boundary tuples, stored as a bitset over dense
// tuple indices.  Value type; identity of the bit vector is palette identity.
struct Palette {
  Mode mode;
  std::vector<uint64_t> bits;

  explicit Palette(Mode m) : mode(m), bits(tables(m).words, 0) {}
  Palette(Mode m, std::vector<uint64_t> b) : mode(m), bits(std::move(b)) {}

  bool operator==(const Palette& o) const { return mode == o.mode && bits == o.bits; }

  bool empty() const {
    for (uint64_t w : bits) if (w) return false;
    return true;
  }

  int size() const {
    int n = 0;
    for (uint64_t w : bits) n += __builtin_popcountll(w);
    return n;
  }

  bool test(int dense) const { return (bits[dense >> 6] >> (dense & 63)) & 1; }
  void set(int dense) { bits[dense >> 6] |= 1ull << (dense & 63); }

  bool contains(const BoundaryTuple& t) const { return test(tables(mode).dense_of(t)); }
  void insert(const BoundaryTuple& t) { set(tables(mode).dense_of(t)); }

  template <class F>
  void for_each_dense(F&& f) const {
    for (size_t w = 0; w < bits.size(); ++w) {
      uint64_t m = bits[w];
      while (m) {
        int b = __builtin_ctzll(m);
        m &= m - 1;
        f(static_cast<int>(w * 64 + b));
      }
    }
  }

  std::vector<BoundaryTuple> members() const {
    const ModeTables& t = tables(mode);
    std::vector<BoundaryTuple> out;
    for_each_dense([&](int d) { out.push_back(t.tuple_of(d)); });
    return out;
  }
};

struct PaletteHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Per-palette grouping used by the composition kernel:
//   left[ef*A+ab]  = 12-bit mask over cd of members with that (ab, ef),
//   right[cd*A+ab] = 12-bit mask over ef of members with that (ab, cd).
struct PaletteGroups {
  std::vector<uint16_t> left, right;
};

inline PaletteGroups group_palette(const Palette& p) {
  const ModeTables& t = tables(p.mode);
  int A = t.ab_count;
  PaletteGroups g;
  g.left.assign(12 * A, 0);
  g.right.assign(12 * A, 0);
  p.for_each_dense([&](int d) {
    int cd = d % 12, r = d / 12, ab = r % A, ef = r / A;
    g.left[ef * A + ab] |= static_cast<uint16_t>(1u << cd);
    g.right[cd * A + ab] |= static_cast<uint16_t>(1u << ef);
  });
  return g;
}

namespace detail {
inline void or12(std::vector<uint64_t>& bits, int offset, uint16_t mask) {
  int w = offset >> 6, sh = offset & 63;
  bits[w] |= static_cast<uint64_t>(mask) << sh;
  if (sh > 52) bits[w + 1] |= static_cast<uint64_t>(mask) >> (64 - sh);
}
}  // namespace detail

// Emission table for a palette used as the RIGHT factor of many
// compositions: combined[cd2][ab1][ab_out] = union of the palette's ef masks
// over all its ab2 groups that emit ab_out against a left ab1.
struct CombinedRight {
  std::vector<uint16_t> m;  // [ (cd2*A + ab1)*A + ab_out ]
};

inline CombinedRight build_combined(const ModeTables& t, const PaletteGroups& g) {
  int A = t.ab_count;
  CombinedRight c;
  c.m.assign(12 * A * A, 0);
  for (int cd2 = 0; cd2 < 12; ++cd2)
    for (int ab2 = 0; ab2 < A; ++ab2) {
      uint16_t m2 = g.right[cd2 * A + ab2];
      if (!m2) continue;
      for (int ab1 = 0; ab1 < A; ++ab1) {
        uint16_t* row = &c.m[(cd2 * A + ab1) * A];
        for (uint8_t ab : t.out_ab[ab1 * A + ab2]) row[ab] |= m2;
      }
    }
  return c;
}

// Composition against a precomputed right-factor emission table.  The two
// left ef rows feeding a given right cd emit into identical targets, so
// their cd masks are merged up front.
inline void compose_into(const ModeTables& t, const PaletteGroups& g1,
                         const CombinedRight& c2, Palette& out) {
  int A = t.ab_count;
  std::fill(out.bits.begin(), out.bits.end(), 0);
  for (int cd2 = 0; cd2 < 12; ++cd2) {
    const uint16_t* La = &g1.left[t.ef1_of_cd2[cd2][0] * A];
    const uint16_t* Lb = &g1.left[t.ef1_of_cd2[cd2][1] * A];
    for (int ab1 = 0; ab1 < A; ++ab1) {
      uint16_t m1 = static_cast<uint16_t>(La[ab1] | Lb[ab1]);
      if (!m1) continue;
      const uint16_t* row = &c2.m[(cd2 * A + ab1) * A];
      for (int ab = 0; ab < A; ++ab) {
        uint16_t mef = row[ab];
        while (mef) {
          int ef2 = __builtin_ctz(mef);
          mef &= static_cast<uint16_t>(mef - 1);
          detail::or12(out.bits, 12 * (ab + A * ef2), m1);
        }
      }
    }
  }
}

// P1 (+) P2: union of yields over all composable member pairs.
inline Palette compose_grouped(const ModeTables& t, const PaletteGroups& g1,
                               const PaletteGroups& g2) {
  int A = t.ab_count;
  Palette out(t.mode);
  for (int ef1 = 0; ef1 < 12; ++ef1) {
    const uint16_t* L = &g1.left[ef1 * A];
    for (int k = 0; k < t.cd2_cnt[ef1]; ++k) {
      int cd2 = t.cd2_of_ef1[ef1][k];
      const uint16_t* R = &g2.right[cd2 * A];
      for (int ab1 = 0; ab1 < A; ++ab1) {
        uint16_t m1 = L[ab1];
        if (!m1) continue;
        const auto* outs_row = &t.out_ab[ab1 * A];
        for (int ab2 = 0; ab2 < A; ++ab2) {
          uint16_t m2 = R[ab2];
          if (!m2) continue;
          const auto& outs = outs_row[ab2];
          if (outs.empty()) continue;
          for (uint8_t ab : outs) {
            uint16_t mm = m2;
            while (mm) {
              int ef2 = __builtin_ctz(mm);
              mm &= static_cast<uint16_t>(mm - 1);
              detail::or12(out.bits, 12 * (ab + A * ef2), m1);
            }
          }
        }
      }
    }
  }
  return out;
}

inline Palette palette_compose(const Palette& p1, const Palette& p2) {
  if (p1.mode != p2.mode) throw std::invalid_argument("palette mode mismatch");
  return compose_grouped(tables(p1.mode), group_palette(p1), group_palette(p2));
}

// Unary extension lifted to palettes (subcubic modes).
inline Palette palette_unary(const Palette& p) {
  const ModeTables& t = tables(p.mode);
  if (!t.allow_unary) throw std::invalid_argument("unary lift in cubic mode");
  int A = t.ab_count;
  Palette out(p.mode);
  p.for_each_dense([&](int d) {
    int cd = d % 12, r = d / 12, ab1 = r % A, ef = r / A;
    for (uint8_t ab : t.unary_out[ab1]) out.set(cd + 12 * (ab + A * ef));
  });
  return out;
}

// The 24-tuple palette of the trivial tripole: (b,a,c,a,d,a) over all
// bijections {a,b,c,d} = {0,1,2,3}; vertex states are singletons in AVD mode.
inline Palette palette_of_trivial(Mode mode) {
  Palette p(mode);
  int perm[4] = {0, 1, 2, 3};
  do {
    int a = perm[0], b = perm[1], c = perm[2], d = perm[3];
    BoundaryTuple t{};
    t.a = static_cast<uint8_t>(b);
    t.c = static_cast<uint8_t>(c);
    t.e = static_cast<uint8_t>(d);
    if (mode_is_avd(mode)) {
      t.b = t.d = t.f = cmask(a);
    } else {
      t.b = t.d = t.f = static_cast<uint8_t>(a);
    }
    p.insert(t);
  } while (std::next_permutation(perm, perm + 4));
  return p;
}

inline bool has_completable(const Palette& p) {
  const ModeTables& t = tables(p.mode);
  for (int w = 0; w < t.words; ++w)
    if (p.bits[w] & t.completable[w]) return true;
  return false;
}

// Canonical external key: the bitset over external tuple encodings, written
// as big-endian hex with leading zeros trimmed.
inline std::string palette_key_hex(const Palette& p) {
  const ModeTables& t = tables(p.mode);
  uint32_t space = tuple_key_space(p.mode);
  std::vector<uint64_t> ext((space + 63) / 64, 0);
  p.for_each_dense([&](int d) {
    uint32_t k = t.dense_to_ext[d];
    ext[k >> 6] |= 1ull << (k & 63);
  });
  std::string hex;
  bool started = false;
  for (int w = static_cast<int>(ext.size()) - 1; w >= 0; --w) {
    for (int nib = 15; nib >= 0; --nib) {
      int v = (ext[w] >> (4 * nib)) & 0xF;
      if (!started && v == 0) continue;
      started = true;
      hex.push_back("0123456789abcdef"[v]);
    }
  }
  if (!started) hex = "0";
  return hex;
}

inline Palette palette_from_key_hex(Mode mode, const std::string& hex) {
  const ModeTables& t = tables(mode);
  Palette p(mode);
  uint32_t nbits = static_cast<uint32_t>(hex.size()) * 4;
  for (uint32_t i = 0; i < hex.size(); ++i) {
    char c = hex[hex.size() - 1 - i];
    int v = (c >= '0' && c <= '9')   ? c - '0'
            : (c >= 'a' && c <= 'f') ? c - 'a' + 10
            : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                     : -1;
    if (v < 0) throw std::invalid_argument("bad hex digit in palette key");
    for (int b = 0; b < 4; ++b) {
      if (!(v & (1 << b))) continue;
      uint32_t key = i * 4 + b;
      auto it = t.ext_to_dense.find(key);
      if (it == t.ext_to_dense.end())
        throw std::invalid_argument("palette key sets an invalid tuple bit");
      p.set(static_cast<int>(it->second));
    }
  }
  (void)nbits;
  return p;
}

}  // namespace halin

#endif
