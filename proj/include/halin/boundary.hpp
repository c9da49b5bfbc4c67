#ifndef HALIN_BOUNDARY_HPP
#define HALIN_BOUNDARY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace halin {

// Colors are 0..3 throughout.
constexpr int kColors = 4;
constexpr uint8_t kFullMask = 0xF;

enum class Mode { CubicTotal, SubcubicTotal, SubcubicAvd };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::CubicTotal: return "cubic-total";
    case Mode::SubcubicTotal: return "subcubic-total";
    case Mode::SubcubicAvd: return "subcubic-avd";
  }
  return "?";
}

inline bool mode_is_avd(Mode m) { return m == Mode::SubcubicAvd; }
inline bool mode_allows_unary(Mode m) { return m != Mode::CubicTotal; }

inline Mode mode_from_name(const std::string& s) {
  if (s == "cubic-total") return Mode::CubicTotal;
  if (s == "subcubic-total") return Mode::SubcubicTotal;
  if (s == "subcubic-avd") return Mode::SubcubicAvd;
  throw std::invalid_argument("unknown mode: " + s);
}

inline int popcount4(uint8_t m) { return __builtin_popcount(m & kFullMask); }
inline uint8_t cmask(int c) { return static_cast<uint8_t>(1u << c); }
inline int mask_color(uint8_t m) { return __builtin_ctz(m); }  // m must be a singleton

// Coloring state of a tripole's extended boundary (r, r*, x, x*, y, y*).
// a, c, e are semi-edge colors.  b, d, f are vertex states: a plain color in
// the total modes, a nonempty missing-color set (bitmask) in AVD mode.
struct BoundaryTuple {
  uint8_t a, b, c, d, e, f;

  bool operator==(const BoundaryTuple&) const = default;
};

inline bool well_formed(Mode mode, const BoundaryTuple& t) {
  if (t.a >= 4 || t.c >= 4 || t.e >= 4) return false;
  if (mode_is_avd(mode)) {
    if (t.b == 0 || (t.b & ~kFullMask) || popcount4(t.b) > 2) return false;
    if (popcount4(t.d) != 1 || popcount4(t.f) != 1) return false;
    if ((t.d & ~kFullMask) || (t.f & ~kFullMask)) return false;
    // a semi-edge color is present at its endvertex, hence not missing
    if (t.b & cmask(t.a)) return false;
    if (t.d & cmask(t.c)) return false;
    if (t.f & cmask(t.e)) return false;
    return true;
  }
  if (t.b >= 4 || t.d >= 4 || t.f >= 4) return false;
  return t.a != t.b && t.c != t.d && t.e != t.f;
}

// Bit-exact external tuple keys.
// Total modes: positional base 4, a least significant.
// AVD: packed a(2b) | b(4b mask) | c(2b) | d(4b mask) | e(2b) | f(4b mask).
inline uint32_t encode_tuple(Mode mode, const BoundaryTuple& t) {
  if (mode_is_avd(mode))
    return static_cast<uint32_t>(t.a) | (t.b << 2) | (t.c << 6) | (t.d << 8) |
           (t.e << 12) | (t.f << 14);
  return static_cast<uint32_t>(t.a) + 4u * t.b + 16u * t.c + 64u * t.d +
         256u * t.e + 1024u * t.f;
}

inline uint32_t tuple_key_space(Mode mode) {
  return mode_is_avd(mode) ? (1u << 18) : 4096u;
}

inline BoundaryTuple decode_tuple(Mode mode, uint32_t k) {
  BoundaryTuple t{};
  if (mode_is_avd(mode)) {
    t.a = k & 3;
    t.b = (k >> 2) & kFullMask;
    t.c = (k >> 6) & 3;
    t.d = (k >> 8) & kFullMask;
    t.e = (k >> 12) & 3;
    t.f = (k >> 14) & kFullMask;
    if (k >> 18) throw std::invalid_argument("tuple key out of range");
  } else {
    t.a = k & 3;
    t.b = (k >> 2) & 3;
    t.c = (k >> 4) & 3;
    t.d = (k >> 6) & 3;
    t.e = (k >> 8) & 3;
    t.f = (k >> 10) & 3;
    if (k >> 12) throw std::invalid_argument("tuple key out of range");
  }
  if (!well_formed(mode, t))
    throw std::invalid_argument("tuple key decodes to a malformed tuple");
  return t;
}

// True iff the deleted peripheral vertex can be re-inserted against this
// boundary coloring.
inline bool is_completable(Mode mode, const BoundaryTuple& t) {
  if (!well_formed(mode, t)) throw std::invalid_argument("malformed tuple");
  uint8_t ace = cmask(t.a) | cmask(t.c) | cmask(t.e);
  if (popcount4(ace) != 3) return false;
  if (mode_is_avd(mode)) {
    uint8_t g = kFullMask & ~ace;  // the unique color missing at v
    return g != t.d && g != t.f && g != t.b;
  }
  uint8_t all = ace | cmask(t.b) | cmask(t.d) | cmask(t.f);
  return popcount4(all) == 3;
}

// Composability of the boundary states of a left and a right child tripole.
inline bool composable(Mode mode, const BoundaryTuple& s1, const BoundaryTuple& s2) {
  if (!well_formed(mode, s1) || !well_formed(mode, s2))
    throw std::invalid_argument("malformed tuple");
  if (mode_is_avd(mode))
    return s1.e == s2.c && s1.f != s2.d && s1.a != s2.a;
  if (s1.e != s2.c) return false;
  uint8_t inner = cmask(s1.e) | cmask(s1.f) | cmask(s2.c) | cmask(s2.d);
  if (popcount4(inner) != 3) return false;
  if (s1.a == s2.a) return false;
  uint8_t roots = cmask(s1.a) | cmask(s1.b) | cmask(s2.a) | cmask(s2.b);
  return popcount4(roots) <= 3;
}

// All boundary states of the composed tripole that s1 and s2 yield.
inline std::vector<BoundaryTuple> yields(Mode mode, const BoundaryTuple& s1,
                                         const BoundaryTuple& s2) {
  std::vector<BoundaryTuple> out;
  if (!composable(mode, s1, s2)) return out;
  if (mode_is_avd(mode)) {
    for (int a = 0; a < 4; ++a) {
      if (a == s1.a || a == s2.a) continue;
      uint8_t B = kFullMask & ~(cmask(a) | cmask(s1.a) | cmask(s2.a));
      if (B == s1.b || B == s2.b) continue;
      out.push_back({static_cast<uint8_t>(a), B, s1.c, s1.d, s2.e, s2.f});
    }
    return out;
  }
  uint8_t used = cmask(s1.a) | cmask(s1.b) | cmask(s2.a) | cmask(s2.b);
  for (int b = 0; b < 4; ++b) {
    if (used & cmask(b)) continue;
    for (int a = 0; a < 4; ++a) {
      if (a == b || a == s1.a || a == s2.a) continue;
      out.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                     s1.c, s1.d, s2.e, s2.f});
    }
  }
  return out;
}

// Boundary states obtained by hanging s1's tripole below a new degree-2 root.
inline std::vector<BoundaryTuple> unary_extend(Mode mode, const BoundaryTuple& s1) {
  if (!mode_allows_unary(mode))
    throw std::invalid_argument("unary extension is not defined in cubic mode");
  if (!well_formed(mode, s1)) throw std::invalid_argument("malformed tuple");
  std::vector<BoundaryTuple> out;
  if (mode_is_avd(mode)) {
    for (int a = 0; a < 4; ++a) {
      if (a == s1.a) continue;
      uint8_t B = kFullMask & ~(cmask(a) | cmask(s1.a));
      if (B == s1.b) continue;
      out.push_back({static_cast<uint8_t>(a), B, s1.c, s1.d, s1.e, s1.f});
    }
    return out;
  }
  for (int b = 0; b < 4; ++b) {
    if (b == s1.a || b == s1.b) continue;
    for (int a = 0; a < 4; ++a) {
      if (a == b || a == s1.a) continue;
      out.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                     s1.c, s1.d, s1.e, s1.f});
    }
  }
  return out;
}

}  // namespace halin

#endif
