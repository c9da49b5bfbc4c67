#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "halin/halin_graph.hpp"
#include "halin/plane_tree.hpp"

using namespace halin;

TEST_CASE("tree grammar round-trips") {
  for (const char* s : {"*", "(*,*)", "(*,*,*)", "(*,(*,*))", "((*),*)",
                        "((*,*),(*,(*,*)),*)"}) {
    PlaneTree t = parse_tree(s);
    CHECK(serialize_tree(t) == s);
  }
  // whitespace is ignored between tokens
  CHECK(serialize_tree(parse_tree(" ( * , ( * , * ) ) ")) == "(*,(*,*))");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("(*,*"), ParseError);
  CHECK_THROWS_AS(parse_tree("*,*"), ParseError);
  CHECK_THROWS_AS(parse_tree("()"), ParseError);
  CHECK_THROWS_AS(parse_tree("(*,*))"), ParseError);
  CHECK_THROWS_AS(parse_tree("(*,,*)"), ParseError);
  try {
    parse_tree("(*,x)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }
}

TEST_CASE("tripole ranks and mode arity") {
  CHECK(parse_tripole(Mode::CubicTotal, "*").rank() == 0);
  CHECK(parse_tripole(Mode::CubicTotal, "(*,*)").rank() == 1);
  CHECK(parse_tripole(Mode::SubcubicTotal, "(*,(*,*))").rank() == 2);
  CHECK(parse_tripole(Mode::SubcubicTotal, "((*))").rank() == 2);
  // single-child internal nodes are a subcubic-only feature
  CHECK_THROWS(parse_tripole(Mode::CubicTotal, "((*))"));
  CHECK_THROWS(parse_tripole(Mode::CubicTotal, "((*,*,*))"));
}

TEST_CASE("halin graph construction") {
  HalinGraph k4 = parse_halin(Mode::CubicTotal, "(*,*,*)");
  CHECK(k4.n_spanning() == 1);
  CHECK(k4.leaves.size() == 3);
  CHECK(k4.n_vertices() == 4);
  CHECK(k4.edges.size() == 6);  // K4

  CHECK_THROWS(parse_halin(Mode::CubicTotal, "(*,*)"));       // < 3 leaves
  CHECK_THROWS(parse_halin(Mode::CubicTotal, "(*,(*),*)"));   // degree-2 in cubic mode
  CHECK_THROWS(parse_halin(Mode::CubicTotal, "*"));           // leaf root
  CHECK_NOTHROW(parse_halin(Mode::SubcubicAvd, "(*,(*),*)"));
}

TEST_CASE("decompose and recompose") {
  Tripole t = parse_tripole(Mode::CubicTotal, "(*,*)");
  auto d = decompose(t);
  REQUIRE(d.kind == Decomposition::Binary);
  CHECK(serialize_tree(d.left.tree) == "*");
  CHECK(serialize_tree(d.right.tree) == "*");

  t = parse_tripole(Mode::CubicTotal, "((*,*),*)");
  d = decompose(t);
  REQUIRE(d.kind == Decomposition::Binary);
  CHECK(serialize_tree(d.left.tree) == "(*,*)");
  CHECK(serialize_tree(compose_tripole(d.left, d.right).tree) == "((*,*),*)");

  t = parse_tripole(Mode::SubcubicTotal, "((*,*))");
  d = decompose(t);
  REQUIRE(d.kind == Decomposition::Unary);
  CHECK(serialize_tree(d.left.tree) == "(*,*)");
  CHECK(serialize_tree(unary_tripole(d.left).tree) == "((*,*))");

  CHECK(decompose(parse_tripole(Mode::CubicTotal, "*")).kind == Decomposition::Trivial);

  // rank additivity across the decomposition
  t = parse_tripole(Mode::SubcubicTotal, "(((*,*),(*)),(*,*))");
  d = decompose(t);
  REQUIRE(d.kind == Decomposition::Binary);
  CHECK(d.left.rank() + d.right.rank() + 1 == t.rank());
}

TEST_CASE("canonical form quotients rerooting, rotation, reflection") {
  CHECK(canonical_form(parse_halin(Mode::CubicTotal, "(*,*,*)")) == "(*,*,*)");
  CHECK(canonical_form(parse_halin(Mode::CubicTotal, "((*,*),*,*)")) ==
        canonical_form(parse_halin(Mode::CubicTotal, "(*,*,(*,*))")));

  // an asymmetric tree equals its mirror image
  const char* s = "((*,(*,*)),*,(*,*))";
  HalinGraph h = parse_halin(Mode::CubicTotal, s);
  HalinGraph hm = make_halin(Mode::CubicTotal, mirror_tree(h.tree));
  CHECK(canonical_form(h) == canonical_form(hm));

  // rerooting at any internal vertex yields the same class, provided the
  // cyclic neighbour order (the plane embedding) is preserved
  std::string canon = canonical_form(h);
  for (int v = 0; v < h.n_vertices(); ++v) {
    if (h.is_peripheral(v)) continue;
    PlaneTree t;
    t.nodes.resize(h.n_vertices());
    t.root = v;
    // cyclic neighbour order at u in the original rooting is (parent, kids...)
    auto cyc = [&](int u) {
      std::vector<int> nb;
      if (h.tree.nodes[u].parent != -1) nb.push_back(h.tree.nodes[u].parent);
      for (int k : h.tree.nodes[u].kids) nb.push_back(k);
      return nb;
    };
    std::vector<std::pair<int, int>> stack{{v, -1}};  // (vertex, its new parent)
    while (!stack.empty()) {
      auto [u, p] = stack.back();
      stack.pop_back();
      t.nodes[u].parent = p;
      std::vector<int> nb = cyc(u);
      int at = 0;
      if (p != -1) {
        while (nb[at] != p) ++at;
        ++at;  // new children start just after the new parent, cyclically
      }
      for (size_t i = 0; i < nb.size() - (p != -1 ? 1u : 0u); ++i) {
        int w = nb[(at + i) % nb.size()];
        t.nodes[u].kids.push_back(w);
        stack.push_back({w, u});
      }
    }
    CHECK(canonical_form(make_halin(Mode::CubicTotal, t)) == canon);
  }
}

TEST_CASE("tuple keys are bijective") {
  // spec'd fixed points of the total-mode layout
  CHECK(encode_tuple(Mode::CubicTotal, {0, 1, 2, 3, 1, 0}) == 484);
  CHECK(encode_tuple(Mode::CubicTotal, {1, 0, 2, 0, 3, 0}) == 801);

  for (Mode m : {Mode::CubicTotal, Mode::SubcubicAvd}) {
    int n_valid = 0;
    for (uint32_t k = 0; k < tuple_key_space(m); ++k) {
      BoundaryTuple t;
      try {
        t = decode_tuple(m, k);
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++n_valid;
      CHECK(encode_tuple(m, t) == k);
      CHECK(well_formed(m, t));
    }
    // 3 slots of (4 choose edge)*(3 choose state) in total mode; the AVD
    // root slot also admits 2-element missing sets
    CHECK(n_valid == (mode_is_avd(m) ? 12 * 24 * 12 : 12 * 12 * 12));
  }
}

TEST_CASE("tripole_of peripheral deletion") {
  HalinGraph k4 = parse_halin(Mode::CubicTotal, "(*,*,*)");
  for (int v : k4.leaves) {
    auto r = tripole_of(k4, v);
    CHECK(serialize_tree(r.tripole.tree) == "(*,*)");
    CHECK(r.tripole.rank() == k4.n_spanning());
  }
  CHECK_THROWS(tripole_of(k4, k4.tree.root));

  HalinGraph h = parse_halin(Mode::SubcubicTotal, "(*,(*),((*,*),*))");
  CHECK(h.leaves.size() == 5);
  for (int v : h.leaves) CHECK(tripole_of(h, v).tripole.rank() == h.n_spanning());
}
