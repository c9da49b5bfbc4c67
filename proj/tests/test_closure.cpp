#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "halin/closure.hpp"
#include "halin/dp.hpp"

using namespace halin;

namespace {

// the closure is expensive; compute it once for the whole binary
const Stratification& cubic() {
  static Stratification s = compute_closure(Mode::CubicTotal);
  return s;
}

}  // namespace

TEST_CASE("cubic closure reproduces the stratification") {
  const Stratification& s = cubic();
  const int all[] = {1, 1, 2, 5, 14, 38, 83, 165, 239, 207, 201, 137, 87, 20, 6, 8};
  const int ud[] = {1, 1, 2, 5, 14, 27, 62, 116, 152, 114, 108, 80, 50, 6, 4, 6};
  const int inc[] = {1, 1, 0, 0, 6, 7, 0, 0, 7, 0, 0, 0, 0, 0, 0, 0};
  REQUIRE(s.max_rank() == 15);
  auto rows = stratum_rows(s);
  for (int k = 0; k <= 15; ++k) {
    INFO("stratum " << k);
    CHECK(rows[k].all == all[k]);
    CHECK(rows[k].ud == ud[k]);
    CHECK(rows[k].incompletable == inc[k]);
  }
  CHECK(s.size() == 1214);
  CHECK(incompletable_palettes(s).size() == 22);
}

TEST_CASE("trivial palette has no productions") {
  const Stratification& s = cubic();
  CHECK(s.prods[0].empty());
  CHECK(s.pals[0] == palette_of_trivial(Mode::CubicTotal));
  CHECK(uniquely_decomposable(s, s.pals[0]));
  CHECK(uniquely_realizable(s, s.pals[0]));
}

TEST_CASE("productions land in the right strata") {
  const Stratification& s = cubic();
  for (int i = 1; i < s.size(); ++i) {
    REQUIRE_FALSE(s.prods[i].empty());
    // the first production was recorded at the palette's discovery layer
    const Production& pr = s.prods[i][0];
    CHECK(s.rank[pr.left] + (pr.right >= 0 ? s.rank[pr.right] : 0) + 1 == s.rank[i]);
    for (const auto& p : s.prods[i]) REQUIRE(p.right >= 0);  // cubic: no unary
  }
  // recomposing every recorded production is closure-sized work; sample it
  for (int i = 1; i < s.size(); i += 41)
    for (const auto& p : s.prods[i])
      CHECK(palette_compose(s.pals[p.left], s.pals[p.right]) == s.pals[i]);
}

TEST_CASE("witness tripoles realize their palettes") {
  const Stratification& s = cubic();
  for (int i = 0; i < s.size(); i += 37) {
    Tripole t = witness_tripole(s, i);
    CHECK(t.rank() == s.rank[i]);
    CHECK(palette_dp(Mode::CubicTotal, t).root(t) == s.pals[i]);
  }
}

TEST_CASE("unique realizability is recursive") {
  const Stratification& s = cubic();
  int n_ur = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s.ur[i]) ++n_ur;
    if (i > 0 && s.ur[i]) {
      REQUIRE(s.prods[i].size() == 1);
      CHECK(s.ur[s.prods[i][0].left]);
      CHECK(s.ur[s.prods[i][0].right]);
    }
  }
  CHECK(n_ur > 0);
  CHECK(n_ur <= 748);  // UR implies UD
}

TEST_CASE("jsonl round trip") {
  const Stratification& s = cubic();
  std::stringstream buf;
  save_closure_jsonl(s, buf);
  Stratification t = load_closure_jsonl(Mode::CubicTotal, buf);
  REQUIRE(t.size() == s.size());
  for (int i = 0; i < s.size(); ++i) {
    CHECK(t.pals[i] == s.pals[i]);
    CHECK(t.rank[i] == s.rank[i]);
    CHECK(t.prods[i] == s.prods[i]);
    CHECK(t.ud[i] == s.ud[i]);
    CHECK(t.ur[i] == s.ur[i]);
    CHECK(t.incompletable[i] == s.incompletable[i]);
  }
  std::stringstream wrong(buf.str());
  CHECK_THROWS(load_closure_jsonl(Mode::SubcubicAvd, wrong));
}

TEST_CASE("report table formats") {
  const Stratification& s = cubic();
  std::string txt = report_table(s);
  CHECK(txt.find("1214") != std::string::npos);
  CHECK(txt.find("748") != std::string::npos);
  std::string csv = report_table(s, true);
  CHECK(csv.find("stratum,all,ud,incompletable") == 0);
  CHECK(csv.find("total,1214,748,22") != std::string::npos);
}
