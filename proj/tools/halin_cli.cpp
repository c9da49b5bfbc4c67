// Command-line front end: palette closure, coloring, verification, Type-2
// search, brute-force oracles, palette analysis, and the SND search.
//
// Exit codes: 0 success / colorable, 3 Type-2 or NONE result, 1 error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "halin/io.hpp"
#include "halin/oracle.hpp"
#include "halin/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 3;  // Type 2 / no coloring exists

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << data;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace halin;
  CLI::App app{"Exact 4-coloring engine for cubic and subcubic Halin graphs"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized test-data generation");

  std::string mode_str = "cubic-total";
  std::string cache_dir;

  // closure ---------------------------------------------------------------
  auto* c_closure = app.add_subcommand("closure", "compute the palette closure and print its strata table");
  std::string table_fmt = "text", out_path, prods_path;
  bool binary_only_ud = false, no_cache = false;
  c_closure->add_option("--mode", mode_str, "cubic-total|subcubic-total|subcubic-avd");
  c_closure->add_option("--table", table_fmt, "text|csv")->check(CLI::IsMember({"text", "csv"}));
  c_closure->add_option("--out", out_path, "write palettes as JSONL");
  c_closure->add_option("--productions", prods_path, "write palettes with production lists as JSONL");
  c_closure->add_flag("--binary-only-ud", binary_only_ud, "count only binary productions for the UD column");
  c_closure->add_option("--cache-dir", cache_dir, "closure cache directory (default $HALIN_CACHE_DIR or .halin-cache)");
  c_closure->add_flag("--no-cache", no_cache, "recompute even if a cache exists");

  // color -----------------------------------------------------------------
  auto* c_color = app.add_subcommand("color", "decide 4-colorability and emit a coloring");
  std::string input_path, tree_str, color_fmt = "text";
  int random_leaves = 0;
  c_color->add_option("--mode", mode_str, "cubic-total|subcubic-total|subcubic-avd");
  c_color->add_option("--input", input_path, "tree file, or - for stdin");
  c_color->add_option("--tree", tree_str, "tree string, e.g. (*,*,(*,*))");
  c_color->add_option("--random", random_leaves, "use a random cubic Halin graph with N leaves (--seed)");
  c_color->add_option("--format", color_fmt, "json|text|dot")->check(CLI::IsMember({"json", "text", "dot"}));
  c_color->add_option("--out", out_path, "output path (default stdout)");

  // verify ----------------------------------------------------------------
  auto* c_verify = app.add_subcommand("verify", "validate a coloring JSON produced by `color --format json`");
  std::string coloring_path;
  c_verify->add_option("--coloring", coloring_path, "coloring JSON file, or - for stdin")->required();

  // search ----------------------------------------------------------------
  auto* c_search = app.add_subcommand("search", "exhaustive Type-2 search up to a leaf bound");
  int max_leaves = 10, max_spanning = 10;
  std::string report_fmt = "text";
  bool audit = false;
  c_search->add_option("--mode", mode_str, "cubic-total|subcubic-total|subcubic-avd");
  c_search->add_option("--max-leaves", max_leaves, "leaf bound (default 10)");
  c_search->add_option("--max-spanning", max_spanning, "spanning-vertex bound, subcubic only (default 10)");
  c_search->add_option("--report", report_fmt, "text|json")->check(CLI::IsMember({"text", "json"}));
  c_search->add_flag("--audit", audit, "run the bad-tripole audit against the closure");
  c_search->add_option("--cache-dir", cache_dir, "closure cache directory");

  // oracle ----------------------------------------------------------------
  auto* c_oracle = app.add_subcommand("oracle", "brute-force coloring of a Halin graph or tripole");
  std::string oracle_kind = "total";
  int colors = 4;
  bool as_tripole = false;
  c_oracle->add_option("--mode", oracle_kind, "total|avd|snd")->check(CLI::IsMember({"total", "avd", "snd"}));
  c_oracle->add_option("--colors", colors, "number of colors (default 4)");
  c_oracle->add_option("--input", input_path, "tree file, or - for stdin");
  c_oracle->add_option("--tree", tree_str, "tree string");
  c_oracle->add_flag("--tripole", as_tripole, "interpret the tree as a tripole (with semi-edges)");

  // analyze-palette -------------------------------------------------------
  auto* c_analyze = app.add_subcommand("analyze-palette", "rank, flags, productions, and a witness tripole");
  std::string key_hex, tripole_str;
  c_analyze->add_option("--mode", mode_str, "cubic-total|subcubic-total|subcubic-avd");
  c_analyze->add_option("--key", key_hex, "palette key (hex)");
  c_analyze->add_option("--tripole", tripole_str, "tripole tree string; analyzed via its palette");
  c_analyze->add_option("--cache-dir", cache_dir, "closure cache directory");

  // snd-search ------------------------------------------------------------
  auto* c_snd = app.add_subcommand("snd-search", "find a tripole with empty SND 4-palette");
  int max_rank = 6;
  c_snd->add_option("--max-rank", max_rank, "rank bound (default 6)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_closure) {
      Mode mode = mode_from_name(mode_str);
      Stratification s = no_cache ? compute_closure(mode) : load_or_compute_closure(mode, cache_dir);
      std::cout << report_table(s, table_fmt == "csv", binary_only_ud);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        save_closure_jsonl(s, f, /*with_productions=*/false);
      }
      if (!prods_path.empty()) {
        std::ofstream f(prods_path);
        save_closure_jsonl(s, f, /*with_productions=*/true);
      }
      return kExitOk;
    }

    if (*c_color) {
      Mode mode = mode_from_name(mode_str);
      PlaneTree tree;
      if (random_leaves > 0) {
        std::mt19937 rng(static_cast<uint32_t>(seed));
        tree = random_cubic_tree(random_leaves, rng);
      } else if (!tree_str.empty()) {
        tree = parse_tree(tree_str);
      } else if (!input_path.empty()) {
        tree = parse_tree(strip(read_input(input_path)));
      } else {
        std::cerr << "color: need --input, --tree, or --random\n";
        return kExitError;
      }
      HalinGraph h = make_halin(mode, std::move(tree));
      if (!decide(mode, h)) {
        std::cout << "Type 2: no 4-coloring exists\n";
        return kExitNegative;
      }
      Coloring col = extract_coloring(mode, h);
      auto check = validate_coloring(mode, h, col);
      if (!check.ok) throw std::logic_error("extracted coloring failed validation");
      if (color_fmt == "json") {
        write_out(out_path, coloring_to_json(mode, h, col).dump(2) + "\n");
      } else if (color_fmt == "dot") {
        write_out(out_path, to_dot(h, &col));
      } else {
        std::ostringstream os;
        os << "4-colorable (" << mode_name(mode) << ", " << h.leaves.size() << " leaves, "
           << h.n_spanning() << " spanning)\n";
        if (!col.vertex.empty()) {
          os << "vertices:";
          for (int c : col.vertex) os << ' ' << c;
          os << '\n';
        }
        os << "edges:\n";
        for (size_t e = 0; e < h.edges.size(); ++e)
          os << "  " << h.edges[e].u << "-" << h.edges[e].v << (h.edges[e].peripheral ? " (cycle)" : "")
             << " : " << col.edge[e] << '\n';
        write_out(out_path, os.str());
      }
      return kExitOk;
    }

    if (*c_verify) {
      auto loaded = coloring_from_json(nlohmann::json::parse(read_input(coloring_path)));
      auto check = validate_coloring(loaded.mode, loaded.graph, loaded.coloring);
      if (check.ok) {
        std::cout << "valid " << mode_name(loaded.mode) << " coloring\n";
        return kExitOk;
      }
      for (const auto& v : check.violations) std::cout << "violation: " << v << '\n';
      return kExitNegative;
    }

    if (*c_search) {
      Mode mode = mode_from_name(mode_str);
      auto type2 = find_type2(mode, max_leaves, max_spanning);
      nlohmann::json jrep;
      if (report_fmt == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& t : type2)
          arr.push_back({{"tree", t.canon}, {"leaves", t.leaves}, {"spanning", t.spanning}});
        jrep["mode"] = mode_name(mode);
        jrep["max_leaves"] = max_leaves;
        jrep["type2"] = std::move(arr);
      } else {
        std::cout << type2.size() << " Type-2 graph(s) with <= " << max_leaves << " leaves ("
                  << mode_name(mode) << ")\n";
        for (const auto& t : type2)
          std::cout << "  " << t.canon << "  leaves=" << t.leaves << " spanning=" << t.spanning
                    << '\n';
      }
      if (audit) {
        Stratification s = load_or_compute_closure(mode, cache_dir);
        AuditReport rep = bad_tripole_audit(mode, s, type2);
        if (report_fmt == "json") {
          jrep["audit"] = {{"tripoles", rep.n_tripoles},
                           {"palettes", rep.n_palettes},
                           {"matches_incompletable", rep.matches_incompletable}};
          auto sh = nlohmann::json::array();
          for (const auto& ap : rep.shared)
            sh.push_back({{"key", ap.key_hex}, {"rank", ap.rank}, {"tripoles", ap.tripoles}});
          jrep["audit"]["shared"] = std::move(sh);
        } else {
          std::cout << "audit: " << rep.n_tripoles << " bad tripoles, " << rep.n_palettes
                    << " distinct palettes, "
                    << (rep.matches_incompletable ? "equal to" : "DIFFERENT from")
                    << " the closure's incompletable set\n";
          for (const auto& ap : rep.shared) {
            std::cout << "  shared palette rank " << ap.rank << ":";
            for (size_t i = 0; i < ap.tripoles.size(); ++i)
              std::cout << ' ' << ap.tripoles[i] << "(r" << ap.tripole_ranks[i] << ")";
            std::cout << '\n';
          }
        }
      }
      if (report_fmt == "json") std::cout << jrep.dump(2) << '\n';
      return kExitOk;
    }

    if (*c_oracle) {
      std::string text = !tree_str.empty() ? tree_str : strip(read_input(input_path.empty() ? "-" : input_path));
      BruteKind kind = oracle_kind == "total" ? BruteKind::Total
                       : oracle_kind == "avd" ? BruteKind::Avd
                                              : BruteKind::Snd;
      ColorGraph g;
      if (as_tripole) {
        Tripole t = parse_tripole(Mode::SubcubicTotal, text);
        g = graph_of_tripole(t);
      } else {
        g = graph_of_halin(parse_halin(Mode::SubcubicTotal, text));
      }
      auto sol = brute_solve(g, colors, kind);
      if (!sol) {
        std::cout << "NONE: no " << oracle_kind << " " << colors << "-coloring\n";
        return kExitNegative;
      }
      std::cout << "found a " << oracle_kind << " " << colors << "-coloring\nedges:";
      for (int c : sol->edge_color) std::cout << ' ' << c;
      std::cout << '\n';
      if (!sol->vert_color.empty()) {
        std::cout << "vertices:";
        for (int c : sol->vert_color) std::cout << ' ' << c;
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (*c_analyze) {
      Mode mode = mode_from_name(mode_str);
      Stratification s = load_or_compute_closure(mode, cache_dir);
      Palette p(mode);
      if (!key_hex.empty()) {
        p = palette_from_key_hex(mode, key_hex);
      } else if (!tripole_str.empty()) {
        Tripole t = parse_tripole(mode, tripole_str);
        p = palette_dp(mode, t).root(t);
      } else {
        std::cerr << "analyze-palette: need --key or --tripole\n";
        return kExitError;
      }
      int id = s.id_of(p);
      if (id < 0) {
        std::cout << "palette is not realizable\n";
        return kExitNegative;
      }
      std::cout << "key:           " << palette_key_hex(p) << '\n';
      std::cout << "rank:          " << s.rank[id] << '\n';
      std::cout << "size:          " << s.pals[id].size() << " tuples\n";
      std::cout << "incompletable: " << (s.incompletable[id] ? "yes" : "no") << '\n';
      std::cout << "UD:            " << (s.ud[id] ? "yes" : "no") << '\n';
      std::cout << "UR:            " << (s.ur[id] ? "yes" : "no") << '\n';
      std::cout << "productions (" << s.prods[id].size() << "):\n";
      for (const auto& pr : s.prods[id]) {
        if (pr.right < 0)
          std::cout << "  unary(#" << pr.left << " r" << s.rank[pr.left] << ")\n";
        else
          std::cout << "  #" << pr.left << " (r" << s.rank[pr.left] << ") + #" << pr.right << " (r"
                    << s.rank[pr.right] << ")\n";
      }
      std::cout << "witness:       " << witness_tree_string(s, id) << '\n';
      return kExitOk;
    }

    if (*c_snd) {
      SndSearchResult res = snd_search(max_rank);
      if (res.first_empty) {
        std::cout << "empty SND 4-palette: " << *res.first_empty << "  (scanned " << res.scanned
                  << " tripoles)\n";
        return kExitOk;
      }
      std::cout << "no empty SND 4-palette up to rank " << max_rank << " (scanned " << res.scanned
                << ")\n";
      return kExitNegative;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
