#ifndef HALIN_IO_HPP
#define HALIN_IO_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "halin/closure.hpp"
#include "halin/dp.hpp"
#include "halin/halin_graph.hpp"

namespace halin {

// DOT export of a Halin graph.  When a coloring is supplied, edges and (in
// the total modes) vertices are annotated with their color; the fixed 4-color
// scheme keeps renders comparable across runs.
inline std::string to_dot(const HalinGraph& h, const Coloring* col = nullptr,
                          const std::string& name = "halin") {
  static const char* kPalette[4] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3"};
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < h.n_vertices(); ++v) {
    os << "  v" << v << " [label=\"" << v << '"';
    if (h.is_peripheral(v)) os << ", style=bold";
    if (col && !col->vertex.empty() && col->vertex[v] >= 0)
      os << ", color=\"" << kPalette[col->vertex[v]] << "\", xlabel=\""
         << col->vertex[v] << '"';
    os << "];\n";
  }
  for (size_t e = 0; e < h.edges.size(); ++e) {
    const auto& ed = h.edges[e];
    os << "  v" << ed.u << " -- v" << ed.v;
    os << " [style=" << (ed.peripheral ? "dashed" : "solid");
    if (col && col->edge[e] >= 0)
      os << ", color=\"" << kPalette[col->edge[e]] << "\", label=\"" << col->edge[e]
         << '"';
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

// Coloring as JSON, paired with the tree string so it can be re-validated in
// isolation.
inline nlohmann::json coloring_to_json(Mode mode, const HalinGraph& h, const Coloring& col) {
  nlohmann::json j;
  j["mode"] = mode_name(mode);
  j["tree"] = serialize_tree(h.tree);
  if (!col.vertex.empty()) j["vertex_colors"] = col.vertex;
  auto edges = nlohmann::json::array();
  for (size_t e = 0; e < h.edges.size(); ++e) {
    const auto& ed = h.edges[e];
    edges.push_back({{"u", ed.u},
                     {"v", ed.v},
                     {"peripheral", ed.peripheral},
                     {"color", col.edge[e]}});
  }
  j["edges"] = std::move(edges);
  return j;
}

struct LoadedColoring {
  Mode mode;
  HalinGraph graph;
  Coloring coloring;
};

inline LoadedColoring coloring_from_json(const nlohmann::json& j) {
  LoadedColoring out{mode_from_name(j.at("mode").get<std::string>()), {}, {}};
  out.graph = parse_halin(out.mode, j.at("tree").get<std::string>());
  if (j.contains("vertex_colors"))
    out.coloring.vertex = j.at("vertex_colors").get<std::vector<int>>();
  out.coloring.edge.assign(out.graph.edges.size(), -1);
  for (const auto& e : j.at("edges")) {
    int id = out.graph.find_edge(e.at("u").get<int>(), e.at("v").get<int>());
    if (id < 0) throw std::runtime_error("coloring references an edge not in the graph");
    out.coloring.edge[id] = e.at("color").get<int>();
  }
  return out;
}

// --- closure cache ------------------------------------------------------
//
// A cache directory holds <mode>.jsonl plus <mode>.manifest.json carrying the
// format version; invalidation is by version bump only.  HALIN_CACHE_DIR
// overrides the location.

inline std::filesystem::path closure_cache_dir(const std::string& override_dir = "") {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("HALIN_CACHE_DIR"); env && *env) return env;
  return std::filesystem::path(".halin-cache");
}

inline bool save_closure_cache(const Stratification& s, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return false;
  std::string base = mode_name(s.mode);
  std::ofstream data(dir / (base + ".jsonl"));
  if (!data) return false;
  save_closure_jsonl(s, data);
  data.close();
  nlohmann::json man;
  man["mode"] = base;
  man["version"] = kClosureFormatVersion;
  man["palettes"] = s.size();
  std::ofstream mf(dir / (base + ".manifest.json"));
  if (!mf) return false;
  mf << man.dump(2) << '\n';
  return static_cast<bool>(mf);
}

inline bool closure_cache_valid(Mode mode, const std::filesystem::path& dir) {
  std::string base = mode_name(mode);
  std::ifstream mf(dir / (base + ".manifest.json"));
  if (!mf) return false;
  try {
    nlohmann::json man = nlohmann::json::parse(mf);
    return man.at("mode").get<std::string>() == base &&
           man.at("version").get<int>() == kClosureFormatVersion &&
           std::filesystem::exists(dir / (base + ".jsonl"));
  } catch (...) {
    return false;
  }
}

// Load from cache when the manifest matches, otherwise compute and save.
inline Stratification load_or_compute_closure(Mode mode, const std::string& override_dir = "") {
  auto dir = closure_cache_dir(override_dir);
  if (closure_cache_valid(mode, dir)) {
    std::ifstream data(dir / (std::string(mode_name(mode)) + ".jsonl"));
    return load_closure_jsonl(mode, data);
  }
  Stratification s = compute_closure(mode);
  save_closure_cache(s, dir);  // best effort; read-only dirs just skip caching
  return s;
}

}  // namespace halin

#endif
