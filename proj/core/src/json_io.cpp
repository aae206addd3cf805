#include "coverkit/json_io.hpp"

#include <fstream>

#include "coverkit/error.hpp"

namespace coverkit {

using nlohmann::json;

json to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& doc) {
  try {
    // Accept the {"graph": ..., "certificate": ...} documents the builders emit.
    const json& j = doc.is_object() && doc.contains("graph") ? doc.at("graph") : doc;
    const int n = j.at("n").get<int>();
    if (n < 0) throw PreconditionError("graph: negative vertex count");
    MultiGraph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw PreconditionError("graph: edge must be a pair");
      const int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("graph: endpoint out of range");
      g.add_edge(u, v);
    }
    return g;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("graph: ") + ex.what());
  }
}

json to_json(const Circuit& c) { return {{"length", c.length()}, {"vertices", c.vertices}, {"edges", c.edges}}; }

json to_json(const GirthCertificate& c) {
  json spectrum = json::object();
  for (auto [len, count] : c.spectrum_prefix.counts) spectrum[std::to_string(len)] = count;
  json out = {{"vertex_count", c.vertex_count},
              {"girth", c.girth},
              {"witness", to_json(c.witness)},
              {"two_girth_lower_bound", c.two_girth_lower_bound},
              {"spectrum_cutoff", c.spectrum_prefix.cutoff},
              {"spectrum", spectrum},
              {"connected", c.connected},
              {"regular_degree", c.regular_degree},
              {"simple", c.simple},
              {"seed", c.seed},
              {"construction", c.construction}};
  out["two_girth"] = c.two_girth ? json(*c.two_girth) : json(nullptr);
  return out;
}

namespace {

std::vector<int> one_indexed(const std::vector<int>& p) {
  std::vector<int> out(p);
  for (int& v : out) ++v;
  return out;
}

}  // namespace

json to_json(const SchreierAction& a) {
  return {{"n", a.n}, {"base", a.base + 1}, {"x", one_indexed(a.x)}, {"y", one_indexed(a.y)}};
}

SchreierAction action_from_json(const json& j) {
  try {
    SchreierAction a;
    a.n = j.at("n").get<int>();
    a.base = j.value("base", 1) - 1;
    a.x = j.at("x").get<std::vector<int>>();
    a.y = j.at("y").get<std::vector<int>>();
    for (int& v : a.x) --v;
    for (int& v : a.y) --v;
    a.validate();
    return a;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("action: ") + ex.what());
  }
}

json to_json(const SurfaceAction& a) {
  return {{"n", a.n},       {"base", a.base + 1},          {"x", one_indexed(a.gen[0])},
          {"y", one_indexed(a.gen[1])}, {"x'", one_indexed(a.gen[2])}, {"y'", one_indexed(a.gen[3])}};
}

json to_json(const RepConfig& c) {
  return {{"x", c.gens[0]}, {"y", c.gens[1]}, {"x'", c.gens[2]}, {"y'", c.gens[3]}, {"tolerance", c.tolerance}};
}

RepConfig rep_config_from_json(const json& j) {
  try {
    RepConfig c;
    const char* names[4] = {"x", "y", "x'", "y'"};
    for (int i = 0; i < 4; ++i) c.gens[i] = j.at(names[i]).get<std::array<double, 4>>();
    c.tolerance = j.value("tolerance", c.tolerance);
    return c;
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("rep config: ") + ex.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw PreconditionError(path + ": " + ex.what());
  }
}

}  // namespace coverkit
