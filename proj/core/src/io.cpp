#include "kneser/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "kneser/errors.hpp"

namespace kneser {

void write_dimacs(std::ostream& out, const GenericGraph& g) {
  const auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

GenericGraph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t order = 0;
  std::size_t declared = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto fail = [&](const std::string& what) {
    throw ParseError("DIMACS line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (have_header) fail("duplicate problem line");
      if (!(ls >> kind >> order >> declared) || (kind != "edge" && kind != "col")) {
        fail("expected 'p edge <N> <M>'");
      }
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before problem line");
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > order || static_cast<std::size_t>(v) > order) {
        fail("vertex index out of range");
      }
      if (u == v) fail("self-loop");
      edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError("DIMACS input has no problem line");
  GenericGraph g = GenericGraph::from_edges(order, edges);
  if (g.edge_count() != declared) {
    throw ParseError("DIMACS header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(g.edge_count()) + " distinct");
  }
  return g;
}

Json subset_to_json(const KSubset& s) { return Json(s.elements()); }

KSubset subset_from_json(int n, const Json& j) {
  if (!j.is_array()) throw ParseError("subset must be an array of elements");
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("subset elements must be integers");
    elems.push_back(e.get<int>());
  }
  try {
    return KSubset::from_elements(n, elems);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json kneser_to_json(const KneserGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(subset_to_json(v));
  return Json{{"n", g.n()}, {"k", g.k()}, {"vertices", std::move(vertices)}};
}

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

KneserGraph kneser_from_json(const Json& j) {
  const int n = get_int(j, "n");
  const int k = get_int(j, "k");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw ParseError("missing 'vertices' array");
  KneserGraph g = build_kneser(n, k);
  const auto& listed = j.at("vertices");
  if (listed.size() != g.order()) throw ParseError("vertex count does not match C(n,k)");
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (subset_from_json(n, listed[i]) != g.vertex(i)) {
      throw ParseError("vertex " + std::to_string(i) + " is not in canonical order");
    }
  }
  return g;
}

Json report_to_json(const BoundReport& r) {
  auto bounds = [](const std::vector<NamedBound>& list) {
    Json out = Json::array();
    for (const auto& b : list) {
      Json e{{"name", b.name}, {"value", b.value}};
      if (b.raw) e["rational"] = b.raw->to_string();
      if (b.derived) e["derived"] = true;
      out.push_back(std::move(e));
    }
    return out;
  };
  Json exact = nullptr;
  if (r.known_exact) exact = Json{{"value", r.known_exact->value}, {"source", r.known_exact->source}};
  return Json{{"n", r.n},
              {"k", r.k},
              {"r", r.r},
              {"alpha", r.alpha},
              {"lower", bounds(r.lower_bounds)},
              {"upper", bounds(r.upper_bounds)},
              {"not_applicable", r.not_applicable},
              {"exact", std::move(exact)},
              {"interval", {r.best_lower, r.best_upper}}};
}

namespace {

Json solve_common(const SolveResult& r, Json witness) {
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(r.wall_time).count();
  Json j{{"size", r.best_size},
         {"witness", std::move(witness)},
         {"optimal", r.optimal},
         {"nodes", r.nodes_explored},
         {"millis", millis}};
  if (!r.bound_source.empty()) j["bound_source"] = r.bound_source;
  return j;
}

}  // namespace

Json solve_result_to_json(const SolveResult& r, const KneserGraph& g) {
  Json witness = Json::array();
  r.witness.for_each([&](std::size_t v) { witness.push_back(subset_to_json(g.vertex(v))); });
  return solve_common(r, std::move(witness));
}

Json solve_result_to_json(const SolveResult& r) {
  Json witness = Json::array();
  r.witness.for_each([&](std::size_t v) { witness.push_back(v + 1); });
  return solve_common(r, std::move(witness));
}

Json certificate_to_json(const Certificate& c, bool valid) {
  Json set = Json::array();
  for (const auto& m : c.members) set.push_back(subset_to_json(m));
  return Json{{"n", c.n}, {"k", c.k}, {"d", c.d}, {"set", std::move(set)}, {"valid", valid}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.n = get_int(j, "n");
  c.k = get_int(j, "k");
  c.d = j.contains("d") ? get_int(j, "d") : 1;
  if (!j.contains("set") || !j.at("set").is_array()) throw ParseError("missing 'set' array");
  for (const auto& m : j.at("set")) {
    KSubset s = subset_from_json(c.n, m);
    if (s.size() != c.k) throw ParseError(s.to_string() + " does not have k elements");
    c.members.push_back(s);
  }
  c.provenance = Provenance::user;
  return c;
}

}  // namespace kneser
