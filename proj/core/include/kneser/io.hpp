#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "kneser/bounds.hpp"
#include "kneser/kneser_core.hpp"
#include "kneser/solver.hpp"

namespace kneser {

using Json = nlohmann::ordered_json;

// DIMACS edge format: "p edge N M" then "e u v" lines, 1-based indices.
// Comment lines starting with 'c' are skipped on input.
void write_dimacs(std::ostream& out, const GenericGraph& g);
GenericGraph read_dimacs(std::istream& in);

// {"n":..,"k":..,"vertices":[[1,2],...]} with sorted element lists in canonical order.
Json kneser_to_json(const KneserGraph& g);
/// Rebuilds the graph and checks the listed vertices are exactly the
/// canonical vertex list. Throws ParseError otherwise.
KneserGraph kneser_from_json(const Json& j);

Json subset_to_json(const KSubset& s);
KSubset subset_from_json(int n, const Json& j);

Json report_to_json(const BoundReport& r);

// {"size":..,"witness":[[..],..],"optimal":..,"nodes":..,"millis":..}
Json solve_result_to_json(const SolveResult& r, const KneserGraph& g);
/// Generic-graph variant: witness entries are 1-based vertex indices.
Json solve_result_to_json(const SolveResult& r);

// {"n":..,"k":..,"d":..,"set":[[..],..],"valid":..}
Json certificate_to_json(const Certificate& c, bool valid);
Certificate certificate_from_json(const Json& j);

}  // namespace kneser
