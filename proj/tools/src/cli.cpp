#include "kneser/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "kneser/bounds.hpp"
#include "kneser/certify.hpp"
#include "kneser/errors.hpp"
#include "kneser/io.hpp"

namespace kneser::cli {

KneserSolver default_solver() {
  return [](int n, int k, int d, const SearchBudget& budget) { return solve_kneser(n, k, d, budget); };
}

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw DomainError("bad duration '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  double scale = 0;
  if (unit.empty() || unit == "s") {
    scale = 1000;
  } else if (unit == "ms") {
    scale = 1;
  } else if (unit == "m" || unit == "min") {
    scale = 60'000;
  } else if (unit == "h") {
    scale = 3'600'000;
  }
  if (scale == 0 || !(value >= 0)) throw DomainError("bad duration '" + text + "'");
  return std::chrono::milliseconds(static_cast<std::int64_t>(value * scale));
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::skipped_budget: return "skipped-budget";
  }
  return "?";
}

const std::vector<std::string>& repro_groups() {
  static const std::vector<std::string> groups{"k2", "k3", "odd", "n0", "katona", "identity", "hall"};
  return groups;
}

namespace {

std::string label(int n, int k) { return "K(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

ReproRow value_row(std::string group, std::string instance, std::string quantity, std::string claim,
                   std::uint64_t claimed, std::uint64_t computed, std::string method) {
  return {std::move(group), std::move(instance), std::move(quantity), std::move(claim),
          std::to_string(claimed), std::to_string(computed), std::move(method),
          claimed == computed ? RowStatus::match : RowStatus::mismatch, true};
}

// Exact-solve row: the witness is re-checked, so a solver that lies about its
// size or hands back a bad set shows up as a mismatch.
ReproRow solve_row(const KneserSolver& solver, std::string group, std::string instance_name, std::string claim,
                   int n, int k, std::uint64_t claimed, const SearchBudget& budget, bool mandatory,
                   SolveResult* keep = nullptr) {
  ReproRow row{std::move(group), std::move(instance_name), "diss", std::move(claim),
               std::to_string(claimed), "", "exact solve", RowStatus::mismatch, mandatory};
  const KneserGraph g = build_kneser(n, k);
  SolveResult r = solver(n, k, 1, budget);
  const bool witness_ok = r.witness.universe() == g.order() && r.witness.count() == r.best_size &&
                          check_max_degree(g.graph(), r.witness, 1);
  if (!witness_ok) {
    row.computed = std::to_string(r.best_size) + " (invalid witness)";
  } else if (r.optimal) {
    row.computed = std::to_string(r.best_size);
    row.status = r.best_size == claimed ? RowStatus::match : RowStatus::mismatch;
  } else {
    row.computed = ">=" + std::to_string(r.best_size);
    row.status = r.best_size > claimed ? RowStatus::mismatch : RowStatus::skipped_budget;
  }
  if (keep != nullptr) *keep = std::move(r);
  return row;
}

void k2_rows(std::vector<ReproRow>& rows, const KneserSolver& solver, const SearchBudget& budget) {
  const std::string claim = "diss(K(n,2)) = max(n-1,6)";
  for (int n = 5; n <= 9; ++n) {
    rows.push_back(solve_row(solver, "k2", label(n, 2), claim, n, 2,
                             static_cast<std::uint64_t>(std::max(n - 1, 6)), budget, true));
  }
  for (int n = 10; n <= 12; ++n) {
    const BoundReport rep = report(n, 2);
    const std::uint64_t upper = combined_upper(n, 2);
    ReproRow row{"k2", label(n, 2), "diss", claim, std::to_string(n - 1), "", "bound closure",
                 RowStatus::mismatch, true};
    if (rep.best_lower == upper) {
      row.computed = std::to_string(upper);
      row.status = upper == static_cast<std::uint64_t>(n - 1) ? RowStatus::match : RowStatus::mismatch;
    } else {
      row.computed = "[" + std::to_string(rep.best_lower) + "," + std::to_string(upper) + "]";
    }
    rows.push_back(std::move(row));
  }
}

void k3_rows(std::vector<ReproRow>& rows, const KneserSolver& solver, const ReproOptions& opt) {
  const std::string claim = "diss(K(n,3)) = C(n-1,2) for n >= 8";
  rows.push_back(solve_row(solver, "k3", label(8, 3), claim, 8, 3, 21, opt.budget, true));
  rows.push_back(value_row("k3", label(9, 3), "diss lower", "center I(1) is a dissociation set", 28,
                           alpha_kneser(9, 3), "bound (center)"));
  SearchBudget stretch = opt.budget;
  if (!stretch.max_time) stretch.max_time = opt.stretch_time;
  rows.push_back(solve_row(solver, "k3", label(9, 3), claim, 9, 3, 28, stretch, false));
}

void odd_rows(std::vector<ReproRow>& rows, const KneserSolver& solver, const SearchBudget& budget) {
  rows.push_back(solve_row(solver, "odd", "O(2)=K(5,2)", "diss(O_k) = C(2k,k)", 5, 2, 6, budget, true));
  rows.push_back(solve_row(solver, "odd", "O(3)=K(7,3)", "diss(O_k) = C(2k,k)", 7, 3, 20, budget, true));
}

void n0_rows(std::vector<ReproRow>& rows) {
  const std::string claim = "least n0 with 2+|U| <= alpha for all n >= n0";
  rows.push_back(value_row("n0", "k=2", "n0'", claim, 7, static_cast<std::uint64_t>(n0prime(2)), "threshold scan"));
  rows.push_back(value_row("n0", "k=3", "n0'", claim, 17, static_cast<std::uint64_t>(n0prime(3)), "threshold scan"));
}

void katona_rows(std::vector<ReproRow>& rows, const KneserSolver& solver, const SearchBudget& budget) {
  for (int n = 5; n <= 7; ++n) {
    const int k = 2;
    const std::uint64_t expected = static_cast<std::uint64_t>(std::max(n - 1, 6));
    SolveResult r;
    ReproRow solved = solve_row(solver, "katona", label(n, k), "", n, k, expected, budget, true, &r);
    ReproRow row{"katona", label(n, k), "max substrings",
                 "a dissociation set has at most k+1 substrings in any cyclic arrangement",
                 "<=" + std::to_string(k + 1), "", "exhaustive (n-1)! arrangements", RowStatus::mismatch, true};
    if (solved.status != RowStatus::match) {
      row.computed = "no maximum witness: " + solved.computed;
      row.status = solved.status;
    } else {
      const KneserGraph g = build_kneser(n, k);
      std::vector<KSubset> family;
      r.witness.for_each([&](std::size_t v) { family.push_back(g.vertex(v)); });
      const SubstringMaximum m = max_substrings(n, k, family);
      row.computed = std::to_string(m.max_count);
      row.status = m.max_count <= static_cast<std::size_t>(k + 1) ? RowStatus::match : RowStatus::mismatch;
    }
    rows.push_back(std::move(row));
  }
}

void identity_rows(std::vector<ReproRow>& rows, std::uint64_t seed) {
  constexpr int kFamilies = 50;
  std::mt19937_64 rng(seed);
  int holds = 0;
  for (int i = 0; i < kFamilies; ++i) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    std::vector<KSubset> family;
    for (const KSubset& s : enumerate_k_subsets(n, k)) {
      if (rng() & 1U) family.push_back(s);
    }
    if (double_count_identity(n, k, family)) ++holds;
  }
  rows.push_back({"identity", "n in {5,6,7}, k in {2,3}", "random families",
                  "each k-set is a substring of k!(n-k)! arrangements", std::to_string(kFamilies) + "/" + std::to_string(kFamilies),
                  std::to_string(holds) + "/" + std::to_string(kFamilies), "exhaustive (n-1)! arrangements",
                  holds == kFamilies ? RowStatus::match : RowStatus::mismatch, true});
}

void hall_rows(std::vector<ReproRow>& rows, std::uint64_t seed) {
  constexpr int kSamples = 200;
  std::mt19937_64 rng(seed);
  for (int k : {2, 3}) {
    const KneserGraph odd = build_kneser(2 * k + 1, k);
    const std::vector<std::size_t> members = center(odd, 2 * k + 1).to_vertex_set(odd).to_vector();
    const std::uint64_t total = (std::uint64_t{1} << members.size()) - 1;
    auto subset = [&](std::uint64_t m) {
      VertexSet l(odd.order());
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((m >> i) & 1U) l.insert(members[i]);
      }
      return l;
    };
    std::uint64_t expanding = 0;
    for (std::uint64_t m = 1; m <= total; ++m) {
      if (odd_expansion_check(odd, subset(m))) ++expanding;
    }
    const std::string name = "O(" + std::to_string(k) + ")";
    rows.push_back({"hall", name, "expanding L", "k|N(L) & D| >= (k+1)|L| for nonempty L in I(2k+1)",
                    std::to_string(total) + "/" + std::to_string(total),
                    std::to_string(expanding) + "/" + std::to_string(total), "exhaustive",
                    expanding == total ? RowStatus::match : RowStatus::mismatch, true});

    int saturated = 0;
    for (int i = 0; i < kSamples; ++i) {
      const std::uint64_t m = 1 + rng() % total;
      const ExpansionGraph eg = odd_expansion_graph(odd, subset(m));
      if (std::holds_alternative<XMatching>(find_x_matching(eg.graph))) ++saturated;
    }
    rows.push_back({"hall", name, "L-saturating matchings", "every L in I(2k+1) matches into D",
                    std::to_string(kSamples) + "/" + std::to_string(kSamples),
                    std::to_string(saturated) + "/" + std::to_string(kSamples), "sampled Hopcroft-Karp",
                    saturated == kSamples ? RowStatus::match : RowStatus::mismatch, true});
  }
}

}  // namespace

std::vector<ReproRow> reproduce(const ReproOptions& opt, const KneserSolver& solver) {
  auto wanted = [&](const std::string& g) {
    return opt.groups.empty() || std::find(opt.groups.begin(), opt.groups.end(), g) != opt.groups.end();
  };
  std::vector<ReproRow> rows;
  if (wanted("k2")) k2_rows(rows, solver, opt.budget);
  if (wanted("k3")) k3_rows(rows, solver, opt);
  if (wanted("odd")) odd_rows(rows, solver, opt.budget);
  if (wanted("n0")) n0_rows(rows);
  if (wanted("katona")) katona_rows(rows, solver, opt.budget);
  if (wanted("identity")) identity_rows(rows, opt.seed);
  if (wanted("hall")) hall_rows(rows, opt.seed);
  return rows;
}

int repro_exit_code(const std::vector<ReproRow>& rows) {
  int code = kSuccess;
  for (const ReproRow& r : rows) {
    if (r.status == RowStatus::mismatch) return kMismatch;
    if (r.status == RowStatus::skipped_budget && r.mandatory) code = kBudgetLimited;
  }
  return code;
}

namespace {

struct BudgetFlags {
  std::string max_time;
  std::uint64_t max_nodes = 0;
  unsigned threads = 1;
  CLI::Option* max_time_opt = nullptr;
  CLI::Option* max_nodes_opt = nullptr;

  void attach(CLI::App* app) {
    max_time_opt = app->add_option("--max-time", max_time, "Wall-clock budget, e.g. 600s, 1500ms, 10m");
    max_nodes_opt = app->add_option("--max-nodes", max_nodes, "Search-node budget");
    app->add_option("--threads", threads, "Solver worker threads")->check(CLI::Range(1U, 1024U));
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.thread_count = threads;
    if (max_time_opt->count() > 0) b.max_time = parse_duration(max_time);
    if (max_nodes_opt->count() > 0) b.max_nodes = max_nodes;
    return b;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  const auto it = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != text.end() && (*it == '{' || *it == '[');
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

int cmd_gen(int n, int k, const std::string& format, const std::string& out_path, std::ostream& out) {
  const KneserGraph g = build_kneser(n, k);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + out_path);
  }
  std::ostream& sink = out_path.empty() ? out : file;
  if (format == "json") {
    sink << kneser_to_json(g).dump() << '\n';
  } else {
    write_dimacs(sink, g.graph());
  }
  return kSuccess;
}

int cmd_solve(int n, int k, int d, const SearchBudget& budget, const std::string& output, const KneserSolver& solver,
              std::ostream& out) {
  const KneserGraph g = build_kneser(n, k);
  const SolveResult r = solver(n, k, d, budget);
  if (output == "table") {
    out << label(n, k) << " d=" << d << ": size " << r.best_size << (r.optimal ? " (optimal)" : " (budget-limited)")
        << ", " << r.nodes_explored << " nodes, "
        << std::chrono::duration_cast<std::chrono::milliseconds>(r.wall_time).count() << " ms\n";
    r.witness.for_each([&](std::size_t v) { out << "  " << g.vertex(v).to_string() << '\n'; });
  } else {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    const Json body = solve_result_to_json(r, g);
    for (const auto& [key, value] : body.items()) j[key] = value;
    out << j.dump() << '\n';
  }
  return r.optimal ? kSuccess : kBudgetLimited;
}

void print_bound_table(const BoundReport& r, std::ostream& out) {
  out << label(r.n, r.k) << "  r=" << r.r << "  alpha=" << r.alpha << '\n';
  for (const NamedBound& b : r.lower_bounds) out << "  lower  " << std::setw(26) << std::left << b.name << b.value << '\n';
  for (const NamedBound& b : r.upper_bounds) {
    out << "  upper  " << std::setw(26) << std::left << b.name << b.value;
    if (b.raw) out << "  (" << b.raw->to_string() << ")";
    out << '\n';
  }
  for (const std::string& name : r.not_applicable) out << "  n/a    " << name << '\n';
  out << "  interval [" << r.best_lower << ", " << r.best_upper << "]\n";
  if (r.known_exact) {
    out << "  exact  " << r.known_exact->value << " (" << r.known_exact->source << ")\n";
  } else {
    out << "  exact  unknown\n";
  }
}

int cmd_bound(int n, int k, const std::string& output, std::ostream& out) {
  const BoundReport r = report(n, k);
  if (output == "table") {
    print_bound_table(r, out);
  } else {
    out << report_to_json(r).dump() << '\n';
  }
  return kSuccess;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, std::optional<int> d_flag,
               std::ostream& out) {
  const std::string graph_text = slurp(graph_path);
  const std::string cert_text = slurp(cert_path);

  std::optional<KneserGraph> kneser;
  GenericGraph graph;
  if (looks_like_json(graph_text)) {
    kneser = kneser_from_json(parse_json(graph_text, graph_path));
    graph = kneser->graph();
  } else {
    std::istringstream in(graph_text);
    graph = read_dimacs(in);
  }

  std::optional<int> cert_d;
  std::vector<std::size_t> indices;  // 0-based
  auto add_index = [&](long long one_based) {
    if (one_based < 1 || static_cast<std::size_t>(one_based) > graph.order()) {
      throw ParseError("certificate vertex " + std::to_string(one_based) + " out of range");
    }
    indices.push_back(static_cast<std::size_t>(one_based - 1));
  };
  auto read_index_array = [&](const Json& arr) {
    for (const Json& v : arr) {
      if (!v.is_number_integer()) throw ParseError("certificate entries must all be subsets or all be integers");
      add_index(v.get<long long>());
    }
  };

  if (looks_like_json(cert_text)) {
    const Json j = parse_json(cert_text, cert_path);
    if (j.is_array()) {
      read_index_array(j);
    } else if (j.is_object() && j.contains("set") && j["set"].is_array() &&
               (j["set"].empty() || j["set"][0].is_number_integer())) {
      if (j.contains("d")) cert_d = j["d"].get<int>();
      read_index_array(j["set"]);
    } else {
      const Certificate c = certificate_from_json(j);
      cert_d = c.d;
      if (!kneser) {
        // DIMACS graph: subsets are only meaningful if the file is K(n,k) in canonical order.
        const KneserGraph rebuilt = build_kneser(c.n, c.k);
        if (!(rebuilt.graph() == graph)) throw ParseError("graph file is not K(n,k) for the certificate's n,k");
        kneser = rebuilt;
      } else if (kneser->n() != c.n || kneser->k() != c.k) {
        throw ParseError("certificate n,k do not match the graph");
      }
      for (const KSubset& s : c.members) indices.push_back(*kneser->index_of(s));
    }
  } else {
    std::istringstream in(cert_text);
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw ParseError("bad certificate token '" + tok + "'");
      add_index(v);
    }
  }

  VertexSet s(graph.order());
  for (std::size_t v : indices) {
    if (s.contains(v)) throw ParseError("certificate lists vertex " + std::to_string(v + 1) + " twice");
    s.insert(v);
  }
  const int d = d_flag.value_or(cert_d.value_or(1));
  if (d < 0) throw DomainError("degree bound d must be non-negative");
  const bool valid = check_max_degree(graph, s, d);

  if (kneser) {
    out << certificate_to_json(Certificate::from_vertex_set(*kneser, s, d, Provenance::user), valid).dump() << '\n';
  } else {
    Json j;
    j["d"] = d;
    j["set"] = Json::array();
    s.for_each([&](std::size_t v) { j["set"].push_back(v + 1); });
    j["valid"] = valid;
    out << j.dump() << '\n';
  }
  return valid ? kSuccess : kMismatch;
}

void print_rows(const std::vector<ReproRow>& rows, const std::string& output, std::ostream& out) {
  if (output == "json") {
    Json arr = Json::array();
    for (const ReproRow& r : rows) {
      Json j;
      j["group"] = r.group;
      j["instance"] = r.instance;
      j["quantity"] = r.quantity;
      j["claim"] = r.claim;
      j["claimed"] = r.claimed;
      j["computed"] = r.computed;
      j["method"] = r.method;
      j["status"] = to_string(r.status);
      j["mandatory"] = r.mandatory;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  std::size_t w_inst = 8, w_qty = 8, w_claimed = 7, w_computed = 8, w_method = 6;
  for (const ReproRow& r : rows) {
    w_inst = std::max(w_inst, r.instance.size());
    w_qty = std::max(w_qty, r.quantity.size());
    w_claimed = std::max(w_claimed, r.claimed.size());
    w_computed = std::max(w_computed, r.computed.size());
    w_method = std::max(w_method, r.method.size());
  }
  auto line = [&](const std::string& g, const std::string& i, const std::string& q, const std::string& c,
                  const std::string& v, const std::string& m, const std::string& s, const std::string& claim) {
    out << std::left << std::setw(9) << g << "  " << std::setw(static_cast<int>(w_inst)) << i << "  "
        << std::setw(static_cast<int>(w_qty)) << q << "  " << std::setw(static_cast<int>(w_claimed)) << c << "  "
        << std::setw(static_cast<int>(w_computed)) << v << "  " << std::setw(static_cast<int>(w_method)) << m
        << "  " << std::setw(15) << s << "  " << claim << '\n';
  };
  line("group", "instance", "quantity", "claimed", "computed", "method", "status", "claim");
  std::size_t matched = 0;
  for (const ReproRow& r : rows) {
    line(r.group, r.instance, r.quantity, r.claimed, r.computed, r.method,
         to_string(r.status) + (r.mandatory ? "" : "*"), r.claim);
    if (r.status == RowStatus::match) ++matched;
  }
  out << matched << "/" << rows.size() << " rows match (* = optional row)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const KneserSolver& solver) {
  CLI::App app{"Dissociation sets in Kneser graphs: generate, solve, bound, verify, reproduce", "kneser"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int d = 1;
  std::string format = "dimacs";
  std::string out_path;
  std::string output;
  BudgetFlags solve_flags;
  BudgetFlags repro_flags;

  CLI::App* gen = app.add_subcommand("gen", "Write K(n,k) as DIMACS or JSON");
  gen->add_option("n", n)->required();
  gen->add_option("k", k)->required();
  gen->add_option("--format", format)->check(CLI::IsMember({"dimacs", "json"}));
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  CLI::App* solve_cmd = app.add_subcommand("solve", "Exact maximum degree-bounded set of K(n,k)");
  solve_cmd->add_option("n", n)->required();
  solve_cmd->add_option("k", k)->required();
  solve_cmd->add_option("--max-degree", d, "Induced degree bound d (1 = dissociation)")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--output", output)->check(CLI::IsMember({"json", "table"}));
  solve_flags.attach(solve_cmd);

  CLI::App* bound = app.add_subcommand("bound", "Bound report for diss(K(n,k))");
  bound->add_option("n", n)->required();
  bound->add_option("k", k)->required();
  bound->add_option("--output", output)->check(CLI::IsMember({"json", "table"}));

  std::string graph_path;
  std::string cert_path;
  CLI::App* verify = app.add_subcommand("verify", "Check that a certificate induces max degree <= d");
  verify->add_option("graph", graph_path, "DIMACS or JSON graph file")->required();
  verify->add_option("certificate", cert_path, "Certificate JSON or 1-based vertex list")->required();
  CLI::Option* verify_d = verify->add_option("--max-degree", d)->check(CLI::NonNegativeNumber);

  std::vector<std::string> groups;
  std::uint64_t seed = 1;
  CLI::App* repro = app.add_subcommand("reproduce", "Recompute every published value and compare");
  repro->add_option("--rows", groups, "Row groups to run (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember(repro_groups()));
  repro->add_option("--seed", seed, "Seed for sampled rows");
  repro->add_option("--output", output)->check(CLI::IsMember({"json", "table"}));
  repro_flags.attach(repro);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*gen) return cmd_gen(n, k, format, out_path, out);
    if (*solve_cmd) return cmd_solve(n, k, d, solve_flags.budget(), output.empty() ? "json" : output, solver, out);
    if (*bound) return cmd_bound(n, k, output.empty() ? "json" : output, out);
    if (*verify) {
      return cmd_verify(graph_path, cert_path, verify_d->count() > 0 ? std::optional<int>(d) : std::nullopt, out);
    }
    ReproOptions opt;
    opt.groups = groups;
    opt.budget = repro_flags.budget();
    opt.seed = seed;
    const std::vector<ReproRow> rows = reproduce(opt, solver);
    print_rows(rows, output.empty() ? "table" : output, out);
    return repro_exit_code(rows);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << '\n';
  } catch (const ContractError& e) {
    err << "invalid input: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace kneser::cli
