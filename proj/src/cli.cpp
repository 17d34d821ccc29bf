#include "resdim/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "resdim/bounds.hpp"
#include "resdim/certificates.hpp"
#include "resdim/constructions.hpp"
#include "resdim/families.hpp"
#include "resdim/io.hpp"
#include "resdim/random_trees.hpp"
#include "resdim/solver.hpp"

namespace resdim::cli {

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw ParseError("empty range: " + text);
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("cannot parse range: " + text);
  }
}

std::string list_string(const std::vector<int>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

std::string pair_list_string(const std::vector<std::pair<int, int>>& ps) {
  std::string s = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
  }
  return s + "]";
}

// Row-oriented table writer; markdown by default, csv on request.
class TableWriter {
 public:
  TableWriter(std::ostream& out, std::vector<std::string> header, bool csv)
      : out_(out), cols_(header.size()), csv_(csv) {
    emit(header);
    if (!csv_) {
      std::vector<std::string> rule(cols_, "---");
      emit(rule);
    }
  }

  void row(const std::vector<std::string>& cells) { emit(cells); }

 private:
  void emit(const std::vector<std::string>& cells) {
    if (csv_) {
      for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
      out_ << '\n';
    } else {
      out_ << "|";
      for (const auto& c : cells) out_ << ' ' << c << " |";
      out_ << '\n';
    }
  }

  std::ostream& out_;
  size_t cols_;
  bool csv_;
};

SolveResult solve_by_name(const Graph& g, const std::string& param, const SolveOptions& opts) {
  if (param == "dim") return solve_metric_dimension(g, opts);
  if (param == "adim") return solve_adjacency_dimension(g, opts);
  if (param == "ld") return solve_locating_dominating(g, opts);
  if (param == "bdim") return solve_broadcast_dimension(g, opts);
  throw ParseError("unknown parameter: " + param);
}

int cmd_compute(const std::string& graph_path, const std::string& param,
                const std::string& out_path, int limit, std::optional<int> cost_cap,
                std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  SolveOptions opts;
  opts.max_vertices = limit;
  opts.cost_cap = cost_cap;
  const SolveResult result = solve_by_name(g, param, opts);

  out << "parameter: " << param << '\n';
  if (!result.feasible) {
    out << "result: INFEASIBLE\n";
    return kInfeasible;
  }
  out << "value: " << result.value << '\n';
  if (param == "bdim")
    out << "witness weights: " << list_string(result.witness.weights) << '\n';
  else
    out << "witness: " << list_string(result.witness_set()) << '\n';
  out << "nodes explored: " << result.nodes_explored << '\n';

  if (!out_path.empty()) {
    CertificateFile cert;
    if (param == "bdim")
      cert.weights = result.witness.weights;
    else
      cert.set = result.witness_set();
    write_certificate_file(out_path, cert);
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path,
               const std::string& mode, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  const CertificateFile cert = read_certificate_file(cert_path);

  std::vector<int> set;
  Broadcast f;
  if (cert.weights) {
    if (static_cast<int>(cert.weights->size()) != g.order())
      throw ParseError("certificate length does not match graph order");
    f = Broadcast(*cert.weights);
    set = f.support();
    if (mode != "broadcast" && !f.zero_one())
      throw ParseError("set-valued modes need a vertex set or 0/1 weights");
  } else {
    for (int v : *cert.set)
      if (v < 0 || v >= g.order()) throw ParseError("certificate vertex out of range");
    set = *cert.set;
    f = Broadcast::indicator(g.order(), set);
  }

  VerificationReport report;
  if (mode == "broadcast")
    report = verify_broadcast(g, f);
  else if (mode == "adjacency")
    report = verify_adjacency_set(g, set);
  else if (mode == "ld")
    report = verify_locating_dominating(g, set);
  else
    throw ParseError("unknown mode: " + mode);

  out << "mode: " << mode << '\n';
  out << "valid: " << (report.valid ? "true" : "false") << '\n';
  out << "undifferentiated: " << pair_list_string(report.undifferentiated) << '\n';
  out << "unseen: " << list_string(report.unseen) << '\n';
  return report.valid ? kOk : kInvalidCertificate;
}

FamilySpec build_family_spec(const std::string& family, int n, int rows, int cols, int k,
                             int layers, int m, int delta) {
  FamilySpec spec;
  if (family == "path") {
    spec.family = Family::kPath;
    spec.n = n;
  } else if (family == "cycle") {
    spec.family = Family::kCycle;
    spec.n = n;
  } else if (family == "complete") {
    spec.family = Family::kComplete;
    spec.n = n;
  } else if (family == "grid") {
    spec.family = Family::kGrid;
    spec.n = rows;
    spec.m = cols;
  } else if (family == "f_k" || family == "f_k_oriented") {
    spec.family = family == "f_k" ? Family::kFK : Family::kFKOriented;
    spec.k = k;
  } else if (family == "r_k" || family == "r_k_oriented") {
    spec.family = family == "r_k" ? Family::kRK : Family::kRKOriented;
    spec.k = k;
  } else if (family == "kary_tree") {
    spec.family = Family::kKaryTreeOut;
    spec.k = k;
    spec.n = layers;
  } else if (family == "maxdeg_tight") {
    spec.family = Family::kMaxdegTight;
    spec.m = m;
    spec.delta = delta;
  } else {
    throw ParseError("unknown family: " + family);
  }
  return spec;
}

int cmd_generate(const FamilySpec& spec, const std::string& out_path, std::ostream& out) {
  Graph g = make_family(spec);
  if (out_path.empty())
    write_graph(out, g);
  else
    write_graph_file(out_path, g);
  return kOk;
}

int cmd_construct(const std::string& target, int n, int k, int layers,
                  const std::string& out_path, std::ostream& out) {
  CertificateFile cert;
  if (target == "grid2") {
    cert.set = grid2_certificate(n);
    cert.recipe = grid2_recipe(n);
  } else if (target == "grid3") {
    cert.set = grid3_certificate(n);
    cert.recipe = grid3_recipe(n);
  } else if (target == "kary") {
    cert.set = kary_tree_certificate(k, layers);
    cert.recipe = "depth marks, parity " + std::to_string(layers % 2 == 1 ? 0 : 1);
  } else {
    throw ParseError("unknown construction target: " + target);
  }
  if (out_path.empty())
    write_certificate(out, cert);
  else
    write_certificate_file(out_path, cert);
  return kOk;
}

int cmd_bounds(const std::string& graph_path, int grid2_n, int grid3_n, int limit,
               std::ostream& out) {
  auto print = [&out](const BoundReport& r) {
    out << r.parameter << ": lower " << r.lower << ", upper " << r.upper;
    if (r.exact) out << ", exact " << *r.exact;
    out << '\n';
  };
  if (grid2_n > 0) print(grid2_bounds(grid2_n));
  if (grid3_n > 0) print(grid3_bounds(grid3_n));
  if (!graph_path.empty()) {
    const Graph g = read_graph_file(graph_path);
    out << "order: " << g.order() << ", max degree: " << max_degree(g) << '\n';
    out << "adim lower bound (max degree): " << maxdeg_lower(g.order(), max_degree(g)) << '\n';
    SolveOptions opts;
    opts.max_vertices = limit;
    const SandwichReport s = check_sandwich(g, opts);
    out << "ld: " << s.ld << ", adim: " << s.adim << ", bdim: " << s.bdim << '\n';
    out << "sandwich: ok\n";
  }
  return kOk;
}

int cmd_table(const std::string& theorem, const std::string& n_range, int k,
              const std::string& m_range, int delta, int trials, int max_vertices,
              std::uint64_t seed, const std::string& format, int limit, std::ostream& out) {
  const bool csv = format == "csv";
  SolveOptions opts;
  opts.max_vertices = limit;
  bool all_pass = true;

  if (theorem == "2block" || theorem == "3block") {
    const int rows = theorem == "2block" ? 2 : 3;
    const Range r = parse_range(n_range.empty() ? "2..10" : n_range);
    if (r.lo < 2) throw ParseError("grid tables start at n = 2");
    TableWriter t(out, {"n", "lower", "upper", "adim", "status"}, csv);
    for (int n = r.lo; n <= r.hi; ++n) {
      const BoundReport b = rows == 2 ? grid2_bounds(n) : grid3_bounds(n);
      const int exact = solve_adjacency_dimension(make_grid(rows, n).graph, opts).value;
      const bool ok = b.lower <= exact && exact <= b.upper;
      all_pass = all_pass && ok;
      t.row({std::to_string(n), std::to_string(b.lower), std::to_string(b.upper),
             std::to_string(exact), ok ? "PASS" : "FAIL"});
    }
  } else if (theorem == "layers") {
    const Range r = parse_range(n_range.empty() ? "2..4" : n_range);
    TableWriter t(out, {"k", "layers", "formula", "adim", "status"}, csv);
    for (int n = r.lo; n <= r.hi; ++n) {
      const long long formula = kary_adim_formula(k, n);
      const int exact = solve_adjacency_dimension(make_kary_out_tree(k, n), opts).value;
      const bool ok = formula == exact;
      all_pass = all_pass && ok;
      t.row({std::to_string(k), std::to_string(n), std::to_string(formula),
             std::to_string(exact), ok ? "PASS" : "FAIL"});
    }
  } else if (theorem == "allthesame") {
    SplitMix64 rng(seed);
    TableWriter t(out, {"trial", "n", "adim", "bdim", "status"}, csv);
    for (int i = 0; i < trials; ++i) {
      const Graph g = random_out_tree(rng, max_vertices);
      const int adim = solve_adjacency_dimension(g, opts).value;
      const int bdim = solve_broadcast_dimension(g, opts).value;
      const bool ok = adim == bdim;
      all_pass = all_pass && ok;
      t.row({std::to_string(i), std::to_string(g.order()), std::to_string(adim),
             std::to_string(bdim), ok ? "PASS" : "FAIL"});
    }
  } else if (theorem == "maxdegree") {
    const Range r = parse_range(m_range.empty() ? "3..6" : m_range);
    TableWriter t(out, {"m", "delta", "order", "bound", "adim", "status"}, csv);
    for (int m = r.lo; m <= r.hi; ++m) {
      if (delta > m || (delta - 1) * m % 2 != 0) continue;
      const Graph g = make_maxdeg_tight(m, delta);
      const int bound = maxdeg_lower(g.order(), delta);
      const int exact = solve_adjacency_dimension(g, opts).value;
      const bool ok = exact >= bound;
      all_pass = all_pass && ok;
      t.row({std::to_string(m), std::to_string(delta), std::to_string(g.order()),
             std::to_string(bound), std::to_string(exact), ok ? "PASS" : "FAIL"});
    }
  } else {
    throw ParseError("unknown theorem: " + theorem);
  }
  return all_pass ? kOk : kInvalidCertificate;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact resolvability toolkit: dim / adim / ld / bdim"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, out_path, param = "adim", mode = "adjacency";
  std::string family = "path", target = "grid2", theorem = "2block";
  std::string n_range, m_range, format = "md";
  int n = 1, rows = 2, cols = 2, k = 2, layers = 2, m = 4, delta = 3;
  int limit = 26, trials = 50, max_vertices = 10;
  std::uint64_t seed = 0;
  std::optional<int> cost_cap;

  auto* compute = app.add_subcommand("compute", "solve a parameter exactly");
  compute->add_option("--graph", graph_path)->required();
  compute->add_option("--param", param)->check(CLI::IsMember({"dim", "adim", "ld", "bdim"}));
  compute->add_option("--out", out_path);
  compute->add_option("--limit", limit);
  compute->add_option("--cost-cap", cost_cap);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"broadcast", "adjacency", "ld"}));

  auto* generate = app.add_subcommand("generate", "emit a family member");
  generate->add_option("--family", family)->required();
  generate->add_option("-n,--n", n);
  generate->add_option("--rows", rows);
  generate->add_option("--cols", cols);
  generate->add_option("--k", k);
  generate->add_option("--layers", layers);
  generate->add_option("--m", m);
  generate->add_option("--delta", delta);
  generate->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "emit a closed-form certificate");
  construct->add_option("--target", target)->check(CLI::IsMember({"grid2", "grid3", "kary"}));
  construct->add_option("-n,--n", n);
  construct->add_option("--k", k);
  construct->add_option("--layers", layers);
  construct->add_option("--out", out_path);

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and sandwich check");
  bounds->add_option("--graph", graph_path);
  int grid2_n = 0, grid3_n = 0;
  bounds->add_option("--grid2", grid2_n);
  bounds->add_option("--grid3", grid3_n);
  bounds->add_option("--limit", limit);

  auto* table = app.add_subcommand("table", "reproduce a result over a parameter range");
  table->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"2block", "3block", "layers", "allthesame", "maxdegree"}));
  table->add_option("--n", n_range);
  table->add_option("--k", k);
  table->add_option("--m", m_range);
  table->add_option("--delta", delta);
  table->add_option("--trials", trials);
  table->add_option("--max-vertices", max_vertices);
  table->add_option("--seed", seed);
  table->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));
  table->add_option("--limit", limit);

  std::vector<const char*> argv;
  argv.push_back("resdim");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(graph_path, param, out_path, limit, cost_cap, out);
    if (verify->parsed()) return cmd_verify(graph_path, cert_path, mode, out);
    if (generate->parsed())
      return cmd_generate(build_family_spec(family, n, rows, cols, k, layers, m, delta),
                          out_path, out);
    if (construct->parsed()) return cmd_construct(target, n, k, layers, out_path, out);
    if (bounds->parsed()) return cmd_bounds(graph_path, grid2_n, grid3_n, limit, out);
    if (table->parsed())
      return cmd_table(theorem, n_range, k, m_range, delta, trials, max_vertices, seed, format,
                       limit, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace resdim::cli
