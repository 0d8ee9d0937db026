#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hcordial/catalog.hpp"
#include "hcordial/constructors.hpp"
#include "hcordial/graph.hpp"
#include "hcordial/labeling.hpp"
#include "hcordial/oracle.hpp"
#include "hcordial/report_json.hpp"

namespace hcordial::cli {

namespace {

// Bad flags or unreadable input; always maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Io& io) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

// Accepts either text format; a labeled file is reduced to its graph.
Graph read_any_graph(const std::string& text) {
  try {
    return parse_graph(text);
  } catch (const ParseError& graph_error) {
    try {
      return parse_labeling(text).graph();
    } catch (const ParseError&) {
      throw graph_error;
    }
  }
}

Graph family_graph(const std::string& family, std::size_t n, std::uint64_t seed) {
  if (family == "complete") return complete_graph(n);
  if (family == "wheel") return wheel_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "star") return star_graph(n);
  if (family == "tree") {
    std::mt19937_64 rng(seed);
    return random_tree(n, rng);
  }
  throw UsageError("unknown family '" + family + "'");
}

std::string signed_value(std::int64_t x) {
  return x > 0 ? "+" + std::to_string(x) : std::to_string(x);
}

void print_counts(std::ostream& out, const std::string& title,
                  const std::map<std::int64_t, std::size_t>& counts) {
  out << std::left << std::setw(15) << title;
  if (counts.empty()) out << " (none)";
  for (const auto& [value, count] : counts) out << "  " << signed_value(value) << ": " << count;
  out << "\n";
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << "kind:  " << r.kind.name() << "\n";
  out << "valid: " << (r.valid ? "yes" : "no") << "\n";
  if (r.k_value) out << "K:     " << *r.k_value << "\n";
  print_counts(out, "edge labels", r.tally.edges);
  print_counts(out, "vertex values", r.tally.vertices);
  for (const auto& v : r.violations) out << "violation [" << v.condition << "] " << v.detail << "\n";
}

void print_stats(std::ostream& out, const SearchStats& s) {
  out << "nodes: " << s.nodes << "  leaves: " << s.leaves << "  prunes: " << s.prunes << "\n";
  out << "assignments explored: " << to_string(s.covered) << " of " << to_string(s.space) << "\n";
  out << "time: " << std::fixed << std::setprecision(3) << s.wall_seconds << " s\n";
  out.unsetf(std::ios::floatfield);
}

nlohmann::json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},           {"leaves", s.leaves},
          {"prunes", s.prunes},         {"covered", to_string(s.covered)},
          {"space", to_string(s.space)}, {"wall_seconds", s.wall_seconds}};
}

nlohmann::json labeling_json(const Labeling& l) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < l.graph().size(); ++i) {
    const Edge& e = l.graph().edge(i);
    edges.push_back({e.u, e.v, l.label(i)});
  }
  return {{"n", l.graph().order()}, {"edges", edges}};
}

// ---- subcommands -----------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a, Io& io) {
  write_output(a.out, serialize_graph(family_graph(a.family, a.n, a.seed)), io);
  return kOk;
}

struct LabelArgs {
  std::string kind;
  std::string in;
  std::string family;
  std::optional<std::size_t> n;
  std::uint64_t seed = 1;
  bool near = false;
  std::string out;
};

bool is_complete(const Graph& g) { return g.order() >= 1 && g == complete_graph(g.order()); }
bool is_wheel(const Graph& g) { return g.order() >= 4 && g == wheel_graph(g.order() - 1); }

// Picks the constructor for (kind, graph). Obstructions are checked first so
// that the rejection names the necessary condition that fails.
Labeling construct(const LabelingKind& kind, const Graph& g, bool near) {
  if (auto obs = obstruction(g, kind); obs && !(near && kind.family == LabelingKind::Family::SemiHCordial)) {
    throw PreconditionError(obs->reason, obs);
  }
  switch (kind.family) {
    case LabelingKind::Family::HCordial:
      if (is_complete(g)) return h_cordial_complete(g.order());
      if (is_wheel(g)) return h_cordial_wheel(g.order() - 1);
      throw PreconditionError("no H-cordial construction for this graph (complete graphs and wheels only)");
    case LabelingKind::Family::SemiHCordial:
      if (!is_tree(g)) throw PreconditionError("semi-H-cordial construction needs a tree");
      return near ? near_semi_h_tree(g) : semi_h_tree(g);
    case LabelingKind::Family::ZeroMCordial:
      return zero_m(g);
    case LabelingKind::Family::HkCordial:
      if (kind.k != 2) throw PreconditionError("only k = 2 has constructions");
      if (is_complete(g)) return h2_cordial_complete(g.order());
      if (is_wheel(g)) return h2_cordial_wheel(g.order() - 1);
      throw PreconditionError("no H_2-cordial construction for this graph (complete graphs and wheels only)");
  }
  throw std::logic_error("unhandled labeling family");
}

int run_label(const LabelArgs& a, Io& io) {
  if (a.in.empty() == a.family.empty()) throw UsageError("label needs exactly one of --in or --family");
  if (!a.family.empty() && !a.n) throw UsageError("--family needs --n");
  const LabelingKind kind = parse_kind(a.kind);
  const Graph g = a.in.empty() ? family_graph(a.family, *a.n, a.seed) : read_any_graph(read_input(a.in, io));
  try {
    write_output(a.out, serialize_labeling(construct(kind, g, a.near)), io);
    return kOk;
  } catch (const PreconditionError& e) {
    io.err << "rejected";
    if (e.obstruction()) io.err << " (obstruction " << to_string(e.obstruction()->code) << ")";
    io.err << ": " << e.what() << "\n";
    return kRejected;
  }
}

struct VerifyArgs {
  std::string kind;
  std::optional<int> k;
  std::string in;
  bool json = false;
};

int run_verify(const VerifyArgs& a, Io& io) {
  const Labeling l = parse_labeling(read_input(a.in, io));
  std::optional<int> k = a.k;
  if (a.kind == "hk" && !k) {
    int max_abs = 1;
    for (Label x : l.labels()) max_abs = std::max(max_abs, std::abs(x));
    k = max_abs;
    io.err << "note: --k not given, using k = " << max_abs << " (largest |label|)\n";
  }
  const LabelingKind kind = parse_kind(a.kind, k);
  VerificationReport report;
  try {
    report = verify(l, kind);
  } catch (const AlphabetError& e) {
    io.err << "invalid: " << e.what() << "\n";
    return kNegative;
  }
  if (a.json) {
    io.out << nlohmann::json(report).dump(2) << "\n";
  } else {
    print_report(io.out, report);
  }
  return report.valid ? kOk : kNegative;
}

struct SearchArgs {
  std::string kind;
  std::optional<int> k;
  std::string in;
  std::optional<std::size_t> enumerate;
  bool canonical = false;
  bool symmetry = false;
  unsigned workers = 1;
  std::optional<std::uint64_t> budget;
  std::optional<double> time_limit;
  bool json = false;
};

int decision_code(Decision d) {
  switch (d) {
    case Decision::Found: return kOk;
    case Decision::Exhausted: return kNegative;
    case Decision::Undecided: return kUndecided;
  }
  return kUndecided;
}

int run_search(const SearchArgs& a, Io& io) {
  const Graph g = read_any_graph(read_input(a.in, io));
  SearchConfig cfg;
  cfg.kind = parse_kind(a.kind, a.k);
  cfg.canonical = a.canonical;
  cfg.workers = std::max(1u, a.workers);
  cfg.budget = a.budget;
  if (a.time_limit) {
    cfg.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*a.time_limit * 1000));
  }

  if (a.enumerate) {
    cfg.limit = *a.enumerate;
    const Enumeration e = enumerate(g, cfg);
    // Found: at least one witness; otherwise the status says whether the
    // empty list is conclusive.
    const Decision d = e.witnesses.empty() ? e.status : Decision::Found;
    if (a.json) {
      nlohmann::json j{{"kind", cfg.kind}, {"status", to_string(e.status)},
                       {"stats", stats_json(e.stats)}, {"note", e.note}};
      j["witnesses"] = nlohmann::json::array();
      for (const auto& w : e.witnesses) j["witnesses"].push_back(labeling_json(w));
      io.out << j.dump(2) << "\n";
    } else {
      io.out << "status: " << to_string(e.status) << " (" << e.witnesses.size() << " witnesses)\n";
      if (!e.note.empty()) io.out << "note: " << e.note << "\n";
      print_stats(io.out, e.stats);
      for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
        io.out << "# witness " << i + 1 << "\n" << serialize_labeling(e.witnesses[i]);
      }
    }
    return decision_code(d);
  }

  const SearchOutcome o = a.symmetry ? decide_with_symmetry(g, cfg) : decide(g, cfg);
  if (a.json) {
    nlohmann::json j{{"kind", cfg.kind}, {"decision", to_string(o.decision)},
                     {"stats", stats_json(o.stats)}, {"note", o.note}};
    j["witness"] = o.witness ? labeling_json(*o.witness) : nlohmann::json(nullptr);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "decision: " << to_string(o.decision) << "\n";
    if (!o.note.empty()) io.out << "note: " << o.note << "\n";
    print_stats(io.out, o.stats);
    if (o.witness) io.out << "# witness\n" << serialize_labeling(*o.witness);
  }
  return decision_code(o.decision);
}

struct CatalogArgs {
  std::string action;
  std::string name;
  bool dot = false;
  unsigned workers = 1;
  std::optional<double> time_limit;
};

void print_bundle(std::ostream& out, const CheckBundle& b) {
  out << b.entry << "\n";
  for (const auto& c : b.claims) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.claim << ": " << c.detail << "\n";
  }
}

int run_catalog(const CatalogArgs& a, Io& io) {
  CatalogOptions options;
  options.workers = std::max(1u, a.workers);
  if (a.time_limit) {
    options.search_time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*a.time_limit * 1000));
  }
  const bool needs_name = a.action == "show" || a.action == "check";
  if (needs_name == a.name.empty()) {
    throw UsageError("catalog " + a.action + (needs_name ? " needs an entry name" : " takes no name"));
  }

  if (a.action == "list") {
    for (const auto& e : catalog_entries()) io.out << e.name << "\t" << e.provenance << "\n";
    return kOk;
  }
  if (a.action == "show") {
    const CatalogEntry& e = catalog_entry(a.name);
    if (a.dot) {
      io.out << (e.labeling ? to_dot(*e.labeling, e.name) : to_dot(e.graph, e.name));
      return kOk;
    }
    io.out << "# " << e.name << ": " << e.description << "\n";
    io.out << (e.labeling ? serialize_labeling(*e.labeling) : serialize_graph(e.graph));
    return kOk;
  }
  if (a.action == "check") {
    const CheckBundle b = check(a.name, options);
    print_bundle(io.out, b);
    return b.all_pass() ? kOk : kNegative;
  }
  if (a.action == "check-all") {
    bool all = true;
    for (const auto& b : check_all(options)) {
      print_bundle(io.out, b);
      all = all && b.all_pass();
    }
    return all ? kOk : kNegative;
  }
  throw UsageError("unknown catalog action '" + a.action + "'");
}

int run_hamiltonian(const std::string& in, Io& io) {
  const bool ham = is_hamiltonian(read_any_graph(read_input(in, io)));
  io.out << (ham ? "hamiltonian" : "not hamiltonian") << "\n";
  return ham ? kOk : kNegative;
}

int run_export_dot(const std::string& in, const std::string& name, Io& io) {
  const std::string text = read_input(in, io);
  try {
    io.out << to_dot(parse_labeling(text), name);
  } catch (const ParseError&) {
    io.out << to_dot(parse_graph(text), name);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Construct, verify and search cordial-type edge labelings"};
  app.name("hcordial");
  app.require_subcommand(1, 1);

  const std::vector<std::string> kinds_all{"h", "semi-h", "zero-m", "hk", "h2"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family graph in the edge-list format");
  gen_cmd->add_option("--family", gen.family, "complete|wheel|cycle|path|star|tree")
      ->required()
      ->check(CLI::IsMember({"complete", "wheel", "cycle", "path", "star", "tree"}));
  gen_cmd->add_option("--n", gen.n, "order (wheel: rim size, star: leaves)")->required();
  gen_cmd->add_option("--seed", gen.seed, "seed for --family tree");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  LabelArgs label;
  auto* label_cmd = app.add_subcommand("label", "Run the constructor for a kind");
  label_cmd->add_option("--kind", label.kind)->required()->check(CLI::IsMember({"h", "semi-h", "zero-m", "h2"}));
  label_cmd->add_option("--in", label.in, "graph file, '-' for stdin");
  label_cmd->add_option("--family", label.family)
      ->check(CLI::IsMember({"complete", "wheel", "cycle", "path", "star", "tree"}));
  label_cmd->add_option("--n", label.n);
  label_cmd->add_option("--seed", label.seed);
  label_cmd->add_flag("--near", label.near, "semi-h on an even tree: best labeling with |v(1)-v(-1)| = 2");
  label_cmd->add_option("--out", label.out);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a labeled graph against a kind");
  verify_cmd->add_option("--kind", ver.kind)->required()->check(CLI::IsMember(kinds_all));
  verify_cmd->add_option("--k", ver.k)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--in", ver.in, "labeled graph file, '-' for stdin")->required();
  verify_cmd->add_flag("--json", ver.json);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for a labeling of a kind");
  search_cmd->add_option("--kind", search.kind)->required()->check(CLI::IsMember(kinds_all));
  search_cmd->add_option("--k", search.k)->check(CLI::PositiveNumber);
  search_cmd->add_option("--in", search.in)->required();
  search_cmd->add_option("--enumerate", search.enumerate, "list up to LIMIT labelings")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--canonical", search.canonical, "return the lexicographically smallest witness");
  search_cmd->add_flag("--symmetry", search.symmetry, "fix the sign of the first edge");
  search_cmd->add_option("--workers", search.workers)->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", search.budget, "maximum search nodes");
  search_cmd->add_option("--time-limit", search.time_limit, "seconds")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", search.json);

  CatalogArgs cat;
  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in counterexample graphs");
  catalog_cmd->add_option("action", cat.action, "list|show|check|check-all")
      ->required()
      ->check(CLI::IsMember({"list", "show", "check", "check-all"}));
  catalog_cmd->add_option("name", cat.name);
  catalog_cmd->add_flag("--dot", cat.dot, "show: print DOT");
  catalog_cmd->add_option("--workers", cat.workers)->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--time-limit", cat.time_limit, "seconds for the search claim")
      ->check(CLI::PositiveNumber);

  std::string ham_in;
  auto* ham_cmd = app.add_subcommand("hamiltonian", "Exit 0 iff the graph has a Hamiltonian cycle");
  ham_cmd->add_option("--in", ham_in)->required();

  std::string dot_in;
  std::string dot_name = "G";
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output for a labeled graph");
  dot_cmd->add_option("--in", dot_in)->required();
  dot_cmd->add_option("--name", dot_name);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << message << "\n";
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, io);
    if (*label_cmd) return run_label(label, io);
    if (*verify_cmd) return run_verify(ver, io);
    if (*search_cmd) return run_search(search, io);
    if (*catalog_cmd) return run_catalog(cat, io);
    if (*ham_cmd) return run_hamiltonian(ham_in, io);
    if (*dot_cmd) return run_export_dot(dot_in, dot_name, io);
  } catch (const std::invalid_argument& e) {
    // ParseError, GraphError, LabelingError, UnknownEntry
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hcordial::cli
