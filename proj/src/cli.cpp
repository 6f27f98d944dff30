#include "turanlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/decomposition.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/subgraph.hpp"
#include "turanlab/suite.hpp"
#include "turanlab/symmetry.hpp"

namespace turanlab {

namespace {

using json = nlohmann::json;

int parse_count(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
    throw std::invalid_argument(std::string(what) + " needs a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

std::vector<int> vertex_list(Bits s) { return vertices_of(s); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<Graph> resolve_graphs(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return {parse_expression(spec).eval()};
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "path") return {path_graph(parse_count(body, "path:"))};
  if (kind == "cycle") {
    const int l = parse_count(body, "cycle:");
    if (l < 3) throw std::invalid_argument("cycle: needs length >= 3");
    return {cycle_graph(l)};
  }
  if (kind == "clique") return {complete_graph(parse_count(body, "clique:"))};
  if (kind == "g6") return {parse_graph6(body)};
  if (kind == "expr") return {parse_expression(body).eval()};
  if (kind == "family") return named_family(body).members;
  if (kind == "file") {
    std::ifstream in{std::string(body)};
    if (!in) throw std::invalid_argument("cannot open '" + std::string(body) + "'");
    std::vector<Graph> graphs = read_graph6_lines(in);
    if (graphs.empty()) throw std::invalid_argument("no graphs in '" + std::string(body) + "'");
    return graphs;
  }
  throw std::invalid_argument("unknown graph kind '" + std::string(kind) + ":'");
}

namespace {

std::vector<Graph> resolve_all(const std::vector<std::string>& specs) {
  std::vector<Graph> out;
  for (const std::string& s : specs) {
    std::vector<Graph> g = resolve_graphs(s);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

ForbiddenFamily resolve_family(const std::vector<std::string>& specs) {
  std::string name;
  for (const std::string& s : specs) name += (name.empty() ? "" : " ") + s;
  return ForbiddenFamily(resolve_all(specs), name);
}

// Shared state of one invocation.
struct Session {
  Session(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  bool structured = false;
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<std::int64_t> budget_ms;

  SearchBudget budget() const {
    SearchBudget b = SearchBudget::from_environment();
    if (budget_ms) b.max_ms = *budget_ms;
    return b;
  }
  void record(const json& j) const { out << j.dump() << '\n'; }
};

int worst(int a, int b) {
  // false beats undecided beats ok
  if (a == exit_false || b == exit_false) return exit_false;
  if (a == exit_undecided || b == exit_undecided) return exit_undecided;
  return exit_ok;
}

int exit_for(Decision d) {
  return d == Decision::yes ? exit_ok : d == Decision::no ? exit_false : exit_undecided;
}

// construct ----------------------------------------------------------------

int cmd_construct(const Session& s, const std::string& spec, const std::string& format) {
  for (const Graph& g : resolve_graphs(spec)) {
    if (s.structured) {
      json j{{"graph6", write_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
      if (format == "edges") j["edge_list"] = edges(g);
      s.record(j);
    } else if (format == "g6") {
      s.out << write_graph6(g) << '\n';
    } else if (format == "edges") {
      s.out << g.order() << ' ' << g.edge_count() << '\n';
      for (auto [u, v] : edges(g)) s.out << u << ' ' << v << '\n';
    } else {
      s.out << g.order() << ' ' << g.edge_count() << ' ' << write_graph6(g) << '\n';
    }
  }
  return exit_ok;
}

// check --------------------------------------------------------------------

int cmd_check(const Session& s, const std::string& host_spec, const std::vector<std::string>& forbid) {
  const ForbiddenFamily fam = resolve_family(forbid);
  int code = exit_ok;
  for (const Graph& host : resolve_graphs(host_spec)) {
    const FreenessCheck c = check_family_free(host, fam, s.budget());
    const std::string g6 = write_graph6(host);
    const char* verdict = c.free == Decision::yes ? "free" : c.free == Decision::no ? "contains" : "undecided";
    if (s.structured) {
      json j{{"graph6", g6}, {"verdict", verdict}, {"nodes", c.nodes}};
      if (c.free == Decision::no) {
        j["member"] = c.member;
        j["witness"] = c.witness;
      }
      s.record(j);
    } else {
      s.out << verdict << ' ' << g6;
      if (c.free == Decision::no) {
        s.out << " member=" << c.member << " witness=";
        for (std::size_t i = 0; i < c.witness.size(); ++i) s.out << (i ? "," : "") << c.witness[i];
      }
      s.out << '\n';
    }
    code = worst(code, c.free == Decision::yes ? exit_ok : c.free == Decision::no ? exit_false : exit_undecided);
  }
  return code;
}

// invariants ---------------------------------------------------------------

int cmd_invariants(const Session& s, const std::vector<std::string>& specs, bool as_family) {
  const std::vector<Graph> graphs = resolve_all(specs);
  for (const Graph& g : graphs) {
    const bool bip = is_bipartite(g);
    const int components = static_cast<int>(connected_components(g).size());
    std::optional<int> q;
    if (bip) q = independent_covering_order(g);
    if (s.structured) {
      json j{{"graph6", write_graph6(g)}, {"order", g.order()},          {"edges", g.edge_count()},
             {"clique", clique_number(g)}, {"chromatic", chromatic_number(g)}, {"covering", covering_number(g)},
             {"components", components},   {"bipartite", bip}};
      j["independent_covering"] = q ? json(*q) : json(nullptr);
      s.record(j);
    } else {
      s.out << write_graph6(g) << " order=" << g.order() << " edges=" << g.edge_count()
            << " clique=" << clique_number(g) << " chromatic=" << chromatic_number(g)
            << " covering=" << covering_number(g) << " independent_covering=" << (q ? std::to_string(*q) : "-")
            << " components=" << components << '\n';
    }
  }
  if (as_family) {
    const ForbiddenFamily fam(graphs);
    const std::optional<int> qb = family_q_bipartite(fam);
    if (s.structured) {
      s.record(json{{"family_size", fam.size()},
                    {"r", fam.r()},
                    {"t", fam.t()},
                    {"q", fam.q()},
                    {"q_bipartite", qb ? json(*qb) : json(nullptr)}});
    } else {
      s.out << "family size=" << fam.size() << " r=" << fam.r() << " t=" << fam.t() << " q=" << fam.q()
            << " q_bipartite=" << (qb ? std::to_string(*qb) : "-") << '\n';
    }
  }
  return exit_ok;
}

// decompose ----------------------------------------------------------------

int cmd_decompose(const Session& s, const std::vector<std::string>& specs, int max_order, bool covering) {
  const ForbiddenFamily fam = resolve_family(specs);
  if (covering) {
    const std::vector<std::string> b = covering_family(fam);
    if (s.structured) s.record(json{{"covering_family", b}, {"q", fam.q()}});
    else
      for (const std::string& g6 : b) s.out << g6 << '\n';
    return exit_ok;
  }
  const DecompositionResult res = decomposition_family(fam, {max_order, s.threads});
  if (s.structured) {
    s.record(json{{"members", res.minimal_members},
                  {"search_bound", res.search_bound},
                  {"complete", res.complete},
                  {"contains_bipartite", res.contains_bipartite},
                  {"candidates", res.candidates_examined}});
  } else {
    for (const std::string& g6 : res.minimal_members) s.out << g6 << '\n';
    s.out << "complete=" << yes_no(res.complete) << " bound=" << res.search_bound
          << " bipartite_member=" << yes_no(res.contains_bipartite) << '\n';
  }
  if (!res.contains_bipartite && res.complete)
    s.err << "note: no bipartite graph among the minimal members\n";
  return res.complete ? exit_ok : exit_undecided;
}

// symmetry -----------------------------------------------------------------

json family_json(const SymmetricFamily& fam) {
  json blocks = json::array();
  for (std::size_t j = 0; j < fam.blocks.size(); ++j)
    blocks.push_back(json{{"vertices", vertex_list(fam.blocks[j])}, {"image", fam.isos[j]}});
  return blocks;
}

int cmd_symmetry(const Session& s, const std::string& spec, int block_order, int min_blocks,
                 const std::vector<int>& klass) {
  int code = exit_ok;
  for (const Graph& g : resolve_graphs(spec)) {
    const std::string g6 = write_graph6(g);
    if (!klass.empty()) {
      const SymmetryClassResult res = in_symmetry_class(g, klass[0], klass[1], s.budget());
      if (s.structured) {
        json j{{"graph6", g6}, {"member", to_string(res.member)}};
        if (res.certificate) {
          json parts = json::array();
          for (std::size_t i = 0; i < res.certificate->parts.size(); ++i) {
            json blocks = json::array();
            for (Bits b : res.certificate->blocks[i]) blocks.push_back(vertex_list(b));
            parts.push_back(json{{"vertices", vertex_list(res.certificate->parts[i])}, {"blocks", blocks}});
          }
          j["omitted"] = vertex_list(res.certificate->omitted);
          j["parts"] = parts;
        }
        s.record(j);
      } else {
        s.out << "member=" << to_string(res.member) << ' ' << g6 << '\n';
        if (res.certificate) s.out << describe(*res.certificate);
      }
      code = worst(code, exit_for(res.member));
    } else if (block_order == 1 && min_blocks <= 1) {
      const std::vector<Bits> classes = find_symmetric_vertices(g);
      if (s.structured) {
        json cls = json::array();
        for (Bits c : classes) cls.push_back(vertex_list(c));
        s.record(json{{"graph6", g6}, {"classes", cls}});
      } else {
        s.out << g6;
        for (Bits c : classes) s.out << ' ' << format_vertex_set(c);
        s.out << '\n';
      }
    } else {
      const SymmetricSearch res = find_symmetric_families(g, block_order, min_blocks, s.budget());
      if (s.structured) {
        json j{{"graph6", g6}, {"found", to_string(res.found)}, {"sets_examined", res.sets_examined}};
        if (res.family) j["blocks"] = family_json(*res.family);
        s.record(j);
      } else {
        s.out << "found=" << to_string(res.found) << ' ' << g6;
        if (res.family) s.out << " blocks=" << res.family->blocks.size();
        s.out << '\n';
        if (res.family) s.out << describe(*res.family);
      }
      code = worst(code, exit_for(res.found));
    }
  }
  return code;
}

// shape --------------------------------------------------------------------

int cmd_shape(const Session& s, const std::string& spec, int q, int r, int t) {
  int code = exit_ok;
  for (const Graph& g : resolve_graphs(spec)) {
    const std::optional<ShapeCertificate> cert = verify_extremal_shape(g, q, r, t);
    const std::string g6 = write_graph6(g);
    if (s.structured) {
      json j{{"graph6", g6}, {"shaped", cert.has_value()}};
      if (cert) {
        json parts = json::array();
        for (std::size_t i = 0; i < cert->parts.size(); ++i)
          parts.push_back(json{{"vertices", vertex_list(cert->parts[i])}, {"core", vertex_list(cert->cores[i])}});
        j["w"] = vertex_list(cert->w);
        j["parts"] = parts;
      }
      s.record(j);
    } else {
      s.out << "shaped=" << yes_no(cert.has_value()) << ' ' << g6 << '\n';
      if (cert) s.out << describe(*cert);
    }
    code = worst(code, cert ? exit_ok : exit_false);
  }
  return code;
}

// extremal -----------------------------------------------------------------

int cmd_extremal(const Session& s, int n, const std::vector<std::string>& forbid, bool labeled) {
  const ForbiddenFamily fam = resolve_family(forbid);
  const ExtremalReport rep = labeled ? enumerate_extremal_labeled(n, fam) : enumerate_extremal(n, fam, {s.threads});
  if (s.structured) {
    s.record(json{{"n", rep.n},
                  {"ex", rep.ex},
                  {"count", rep.extremal_set.size()},
                  {"extremal", rep.extremal_set},
                  {"method", to_string(rep.method)}});
  } else {
    s.out << rep.n << ' ' << rep.ex << ' ' << rep.extremal_set.size() << '\n';
    for (const std::string& g6 : rep.extremal_set) s.out << g6 << '\n';
  }
  return exit_ok;
}

// verify-suite -------------------------------------------------------------

int cmd_suite(const Session& s, const std::string& name, int nmax, int count) {
  SuiteOptions opt;
  opt.nmax = nmax;
  opt.count = count;
  opt.seed = s.seed;
  opt.threads = s.threads;
  opt.budget = s.budget();
  const int failures = run_suite(name, opt, [&](const SuiteLine& line) {
    if (s.structured) s.record(json{{"pass", line.pass}, {"name", line.name}, {"detail", line.detail}});
    else s.out << (line.pass ? "PASS " : "FAIL ") << line.name << "  " << line.detail << '\n';
  });
  return failures == 0 ? exit_ok : exit_false;
}

constexpr const char* kGraphHelp =
    "graph: path:L | cycle:L | clique:K | g6:<graph6> | expr:<expression> | family:<name>(p,..) | file:<path> | "
    "<expression>";

std::string registry_help() {
  std::ostringstream os;
  os << "Named constructions (family:<name>(params)):\n";
  for (const NamedEntry& e : named_registry()) os << "  " << e.signature << "  " << e.description << '\n';
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan-type extremal graph toolkit", "turanlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(std::string(kGraphHelp) + "\n" + registry_help());

  Session session{out, err};
  std::int64_t budget_ms = -1;
  app.add_option("--seed", session.seed, "seed for randomized suites")->default_val(0);
  app.add_option("--threads", session.threads, "worker threads")->default_val(1)->check(CLI::Range(1, 256));
  app.add_option("--budget-ms", budget_ms, "time limit per search (overrides TURANLAB_BUDGET_MS)");
  app.add_flag("--structured", session.structured, "one JSON object per output line");

  std::string spec, format = "g6", suite_name;
  std::vector<std::string> specs, forbid;
  int n = 0, q = 1, r = 2, t = 1, block_order = 1, min_blocks = 1, max_order = 0, nmax = 8, count = 0;
  bool labeled = false, covering = false, as_family = false;
  std::vector<int> klass;

  auto* construct = app.add_subcommand("construct", "evaluate a construction and print it");
  construct->add_option("graph", spec, kGraphHelp)->required();
  construct->add_option("--out", format, "g6 | edges | summary")->check(CLI::IsMember({"g6", "edges", "summary"}));

  auto* check = app.add_subcommand("check", "is the host free of every forbidden graph");
  check->add_option("host", spec, kGraphHelp)->required();
  check->add_option("--forbid", forbid, "forbidden graph(s)")->required();

  auto* invariants = app.add_subcommand("invariants", "clique, chromatic and covering numbers");
  invariants->add_option("graphs", specs, kGraphHelp)->required();
  invariants->add_flag("--family", as_family, "also report r, t and q of the graphs taken as one family");

  auto* decompose = app.add_subcommand("decompose", "minimal decomposition family of a forbidden family");
  decompose->add_option("forbid", specs, kGraphHelp)->required();
  decompose->add_option("--max-order", max_order, "candidate order cap (default: largest member order)")
      ->check(CLI::NonNegativeNumber);
  decompose->add_flag("--covering", covering, "print the covering family instead");

  auto* symmetry = app.add_subcommand("symmetry", "symmetric vertices, symmetric blocks, class membership");
  symmetry->add_option("graph", spec, kGraphHelp)->required();
  symmetry->add_option("--block-order", block_order, "order of the blocks sought")->check(CLI::Range(1, 64));
  symmetry->add_option("--min-blocks", min_blocks, "number of blocks required")->check(CLI::Range(1, 64));
  symmetry->add_option("--class", klass, "r,c: membership in the symmetric class")->expected(2)->delimiter(',');

  auto* shape = app.add_subcommand("shape", "find a W + S_1..S_r shape certificate");
  shape->add_option("graph", spec, kGraphHelp)->required();
  shape->add_option("--q", q, "|W| + 1")->check(CLI::Range(1, 64));
  shape->add_option("--r", r, "number of parts")->check(CLI::Range(1, 64));
  shape->add_option("--t", t, "defect allowance: parts may miss t^2 core vertices")->check(CLI::Range(0, 8));

  auto* extremal = app.add_subcommand("extremal", "exhaustive ex(n, F) and its extremal graphs");
  extremal->add_option("--n", n, "order")->required()->check(CLI::Range(0, kMaxExhaustiveOrder));
  extremal->add_option("--forbid", forbid, "forbidden graph(s)")->required();
  extremal->add_flag("--labeled", labeled, "use the labeled brute-force engine (n <= 6)");

  auto* suite = app.add_subcommand("verify-suite", "run a self-checking suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  suite->add_option("suite", suite_name, "suite name")->required()->check(CLI::IsMember(names));
  suite->add_option("--nmax", nmax, "largest order for exhaustive suites")->check(CLI::Range(1, kMaxExhaustiveOrder));
  suite->add_option("--count", count, "instances for randomized suites")->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"turanlab"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  if (budget_ms >= 0) session.budget_ms = budget_ms;

  try {
    if (*construct) return cmd_construct(session, spec, format);
    if (*check) return cmd_check(session, spec, forbid);
    if (*invariants) return cmd_invariants(session, specs, as_family);
    if (*decompose) return cmd_decompose(session, specs, max_order, covering);
    if (*symmetry) return cmd_symmetry(session, spec, block_order, min_blocks, klass);
    if (*shape) return cmd_shape(session, spec, q, r, t);
    if (*extremal) {
      if (labeled && n > kMaxLabeledOrder) throw std::invalid_argument("--labeled supports n <= 6");
      return cmd_extremal(session, n, forbid, labeled);
    }
    if (*suite) return cmd_suite(session, suite_name, nmax, count);
  } catch (const std::invalid_argument& e) {
    err << "turanlab: " << e.what() << '\n';
    return exit_usage;
  } catch (const CapacityError& e) {
    err << "turanlab: " << e.what() << '\n';
    return exit_usage;
  } catch (const Graph6Error& e) {
    err << "turanlab: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace turanlab
