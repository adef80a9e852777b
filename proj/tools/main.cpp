// ghom: command-line front end. Every subcommand reads JSON files, calls one
// library operation and writes JSON (or DOT) to stdout.
//
// Exit codes: 0 success / true, 1 property failure / false, 2 usage or input
// error, 3 budget exhausted or search inconclusive.

#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghom/error.hpp"
#include "ghom/exponential.hpp"
#include "ghom/fold.hpp"
#include "ghom/groupoid.hpp"
#include "ghom/homotopy.hpp"
#include "ghom/io.hpp"
#include "ghom/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace ghom;

namespace {

constexpr int kOk = 0, kFalse = 1, kUsage = 2, kUnknown = 3;

struct Globals {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::size_t max_vertices = 0;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return io::read_file(path);
}

GraphRef load_graph(const std::string& path) { return share(io::parse_graph(slurp(path))); }

// Graph references inside map / walk files are paths relative to that file.
io::GraphResolver resolver_for(const std::string& file) {
  const fs::path dir = file == "-" ? fs::path(".") : fs::path(file).parent_path();
  return [dir](const std::string& ref) {
    const fs::path p = fs::path(ref).is_absolute() ? fs::path(ref) : dir / ref;
    return load_graph(fs::exists(p) ? p.string() : ref);
  };
}

json parse(const std::string& text) { return json::parse(text); }

json map_json(const VertexMap& f) {
  json m = json::object();
  for (Vertex v = 0; v < f.source->order(); ++v) m[f.source->name(v)] = f.target->name(f.image[v]);
  return m;
}

json walk_json(const Walk& w) {
  json out = json::array();
  for (Vertex v : w.vertices) out.push_back(w.graph->name(v));
  return out;
}

SearchLimits limits(const Globals& g) {
  SearchLimits l;
  if (g.budget) l.state_cap = *g.budget;
  return l;
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

int emit_graph(const Globals& g, const Graph& graph, std::string_view name) {
  std::cout << (g.format == "dot" ? io::emit_dot(graph, name) : io::emit_graph(graph));
  return kOk;
}

int json_only(const Globals& g, const json& j) {
  if (g.format != "json") throw CLI::ValidationError("--format", "this subcommand only writes json");
  print(j);
  return kOk;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return kOk;
    case Verdict::NotEquivalent: return kFalse;
    default: return kUnknown;
  }
}

// Errors in the caller's data or request exit 2; violated mathematical
// preconditions (not a morphism, not a fold, ...) exit 1.
int error_exit(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotMorphism:
    case ErrorCode::NotAdjacent:
    case ErrorCode::NotHomotopic:
    case ErrorCode::Precondition:
    case ErrorCode::InvalidFold:
    case ErrorCode::NotPrunable:
      return kFalse;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy computations on finite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", G.seed, "Seed for randomized choices");
  app.add_option("--budget", G.budget, "State cap for bounded searches");
  app.add_option("--max-vertices", G.max_vertices, "Instance size for verify (0: suite default)");

  std::function<int()> action;
  std::string a, b, c, d;
  auto two_graphs = [&](CLI::App* s) {
    s->add_option("G", a, "Graph JSON file")->required();
    s->add_option("H", b, "Graph JSON file")->required();
  };

  auto* product_cmd = app.add_subcommand("product", "Categorical product G x H");
  two_graphs(product_cmd);
  product_cmd->callback([&] {
    action = [&] { return emit_graph(G, product(*load_graph(a), *load_graph(b)), "product"); };
  });

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Disjoint union G + H");
  two_graphs(coproduct_cmd);
  coproduct_cmd->callback([&] {
    action = [&] { return emit_graph(G, coproduct(*load_graph(a), *load_graph(b)), "coproduct"); };
  });

  auto* exp_cmd = app.add_subcommand("exp", "Exponential graph H^G, realized");
  two_graphs(exp_cmd);
  exp_cmd->callback([&] {
    action = [&] {
      const auto e = realize_exponential(load_graph(a), load_graph(b));
      return emit_graph(G, *e.realized, "exp");
    };
  });

  auto* homs_cmd = app.add_subcommand("homs", "All morphisms G -> H");
  two_graphs(homs_cmd);
  homs_cmd->callback([&] {
    action = [&] {
      const auto maps = enumerate_homs(load_graph(a), load_graph(b));
      json list = json::array();
      for (const auto& f : maps) list.push_back(map_json(f));
      return json_only(G, {{"count", maps.size()}, {"maps", list}});
    };
  });

  auto* hom_graph_cmd = app.add_subcommand("hom-graph", "Subgraph of H^G on the morphisms");
  two_graphs(hom_graph_cmd);
  hom_graph_cmd->callback([&] {
    action = [&] { return emit_graph(G, hom_graph(load_graph(a), load_graph(b)), "homs"); };
  });

  bool witness = false;
  auto* homotopic_cmd = app.add_subcommand("homotopic", "Is f homotopic to g?");
  two_graphs(homotopic_cmd);
  homotopic_cmd->add_option("f", c, "Vertex map JSON file")->required();
  homotopic_cmd->add_option("g", d, "Vertex map JSON file")->required();
  homotopic_cmd->add_flag("--witness", witness, "Include a shortest homotopy");
  homotopic_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph(a), h = load_graph(b);
      const auto f1 = io::parse_vertex_map(slurp(c), g, h, resolver_for(c));
      const auto f2 = io::parse_vertex_map(slurp(d), g, h, resolver_for(d));
      const auto hm = are_homotopic(f1, f2);
      json out{{"homotopic", hm.has_value()}};
      if (hm) out["length"] = hm->length();
      if (hm && witness) out["witness"] = parse(io::emit_homotopy(*hm))["frames"];
      json_only(G, out);
      return hm ? kOk : kFalse;
    };
  });

  auto* spider_cmd = app.add_subcommand("spider", "Decompose an adjacent pair into spider moves");
  spider_cmd->add_option("f", c, "Vertex map JSON file")->required();
  spider_cmd->add_option("g", d, "Vertex map JSON file")->required();
  spider_cmd->callback([&] {
    action = [&] {
      const auto f1 = io::parse_vertex_map(slurp(c), nullptr, nullptr, resolver_for(c));
      const auto f2 = io::parse_vertex_map(slurp(d), f1.source, f1.target, resolver_for(d));
      const auto chain = compact_chain(spider_decompose(f1, f2));
      json moves = json::array();
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto m = is_spider_pair(chain[i], chain[i + 1]);
        moves.push_back({{"at", m ? f1.source->name(m->at) : ""}, {"map", map_json(chain[i + 1])}});
      }
      return json_only(G, {{"start", map_json(f1)}, {"moves", moves}});
    };
  });

  auto* stiff_cmd = app.add_subcommand("stiff", "Does G admit no fold?");
  stiff_cmd->add_option("G", a, "Graph JSON file")->required();
  stiff_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph(a);
      json folds = json::array();
      for (const auto& f : find_folds(g)) folds.push_back(f.describe());
      json_only(G, {{"stiff", folds.empty()}, {"folds", folds}});
      return folds.empty() ? kOk : kFalse;
    };
  });

  std::string policy = "first";
  bool trace = false;
  auto* pleat_cmd = app.add_subcommand("pleat", "Fold until stiff");
  pleat_cmd->add_option("G", a, "Graph JSON file")->required();
  pleat_cmd->add_option("--policy", policy, "Fold choice")->check(CLI::IsMember({"first", "random"}));
  pleat_cmd->add_flag("--trace", trace, "Report the fold sequence and the retraction");
  pleat_cmd->callback([&] {
    action = [&] {
      const auto r = pleat(load_graph(a), policy == "first" ? FoldPolicy::First : FoldPolicy::SeededRandom,
                           G.seed.value_or(0));
      if (!trace) return emit_graph(G, *r.pleat, "pleat");
      json folds = json::array();
      for (const auto& f : r.fold_sequence) folds.push_back(f.describe());
      if (G.format == "dot") {
        for (const auto& f : folds) std::cout << "// fold " << f.get<std::string>() << "\n";
        return emit_graph(G, *r.pleat, "pleat");
      }
      print({{"pleat", parse(io::emit_graph(*r.pleat))}, {"folds", folds}, {"retraction", map_json(r.embedding)}});
      return kOk;
    };
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Are G and H homotopy equivalent?");
  two_graphs(equiv_cmd);
  equiv_cmd->callback([&] {
    action = [&] {
      const auto e = homotopy_equivalent(load_graph(a), load_graph(b));
      json out{{"equivalent", e.equivalent}};
      if (e.forward) out["forward"] = map_json(*e.forward);
      if (e.backward) out["backward"] = map_json(*e.backward);
      json_only(G, out);
      return e.equivalent ? kOk : kFalse;
    };
  });

  auto* duplicate_cmd = app.add_subcommand("duplicate", "Add a twin of vertex v");
  duplicate_cmd->add_option("G", a, "Graph JSON file")->required();
  duplicate_cmd->add_option("v", c, "Vertex name")->required();
  duplicate_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph(a);
      return emit_graph(G, *duplicate_vertex(g, g->index(c)).hat, "duplicate");
    };
  });

  auto* reduce_cmd = app.add_subcommand("walk-reduce", "Prune a walk to its normal form");
  reduce_cmd->add_option("G", a, "Graph JSON file")->required();
  reduce_cmd->add_option("walk", c, "Walk JSON file")->required();
  reduce_cmd->callback([&] {
    action = [&] {
      const auto w = io::parse_walk(slurp(c), load_graph(a), resolver_for(c));
      std::cout << io::emit_walk(prune_fully(w));
      return kOk;
    };
  });

  auto* walk_equiv_cmd = app.add_subcommand("walk-equiv", "Are two walks homotopic rel endpoints?");
  walk_equiv_cmd->add_option("G", a, "Graph JSON file")->required();
  walk_equiv_cmd->add_option("a", c, "Walk JSON file")->required();
  walk_equiv_cmd->add_option("b", d, "Walk JSON file")->required();
  walk_equiv_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph(a);
      const auto w1 = io::parse_walk(slurp(c), g, resolver_for(c));
      const auto w2 = io::parse_walk(slurp(d), g, resolver_for(d));
      const auto r = walks_equivalent(w1, w2, limits(G));
      static const char* kinds[] = {"start", "prune", "unprune", "spider"};
      json steps = json::array();
      for (const auto& s : r.witness)
        steps.push_back({{"step", kinds[static_cast<int>(s.kind)]}, {"vertices", walk_json(s.walk)}});
      json_only(G, {{"verdict", std::string(to_string(r.verdict))},
                    {"compared_length", r.compared_length},
                    {"visited", r.visited},
                    {"witness", steps}});
      return verdict_exit(r.verdict);
    };
  });

  std::string base;
  std::size_t max_len = 8;
  auto* pi1_cmd = app.add_subcommand("pi1", "Probe closed walks at a base vertex");
  pi1_cmd->add_option("G", a, "Graph JSON file")->required();
  pi1_cmd->add_option("--base", base, "Base vertex (default: first)");
  pi1_cmd->add_option("--max-len", max_len, "Longest walk examined");
  pi1_cmd->callback([&] {
    action = [&] {
      const auto g = load_graph(a);
      if (g->order() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
      const Vertex v = base.empty() ? 0 : g->index(base);
      const auto p = fundamental_group_probe(g, v, max_len, limits(G));
      json classes = json::array();
      for (const auto& k : p.classes) classes.push_back(walk_json(k.representative));
      return json_only(G, {{"base", g->name(v)},
                           {"max_len", max_len},
                           {"classes", classes},
                           {"walks_examined", p.walks_examined},
                           {"saturated", p.saturated},
                           {"uncertified_splits", p.uncertified_splits}});
    };
  });

  bool all = false, serial = false;
  std::vector<std::string> suites;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("suite", suites, "Suite names");
  verify_cmd->add_flag("--all", all, "Run every suite");
  verify_cmd->add_flag("--serial", serial, "Single-threaded reference run");
  verify_cmd->callback([&] {
    action = [&] {
      if (all) suites = suite_names();
      if (suites.empty()) throw CLI::ValidationError("suite", "name a suite or pass --all");
      bool failed = false, exhausted = false;
      for (const auto& name : suites) {
        SuiteOptions o;
        o.max_vertices = G.max_vertices;
        o.seed = G.seed.value_or(1);
        o.execution = serial ? Execution::Serial : Execution::Parallel;
        o.limits = limits(G);
        const auto r = run_suite(name, o);
        std::cout << report_json(r) << "\n";
        std::cerr << name << ": " << r.instances << " instances, " << r.failures.size() << " failures, "
                  << r.wall_seconds << " s\n";
        failed |= !r.passed();
        exhausted |= r.budget_exhausted > 0;
      }
      return failed ? kFalse : exhausted ? kUnknown : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
