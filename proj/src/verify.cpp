#include "ghom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include <json.hpp>

#include "ghom/enumerate.hpp"
#include "ghom/exponential.hpp"
#include "ghom/fold.hpp"
#include "ghom/groupoid.hpp"
#include "ghom/homotopy.hpp"
#include "ghom/io.hpp"
#include "ghom/isomorphism.hpp"

namespace ghom {

namespace {

using json = nlohmann::ordered_json;

enum class Outcome { Pass, Fail, Budget };

struct InstanceResult {
  Outcome outcome = Outcome::Pass;
  std::string reason;
  json data;
};

struct Instance {
  std::string key;
  std::function<InstanceResult()> check;
};

InstanceResult fail(std::string reason, json data = json::object()) {
  return {Outcome::Fail, std::move(reason), std::move(data)};
}

json graph_json(const Graph& g) { return json::parse(io::emit_graph(g)); }

json map_json(const VertexMap& f) { return json::parse(io::emit_vertex_map(f)); }

json walk_json(const Walk& w) {
  json doc = json::parse(io::emit_walk(w));
  doc["graph"] = graph_json(*w.graph);
  return doc;
}

json homotopy_json(const Homotopy& h) { return json::parse(io::emit_homotopy(h)); }

std::string key(std::string_view prefix, std::uint64_t a, std::uint64_t b = 0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*s%02llu#%06llu", static_cast<int>(prefix.size()), prefix.data(),
                static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
  return buf;
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

struct PoolEntry {
  std::string key;
  GraphRef graph;
  std::size_t n;
  std::uint64_t index;  // position in GraphFamily(n)
};

std::vector<PoolEntry> pool(std::size_t max_vertices, bool loops, bool drop_isolated) {
  std::vector<PoolEntry> out;
  if (max_vertices > kMaxEnumeratedVertices) {
    throw Error(ErrorCode::TooLarge, "graph enumeration is capped at " +
                                         std::to_string(kMaxEnumeratedVertices) + " vertices");
  }
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    GraphFamily fam(n, loops);
    for (std::uint64_t k = 0; k < fam.size(); ++k) {
      Graph g = fam.at(k);
      if (drop_isolated && !isolated_vertices(g).empty()) continue;
      out.push_back({key("n", n, k), share(std::move(g)), n, k});
    }
  }
  return out;
}

std::vector<Instance> pairs(const std::vector<PoolEntry>& p,
                            const std::function<InstanceResult(const GraphRef&, const GraphRef&)>& f) {
  std::vector<Instance> out;
  out.reserve(p.size() * p.size());
  for (const auto& a : p) {
    for (const auto& b : p) {
      GraphRef g = a.graph, h = b.graph;
      out.push_back({a.key + "|" + b.key, [f, g, h] { return f(g, h); }});
    }
  }
  return out;
}

InstanceResult from_verdict(Verdict v, std::string what, json data) {
  if (v == Verdict::Equivalent) return {};
  if (v == Verdict::BudgetExhausted) return {Outcome::Budget, std::move(what), std::move(data)};
  data["verdict"] = std::string(to_string(v));
  return fail(std::move(what), std::move(data));
}

// --- suites ----------------------------------------------------------------

std::vector<Instance> pleat_confluence(std::size_t maxv, std::uint64_t seed, std::size_t orders) {
  std::vector<Instance> out;
  for (const auto& e : pool(maxv, true, false)) {
    GraphRef g = e.graph;
    const std::uint64_t id = (std::uint64_t{e.n} << 32) | e.index;
    out.push_back({e.key, [g, seed, orders, id] {
      const PleatResult base = pleat(g);
      if (!is_stiff(*base.pleat)) return fail("first-policy pleat is not stiff", {{"graph", graph_json(*g)}});
      if (!is_morphism(base.embedding) ||
          !(compose(base.embedding, base.inclusion) == identity_map(base.pleat))) {
        return fail("embedding is not a retraction onto the pleat", {{"graph", graph_json(*g)}});
      }
      for (std::size_t r = 0; r < orders; ++r) {
        const std::uint64_t s = instance_rng(seed, id, r)();
        const PleatResult p = pleat(g, FoldPolicy::SeededRandom, s);
        if (!is_stiff(*p.pleat) || !are_isomorphic(base.pleat, p.pleat)) {
          return fail("fold orders reach non-isomorphic pleats",
                      {{"graph", graph_json(*g)},
                       {"first", graph_json(*base.pleat)},
                       {"random", graph_json(*p.pleat)},
                       {"policy_seed", s}});
        }
      }
      return InstanceResult{};
    }});
  }
  return out;
}

std::vector<Instance> pleat_product(std::size_t maxv) {
  return pairs(pool(maxv, false, true), [](const GraphRef& g, const GraphRef& h) {
    json data{{"g", graph_json(*g)}, {"h", graph_json(*h)}};
    if (!pleat_product_check(g, h)) return fail("pleat(GxH) is not isomorphic to pleat(G)xpleat(H)", data);
    const Graph pp = product(*pleat(g).pleat, *pleat(h).pleat);
    if (!is_stiff(pp)) return fail("product of pleats is not stiff", data);
    const auto folds = find_folds(g);
    if (!folds.empty()) {
      const Fold& f = folds.front();
      const auto lifted = lift_fold_to_product(*g, *h, f);
      Graph after = apply_fold(*lifted.back().graph, lifted.back());
      if (!(after == product(apply_fold(*g, f), *h))) {
        data["fold"] = f.describe();
        return fail("lifted fold sequence does not reach (G minus w) x H", data);
      }
    }
    return InstanceResult{};
  });
}

std::vector<Instance> pleat_coproduct(std::size_t maxv) {
  return pairs(pool(maxv, true, true), [](const GraphRef& g, const GraphRef& h) {
    const GraphRef lhs = pleat(share(coproduct(*g, *h))).pleat;
    const GraphRef rhs = share(coproduct(*pleat(g).pleat, *pleat(h).pleat));
    if (!is_stiff(*rhs) || !are_isomorphic(lhs, rhs)) {
      return fail("pleat of a coproduct differs from the coproduct of pleats",
                  {{"g", graph_json(*g)}, {"h", graph_json(*h)}});
    }
    return InstanceResult{};
  });
}

std::vector<Instance> spider(std::size_t maxv) {
  return pairs(pool(maxv, true, false), [](const GraphRef& g, const GraphRef& h) {
    const HomSet homs(g, h);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      const VertexMap f = homs.map(i);
      for (std::size_t j : homs.neighbors(i)) {
        if (j == i) continue;
        const VertexMap t = homs.map(j);
        const auto chain = spider_decompose(f, t);
        bool ok = chain.front() == f && chain.back() == t;
        for (std::size_t s = 0; ok && s < chain.size(); ++s) {
          ok = is_morphism(chain[s]);
          if (ok && s > 0 && !(chain[s - 1] == chain[s])) ok = is_spider_pair(chain[s - 1], chain[s]).has_value();
        }
        if (!ok) return fail("spider decomposition is not a valid chain", {{"f", map_json(f)}, {"g", map_json(t)}});
      }
      for (std::size_t j = i + 1; j < homs.size(); ++j) {
        const VertexMap t = homs.map(j);
        if (is_spider_pair(f, t) && !exp_edge(f, t)) {
          return fail("spider pair not adjacent in the exponential", {{"f", map_json(f)}, {"g", map_json(t)}});
        }
      }
    }
    return InstanceResult{};
  });
}

std::vector<Instance> hom_loop(std::size_t maxv) {
  return pairs(pool(maxv, true, false), [](const GraphRef& g, const GraphRef& h) {
    const ExponentialGraph ex = realize_exponential(g, h);
    const Graph& x = *ex.realized;
    std::vector<Assignment> looped;
    for (Vertex v = 0; v < x.order(); ++v) {
      const Assignment a = ex.unrank(v);
      const bool morphism = is_morphism(*g, *h, a);
      if (x.looped(v) != morphism) {
        return fail("loop in the exponential disagrees with the morphism test",
                    {{"map", map_json(VertexMap(g, h, a))}});
      }
      if (morphism) looped.push_back(a);
    }
    if (looped != enumerate_hom_assignments(*g, *h)) {
      return fail("hom enumeration differs from the looped vertices", {{"g", graph_json(*g)}, {"h", graph_json(*h)}});
    }
    return InstanceResult{};
  });
}

// Random length-1 homotopy inside a nonempty hom-set, starting at `from`.
std::size_t step_from(std::mt19937_64& rng, const HomSet& homs, std::size_t from) {
  return pick(rng, homs.neighbors(from));
}

std::vector<Instance> interchange(std::size_t maxv, std::uint64_t seed, std::size_t samples,
                                  SearchLimits limits) {
  auto graphs = std::make_shared<std::vector<PoolEntry>>(pool(maxv, true, false));
  std::vector<Instance> out;
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back({key("s", 0, i), [graphs, seed, i, limits]() -> InstanceResult {
      auto rng = instance_rng(seed, i);
      for (int attempt = 0; attempt < 10000; ++attempt) {
        const GraphRef g = pick(rng, *graphs).graph;
        const GraphRef h = pick(rng, *graphs).graph;
        const GraphRef k = pick(rng, *graphs).graph;
        const HomSet gh(g, h), hk(h, k);
        if (gh.size() == 0 || hk.size() == 0) continue;
        const std::size_t f0 = std::uniform_int_distribution<std::size_t>(0, gh.size() - 1)(rng);
        const std::size_t f1 = step_from(rng, gh, f0), f2 = step_from(rng, gh, f1);
        const std::size_t g0 = std::uniform_int_distribution<std::size_t>(0, hk.size() - 1)(rng);
        const std::size_t g1 = step_from(rng, hk, g0), g2 = step_from(rng, hk, g1);
        const Homotopy a1{g, h, {gh[f0], gh[f1]}}, a2{g, h, {gh[f1], gh[f2]}};
        const Homotopy b1{h, k, {hk[g0], hk[g1]}}, b2{h, k, {hk[g1], hk[g2]}};
        json data{{"alpha", homotopy_json(a1)}, {"alpha2", homotopy_json(a2)},
                  {"beta", homotopy_json(b1)}, {"beta2", homotopy_json(b2)}};

        const Homotopy c = compose_homotopies(a1, b1);
        const Homotopy d = compose_homotopies_swapped(a1, b1);
        if (!c.valid() || !d.valid()) return fail("composite is not a homotopy", data);
        auto r = homotopies_equivalent(c, d, limits);
        if (r.verdict != Verdict::Equivalent) return from_verdict(r.verdict, "whiskering orders differ", data);

        const Homotopy lhs = concat_homotopies(c, compose_homotopies(a2, b2));
        const Homotopy rhs = compose_homotopies(concat_homotopies(a1, a2), concat_homotopies(b1, b2));
        r = homotopies_equivalent(lhs, rhs, limits);
        return from_verdict(r.verdict, "interchange law fails", data);
      }
      return fail("no instance with nonempty hom-sets sampled");
    }});
  }
  return out;
}

Walk random_walk(std::mt19937_64& rng, const GraphRef& g, Vertex start, std::size_t max_len) {
  Walk w{g, {start}};
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t s = 0; s < len; ++s) {
    const auto nb = g->neighbors(w.vertices.back());
    if (nb.empty()) break;
    w.vertices.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
  }
  return w;
}

// A random interior spider move of w, or w itself when none applies.
Walk random_spider_move(std::mt19937_64& rng, const Walk& w) {
  std::vector<std::pair<std::size_t, Vertex>> moves;
  for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i) {
    for (Vertex u : w.graph->neighbors(w.vertices[i - 1])) {
      if (u != w.vertices[i] && w.graph->adjacent(u, w.vertices[i + 1])) moves.emplace_back(i, u);
    }
  }
  if (moves.empty()) return w;
  const auto [i, u] = pick(rng, moves);
  Walk out = w;
  out.vertices[i] = u;
  return out;
}

std::vector<Instance> groupoid_axioms(std::size_t maxv, std::uint64_t seed, std::size_t samples,
                                      SearchLimits limits) {
  auto graphs = std::make_shared<std::vector<PoolEntry>>(pool(maxv, true, false));
  std::vector<Instance> out;
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back({key("s", 0, i), [graphs, seed, i, limits]() -> InstanceResult {
      auto rng = instance_rng(seed, i);
      const GraphRef g = pick(rng, *graphs).graph;
      const Vertex x = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(g->order() - 1))(rng);
      const Walk a = random_walk(rng, g, x, 6);
      const Walk b = random_walk(rng, g, a.target(), 6);
      const Walk c = random_walk(rng, g, b.target(), 6);
      const GroupoidArrow A = arrow(a), B = arrow(b), C = arrow(c);
      json data{{"a", walk_json(a)}, {"b", walk_json(b)}, {"c", walk_json(c)}};

      auto check = [&](const GroupoidArrow& p, const GroupoidArrow& q, const char* what) {
        return from_verdict(walks_equivalent(p.representative, q.representative, limits).verdict, what, data);
      };
      std::vector<InstanceResult> results;
      results.push_back(check(compose_arrows(compose_arrows(A, B), C), compose_arrows(A, compose_arrows(B, C)),
                              "associativity"));
      results.push_back(check(compose_arrows(identity_arrow(g, A.source()), A), A, "left identity"));
      results.push_back(check(compose_arrows(A, identity_arrow(g, A.target())), A, "right identity"));
      results.push_back(check(compose_arrows(A, invert_arrow(A)), identity_arrow(g, A.source()), "right inverse"));
      results.push_back(check(compose_arrows(invert_arrow(A), A), identity_arrow(g, A.target()), "left inverse"));

      const Walk a2 = random_spider_move(rng, a);
      const Walk b2 = random_spider_move(rng, b);
      results.push_back(from_verdict(walks_equivalent(concat(a, b), concat(a2, b2), limits).verdict,
                                     "concatenation not well defined on classes", data));

      for (const Walk* w : {&a, &b, &c}) {
        const bool odd = w->length() % 2;
        if (prune_fully(*w).length() % 2 != odd ||
            (w->length() > 0 && delta_extend(*w).length() % 2 != odd)) {
          results.push_back(fail("parity not preserved", data));
        }
      }

      const GraphRef h = pick(rng, *graphs).graph;
      const HomSet homs(g, h);
      if (homs.size() > 0) {
        const VertexMap phi = homs.map(std::uniform_int_distribution<std::size_t>(0, homs.size() - 1)(rng));
        data["phi"] = map_json(phi);
        results.push_back(check(induced_functor(phi, compose_arrows(A, B)),
                                compose_arrows(induced_functor(phi, A), induced_functor(phi, B)),
                                "induced functor does not preserve composition"));
        if (!(induced_functor(phi, identity_arrow(g, x)) == identity_arrow(h, phi(x)))) {
          results.push_back(fail("induced functor does not preserve identities", data));
        }
      }

      InstanceResult worst;
      for (auto& r : results) {
        if (r.outcome == Outcome::Fail) return r;
        if (r.outcome == Outcome::Budget) worst = r;
      }
      return worst;
    }});
  }
  return out;
}

inline constexpr std::size_t kPruneWalkLength = 6;

void pruned_forms(const std::vector<Vertex>& w, std::set<std::vector<Vertex>>& seen,
                  std::set<std::vector<Vertex>>& forms) {
  if (!seen.insert(w).second) return;
  bool any = false;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] != w[i + 2]) continue;
    any = true;
    std::vector<Vertex> p = w;
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    pruned_forms(p, seen, forms);
  }
  if (!any) forms.insert(w);
}

std::vector<Instance> prune_confluence(std::size_t maxv) {
  std::vector<Instance> out;
  for (const auto& e : pool(maxv, true, false)) {
    GraphRef g = e.graph;
    out.push_back({e.key, [g]() -> InstanceResult {
      std::vector<Vertex> w;
      std::optional<InstanceResult> bad;
      std::function<void()> extend = [&] {
        if (bad) return;
        bool prunable = false;
        for (std::size_t i = 0; i + 2 < w.size(); ++i) prunable |= w[i] == w[i + 2];
        if (prunable) {
          std::set<std::vector<Vertex>> seen, forms;
          pruned_forms(w, seen, forms);
          const Walk reduced = prune_fully(Walk{g, w});
          if (forms.size() != 1 || *forms.begin() != reduced.vertices) {
            bad = fail("pruning orders disagree", {{"walk", walk_json(Walk{g, w})}});
            return;
          }
        }
        if (w.size() > kPruneWalkLength) return;
        for (Vertex u : g->neighbors(w.back())) {
          w.push_back(u);
          extend();
          w.pop_back();
        }
      };
      for (Vertex v = 0; v < g->order(); ++v) {
        w.assign(1, v);
        extend();
      }
      return bad.value_or(InstanceResult{});
    }});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pleat-confluence", "pleat-product",   "pleat-coproduct",
                                              "interchange",      "spider",          "hom-loop",
                                              "groupoid-axioms",  "prune-confluence"};
  return names;
}

std::size_t default_max_vertices(std::string_view suite) {
  if (suite == "pleat-confluence" || suite == "pleat-product" || suite == "groupoid-axioms" ||
      suite == "prune-confluence") {
    return 4;
  }
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  }
  return 3;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& opt) {
  const std::size_t maxv = opt.max_vertices ? opt.max_vertices : default_max_vertices(name);
  default_max_vertices(name);  // validates the name

  const auto start = std::chrono::steady_clock::now();
  std::vector<Instance> instances;
  if (name == "pleat-confluence") instances = pleat_confluence(maxv, opt.seed, opt.fold_orders);
  else if (name == "pleat-product") instances = pleat_product(maxv);
  else if (name == "pleat-coproduct") instances = pleat_coproduct(maxv);
  else if (name == "interchange") instances = interchange(maxv, opt.seed, opt.samples, opt.limits);
  else if (name == "spider") instances = spider(maxv);
  else if (name == "hom-loop") instances = hom_loop(maxv);
  else if (name == "groupoid-axioms") instances = groupoid_axioms(maxv, opt.seed, opt.samples, opt.limits);
  else instances = prune_confluence(maxv);

  std::vector<InstanceResult> results(instances.size());
  auto run = [&](std::size_t i) {
    try {
      results[i] = instances[i].check();
    } catch (const std::exception& e) {
      results[i] = fail(std::string("exception: ") + e.what());
    }
  };
  const auto n = static_cast<std::int64_t>(instances.size());
  if (opt.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < n; ++i) run(static_cast<std::size_t>(i));
  }

  VerificationReport report;
  report.suite = std::string(name);
  report.max_vertices = maxv;
  report.seed = opt.seed;
  report.execution = opt.execution;
  report.instances = instances.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    if (r.outcome == Outcome::Fail) {
      report.failures.push_back({instances[i].key, r.reason, r.data.dump()});
    } else if (r.outcome == Outcome::Budget) {
      ++report.budget_exhausted;
      report.exhausted_instances.push_back(instances[i].key);
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SuiteFailure& a, const SuiteFailure& b) { return a.instance < b.instance; });
  std::sort(report.exhausted_instances.begin(), report.exhausted_instances.end());
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_suite(std::string_view name, std::size_t max_vertices, std::uint64_t seed) {
  SuiteOptions opt;
  opt.max_vertices = max_vertices;
  opt.seed = seed;
  return run_suite(name, opt);
}

std::string report_json(const VerificationReport& r, bool with_timing) {
  json doc;
  doc["suite"] = r.suite;
  doc["max_vertices"] = r.max_vertices;
  doc["seed"] = r.seed;
  doc["instances"] = r.instances;
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"instance", f.instance}, {"reason", f.reason}, {"data", json::parse(f.data)}});
  }
  doc["failures"] = std::move(failures);
  doc["budget_exhausted"] = r.budget_exhausted;
  doc["exhausted_instances"] = r.exhausted_instances;
  if (with_timing) doc["wall_seconds"] = r.wall_seconds;
  return doc.dump();
}

}  // namespace ghom
