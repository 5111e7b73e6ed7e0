#include "pcube/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <limits>
#include <thread>

#include "pcube/counting.hpp"
#include "pcube/error.hpp"
#include "pcube/median.hpp"
#include "pcube/theta.hpp"

namespace pcube {

namespace {

constexpr std::size_t kTripleGuard = 2048;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct FamilySpec {
  std::vector<std::string> params;
  bool seeded = false;
};

const std::map<std::string, FamilySpec>& families() {
  static const std::map<std::string, FamilySpec> table = {
      {"complete", {{"n"}, false}},
      {"even_cycle", {{"k"}, false}},
      {"example41", {{"n", "m"}, false}},
      {"example42", {{"n", "m"}, false}},
      {"hypercube", {{"n"}, false}},
      {"hypercube_minus_vertex", {{"n"}, false}},
      {"path", {{"n"}, false}},
      {"random_graph", {{"n", "p_num", "p_den"}, true}},
      {"random_median", {{"steps"}, true}},
      {"random_partial_cube", {{"steps"}, true}},
      {"random_tree", {{"n"}, true}},
      {"simplex_random", {{"n"}, true}},
      {"trihex", {{}, false}},
  };
  return table;
}

const std::map<std::string, long long>& parameter_defaults() {
  static const std::map<std::string, long long> defaults = {{"p_num", 1}, {"p_den", 2}};
  return defaults;
}

const FamilySpec& family_spec(const std::string& family) {
  const auto it = families().find(family);
  if (it == families().end()) throw InputError("unknown family '" + family + "'");
  return it->second;
}

int as_int(const std::string& family, const std::string& name, long long value) {
  if (value < INT_MIN || value > INT_MAX) {
    throw InputError(family + ": parameter " + name + " is out of range");
  }
  return static_cast<int>(value);
}

std::size_t as_count(const std::string& family, const std::string& name, long long value) {
  if (value < 0) throw InputError(family + ": parameter " + name + " must be nonnegative");
  return static_cast<std::size_t>(value);
}

json median_verdicts(const Graph& g, const PartialCubeCertificate& cert) {
  json out;
  out["by_convex_u"] = cert.verdict && is_median_by_convex_U(g, cert);
  if (cert.connected && g.vertex_count() <= kTripleGuard) {
    out["by_triples"] = is_median_by_triples(g, cert.distances);
  } else {
    out["by_triples"] = nullptr;
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<std::string>& family_parameters(const std::string& family) {
  return family_spec(family).params;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : families()) out.push_back(name);
  return out;
}

bool family_uses_seed(const std::string& family) { return family_spec(family).seeded; }

Generated generate(const std::string& family, const std::map<std::string, long long>& params, Seed seed,
                   std::size_t max_vertices) {
  const auto& spec = family_spec(family);
  for (const auto& [name, value] : params) {
    if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end()) {
      throw InputError(family + ": unknown parameter '" + name + "'");
    }
  }
  auto get = [&](const std::string& name) -> long long {
    if (auto it = params.find(name); it != params.end()) return it->second;
    if (auto it = parameter_defaults().find(name); it != parameter_defaults().end()) return it->second;
    throw InputError(family + ": missing parameter '" + name + "'");
  };
  auto guard = [&](long double vertices) {
    if (vertices > static_cast<long double>(max_vertices)) {
      throw GuardError(family + ": " + std::to_string(static_cast<unsigned long long>(vertices)) +
                       " vertices exceed the guard of " + std::to_string(max_vertices));
    }
  };

  Generated out;
  if (family == "hypercube" || family == "hypercube_minus_vertex") {
    const int n = as_int(family, "n", get("n"));
    if (n >= 0 && n <= 20) guard(static_cast<long double>(std::size_t{1} << n));
    out.graph = family == "hypercube" ? hypercube(n) : hypercube_minus_vertex(n);
  } else if (family == "even_cycle") {
    const int k = as_int(family, "k", get("k"));
    guard(2.0L * k);
    out.graph = even_cycle(k);
  } else if (family == "path" || family == "complete") {
    const int n = as_int(family, "n", get("n"));
    guard(n);
    out.graph = family == "path" ? path(n) : complete(n);
  } else if (family == "random_tree") {
    const int n = as_int(family, "n", get("n"));
    guard(n);
    out.graph = random_tree(n, seed);
  } else if (family == "random_graph") {
    const int n = as_int(family, "n", get("n"));
    guard(n);
    out.graph = random_graph(n, as_int(family, "p_num", get("p_num")), as_int(family, "p_den", get("p_den")), seed);
  } else if (family == "trihex") {
    out.graph = trihex();
  } else if (family == "example41") {
    out.graph = example_41(as_int(family, "n", get("n")), as_count(family, "m", get("m")), max_vertices);
  } else if (family == "example42") {
    out.graph = example_42(as_int(family, "n", get("n")), as_count(family, "m", get("m")), max_vertices);
  } else if (family == "random_median") {
    RandomMedianOptions options;
    options.max_vertices = std::min(options.max_vertices, max_vertices);
    auto traced = random_median_graph_traced(as_int(family, "steps", get("steps")), seed, options);
    out.graph = std::move(traced.graph);
    out.steps = std::move(traced.steps);
  } else if (family == "random_partial_cube") {
    out.graph = random_partial_cube(as_int(family, "steps", get("steps")), seed);
  } else if (family == "simplex_random") {
    const int n = as_int(family, "n", get("n"));
    if (n > 20) throw InputError("simplex_random: n must be at most 20");
    out.graph = simplex_graph(random_graph(n, 1, 2, seed), max_vertices).graph;
  }
  return out;
}

CommandOutput cmd_analyze(const Graph& g) {
  Stopwatch clock;
  CommandOutput out;
  json& r = out.results;
  const auto n = g.vertex_count();
  r["vertices"] = n;
  r["edges"] = g.edge_count();
  const auto cert = is_partial_cube(g);
  r["certificate"] = certificate_json(g, cert);
  r["median"] = median_verdicts(g, cert);

  if (cert.verdict) {
    const auto embedding = embed(g, cert);
    json labels = json::array();
    for (const auto& l : embedding.labels) labels.push_back(label_string(l));
    r["labels"] = labels;
    const auto cube = cube_polynomial(g, cert, embedding);
    r["cube_polynomial"] = polynomial_json(cube);
    if (n >= 2) {
      const auto gsharp = crossing_graph(g, cert).graph;
      const auto cl = clique_polynomial_recursive(gsharp);
      const auto shifted = shift(cl, 1);
      r["crossing_graph"] = graph_json(gsharp);
      r["crossing_clique_polynomial"] = polynomial_json(cl);
      r["crossing_clique_shifted"] = polynomial_json(shifted);
      r["leq_holds"] = poly_leq(cube, shifted);
      r["equality"] = cube == shifted;
      r["x_plus_one_expansion"] = integers_json(x_plus_one_expansion(cube));
    }
  }

  std::string summary = std::to_string(n) + " vertices, " + std::to_string(g.edge_count()) + " edges: ";
  if (!cert.connected) {
    summary += "disconnected";
  } else if (cert.odd_cycle) {
    summary += "not bipartite";
  } else if (!cert.verdict) {
    summary += "bipartite, not a partial cube";
  } else {
    summary += "partial cube, idim " + std::to_string(cert.idim) +
               (r["median"]["by_convex_u"].get<bool>() ? ", median" : ", not median");
  }
  out.summary = summary;
  out.timings["total"] = clock.ms();
  return out;
}

CommandOutput cmd_verify(const Graph& g) {
  Stopwatch clock;
  if (g.vertex_count() == 1) throw InputError("verify: G must not be K1");
  const auto report = verify_theorem(g);
  if (!report.is_partial_cube) throw InputError("verify: graph is not a partial cube");
  CommandOutput out;
  out.results = theorem_json(report);
  if (!report.theorem_holds()) {
    out.exit_code = exit_code::verification_failure;
    out.summary = "theorem check FAILED";
  } else {
    out.summary = report.equality ? "equality C(G,x) = Cl(G#,x+1); G is median"
                                  : "strict inequality C(G,x) < Cl(G#,x+1); G is not median";
  }
  out.timings["total"] = clock.ms();
  return out;
}

CommandOutput cmd_closure(const Graph& g, const CycleLimits& limits) {
  Stopwatch clock;
  const auto trace = median_closure(g, limits);
  CommandOutput out;
  out.results = closure_json(trace);
  const auto& plus = trace.final_graph();
  const auto plus_cert = is_partial_cube(plus);
  out.results["final_median"] = median_verdicts(plus, plus_cert);
  const bool preserved = closure_preserves_crossing_graph(g, trace);
  out.results["crossing_graph_preserved"] = preserved;
  const bool median = out.results["final_median"]["by_convex_u"].get<bool>() &&
                      out.results["final_median"]["by_triples"] != false;
  if (!median || !preserved) out.exit_code = exit_code::verification_failure;

  std::string counts;
  for (const auto& round : trace.rounds) {
    if (!counts.empty()) counts += " -> ";
    counts += std::to_string(round.graph.vertex_count());
  }
  out.summary = "closure " + counts + ", l = " + std::to_string(trace.stabilization_index()) +
                (median ? ", median" : ", NOT median") + (preserved ? "" : ", crossing graph changed");
  out.timings["total"] = clock.ms();
  return out;
}

Polynomial threshold_polynomial(const std::string& family, int n, long long m) {
  if (m < 0) throw InputError("thresholds: m must be nonnegative");
  if (family == "clique") {
    return pow(Polynomial{1, 1}, static_cast<unsigned>(n)) + Polynomial{0, m};
  }
  if (family == "cube") {
    return pow(Polynomial{2, 1}, static_cast<unsigned>(n)) + Polynomial{m, m};
  }
  throw InputError("thresholds: family must be 'clique' or 'cube'");
}

std::string classify(const Polynomial& p) {
  if (!is_unimodal(p)) return "not-unimodal";
  return is_log_concave(p) ? "log-concave" : "unimodal-not-LC";
}

CommandOutput cmd_thresholds(const ThresholdOptions& o) {
  Stopwatch clock;
  const bool clique = o.family == "clique";
  if (!clique && o.family != "cube") throw InputError("thresholds: family must be 'clique' or 'cube'");
  if (o.n < 1 || o.n > (clique ? 400 : 60)) {
    throw InputError("thresholds: n must lie in 1.." + std::to_string(clique ? 400 : 60));
  }
  if (o.m_min < 0 || o.m_max < o.m_min) throw InputError("thresholds: need 0 <= m-min <= m-max");
  const auto span = static_cast<unsigned long long>(o.m_max - o.m_min) + 1;
  if (span > 5'000'000ULL || span * static_cast<unsigned long long>(o.n + 1) > 50'000'000ULL) {
    throw GuardError("thresholds: m-range too large for n = " + std::to_string(o.n));
  }

  // Only the two lowest coefficients depend on m.
  const auto base = threshold_polynomial(o.family, o.n, 0);
  json runs = json::array();
  std::optional<long long> lc_lost, last_lc, unimodal_lost;
  std::string current;
  long long run_start = o.m_min;
  std::vector<std::string> classes;
  classes.reserve(span);
  for (long long m = o.m_min; m <= o.m_max; ++m) {
    auto coeffs = base.coeffs();
    coeffs.resize(std::max<std::size_t>(coeffs.size(), 2));
    if (!clique) coeffs[0] += m;
    coeffs[1] += m;
    const Polynomial p(std::move(coeffs));
    const auto cls = classify(p);
    classes.push_back(cls);
    if (cls == "log-concave") last_lc = m;
    if (cls != "log-concave" && !lc_lost) lc_lost = m;
    if (cls == "not-unimodal" && !unimodal_lost) unimodal_lost = m;
    if (m == o.m_min) current = cls;
    if (cls != current) {
      runs.push_back({{"from", run_start}, {"to", m - 1}, {"class", current}});
      current = cls;
      run_start = m;
    }
  }
  runs.push_back({{"from", run_start}, {"to", o.m_max}, {"class", current}});

  CommandOutput out;
  json& r = out.results;
  r["family"] = o.family;
  r["n"] = o.n;
  r["m_range"] = {o.m_min, o.m_max};
  r["polynomial_at_m0"] = polynomial_json(base);
  r["runs"] = runs;
  auto opt = [](const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); };
  r["observed"] = {{"lc_lost_at", opt(lc_lost)},
                   {"last_log_concave", opt(last_lc)},
                   {"unimodality_lost_at", opt(unimodal_lost)}};

  // Closed forms for the last log-concave m and the first non-unimodal m.
  const BigInt n = o.n;
  const bool applies = clique ? o.n >= 6 : o.n >= 9;
  json formula;
  formula["applies"] = applies;
  std::optional<bool> agrees;
  if (applies) {
    BigInt lc_bound, unimodal_from;
    if (clique) {
      lc_bound = (n * n + n) / (2 * n - 4);
      unimodal_from = (n * n - 3 * n) / 2 + 1;
    } else {
      const BigInt scale = BigInt{1} << (o.n - 2);
      lc_bound = (n * n + n) * scale / (n - 2);
      unimodal_from = (n * n - 5 * n) / 2 * scale + 1;
    }
    formula["last_log_concave"] = safe_integer(lc_bound);
    formula["unimodality_lost_at"] = safe_integer(unimodal_from);
    agrees = true;
    for (long long m = o.m_min; m <= o.m_max; ++m) {
      const auto& cls = classes[static_cast<std::size_t>(m - o.m_min)];
      const bool lc = cls == "log-concave";
      const bool unimodal = cls != "not-unimodal";
      if (lc != (BigInt{m} <= lc_bound) || unimodal != (BigInt{m} < unimodal_from)) agrees = false;
    }
  }
  formula["agrees"] = agrees ? json(*agrees) : json(nullptr);
  r["formula"] = formula;

  // Materialize small graphs and compare their polynomials with the closed form.
  json cross = nullptr;
  if ((clique && o.n <= 8) || (!clique && o.n <= 4)) {
    const long long hi = std::min(o.m_max, o.m_min + 50);
    bool ok = true;
    for (long long m = o.m_min; m <= hi && ok; ++m) {
      Polynomial actual;
      if (clique) {
        actual = clique_polynomial_recursive(example_41(o.n, static_cast<std::size_t>(m)));
      } else {
        const auto g = example_42(o.n, static_cast<std::size_t>(m));
        const auto cert = is_partial_cube(g);
        actual = cube_polynomial(g, cert, embed(g, cert));
      }
      ok = actual == threshold_polynomial(o.family, o.n, m);
    }
    cross = {{"m_range", {o.m_min, hi}}, {"agrees", ok}};
    if (!ok) out.exit_code = exit_code::verification_failure;
  }
  r["materialized_check"] = cross;
  if (agrees == false) out.exit_code = exit_code::verification_failure;

  auto show = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("none"); };
  out.summary = o.family + " n=" + std::to_string(o.n) + ": LC lost at m=" + show(lc_lost) +
                ", unimodality lost at m=" + show(unimodal_lost) +
                (agrees == false ? " (DISAGREES with closed-form bounds)" : "");
  out.timings["total"] = clock.ms();
  return out;
}

namespace {

struct CorpusItem {
  std::string family;
  std::map<std::string, long long> params;
  Seed seed = 0;
  std::string name;
};

std::pair<long long, long long> parse_range(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    const auto v = value.get<long long>();
    return {v, v};
  }
  if (value.is_array() && value.size() == 2 && value[0].is_number_integer() && value[1].is_number_integer()) {
    const auto lo = value[0].get<long long>();
    const auto hi = value[1].get<long long>();
    if (lo > hi) throw InputError("corpus spec: " + where + ": range is empty");
    return {lo, hi};
  }
  throw InputError("corpus spec: " + where + ": expected an integer or [lo, hi]");
}

std::vector<CorpusItem> expand_spec(const json& spec, Seed default_seed) {
  if (spec.is_null()) return {};
  if (!spec.is_object()) throw InputError("corpus spec: top level must be an object");
  for (const auto& [key, value] : spec.items()) {
    if (key != "families" && key != "seed") throw InputError("corpus spec: unknown key '" + key + "'");
  }
  if (spec.contains("seed")) {
    if (!spec["seed"].is_number_integer() || spec["seed"].get<long long>() < 0) throw InputError("corpus spec: seed: expected a nonnegative integer");
    default_seed = spec["seed"].get<Seed>();
  }
  std::vector<CorpusItem> items;
  if (!spec.contains("families")) return items;
  const auto& fams = spec["families"];
  if (!fams.is_array()) throw InputError("corpus spec: families: expected an array");
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const std::string where = "families[" + std::to_string(i) + "]";
    const auto& entry = fams[i];
    if (!entry.is_object() || !entry.contains("family") || !entry["family"].is_string()) {
      throw InputError("corpus spec: " + where + ": expected an object with a string 'family'");
    }
    const auto family = entry["family"].get<std::string>();
    if (!families().contains(family)) throw InputError("corpus spec: " + where + ".family: unknown family '" + family + "'");
    const auto& fs = family_spec(family);

    std::vector<std::pair<std::string, std::pair<long long, long long>>> axes;
    for (const auto& [key, value] : entry.items()) {
      if (key == "family" || key == "seeds") continue;
      if (std::find(fs.params.begin(), fs.params.end(), key) == fs.params.end()) {
        throw InputError("corpus spec: " + where + ": unknown parameter '" + key + "' for " + family);
      }
    }
    for (const auto& p : fs.params) {
      if (entry.contains(p)) {
        axes.push_back({p, parse_range(entry[p], where + "." + p)});
      } else if (!parameter_defaults().contains(p)) {
        throw InputError("corpus spec: " + where + ": missing parameter '" + p + "'");
      }
    }
    std::pair<long long, long long> seeds{static_cast<long long>(default_seed), static_cast<long long>(default_seed)};
    if (entry.contains("seeds")) {
      if (!fs.seeded) throw InputError("corpus spec: " + where + ".seeds: family " + family + " takes no seed");
      seeds = parse_range(entry["seeds"], where + ".seeds");
      if (seeds.first < 0) throw InputError("corpus spec: " + where + ".seeds: seeds must be nonnegative");
    }

    // Cartesian product: parameters in declared order, seeds innermost.
    std::vector<long long> cursor;
    for (const auto& axis : axes) cursor.push_back(axis.second.first);
    bool done = false;
    while (!done) {
      for (long long s = seeds.first; s <= seeds.second; ++s) {
        CorpusItem item;
        item.family = family;
        item.name = family + "(";
        for (std::size_t a = 0; a < axes.size(); ++a) {
          item.params[axes[a].first] = cursor[a];
          item.name += (a ? "," : "") + axes[a].first + "=" + std::to_string(cursor[a]);
        }
        if (fs.seeded) {
          item.seed = static_cast<Seed>(s);
          item.name += std::string(axes.empty() ? "" : ",") + "seed=" + std::to_string(s);
        }
        item.name += ")";
        items.push_back(std::move(item));
        if (items.size() > 1'000'000) throw GuardError("corpus spec: more than 1000000 items");
        if (!fs.seeded) break;
      }
      done = true;
      for (std::size_t a = axes.size(); a-- > 0;) {
        if (cursor[a] < axes[a].second.second) {
          ++cursor[a];
          done = false;
          break;
        }
        cursor[a] = axes[a].second.first;
      }
    }
  }
  return items;
}

json run_item(const CorpusItem& item, const CorpusOptions& options) {
  json r;
  r["name"] = item.name;
  r["checks"] = json::object();
  r["failures"] = json::array();
  try {
    const auto gen = generate(item.family, item.params, item.seed, options.max_vertices);
    r["vertices"] = gen.graph.vertex_count();
    r["edges"] = gen.graph.edge_count();
    InvariantLimits limits;
    limits.seed = fnv1a(item.name);
    auto checks = check_graph(gen.graph, limits);
    if (!gen.steps.empty()) {
      CheckOutcome expansion{"expansion_cube_identity", CheckStatus::pass, {}};
      for (const auto& step : gen.steps) {
        auto one = check_recorded_expansion(step);
        if (one.status == CheckStatus::fail) {
          expansion = std::move(one);
          break;
        }
      }
      checks.push_back(std::move(expansion));
    }
    for (const auto& c : checks) {
      r["checks"][c.name] = to_string(c.status);
      if (c.status == CheckStatus::fail) r["failures"].push_back({{"check", c.name}, {"detail", c.detail}});
    }
  } catch (const GuardError& e) {
    r["error"] = {{"kind", "guard"}, {"message", e.what()}};
  } catch (const InputError& e) {
    r["error"] = {{"kind", "input"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r["error"] = {{"kind", "internal"}, {"message", e.what()}};
  }
  return r;
}

}  // namespace

CommandOutput cmd_corpus(const json& spec, const CorpusOptions& options) {
  Stopwatch clock;
  const auto items = expand_spec(spec, options.seed);
  std::vector<json> results(items.size());

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < items.size(); i = next++) results[i] = run_item(items[i], options);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::map<std::string, std::array<std::size_t, 3>> totals;
  std::size_t failed_items = 0;
  std::size_t errored_items = 0;
  std::size_t guarded_items = 0;
  json item_list = json::array();
  for (auto& r : results) {
    bool failed = !r["failures"].empty();
    if (r.contains("error")) {
      if (r["error"]["kind"] == "guard") {
        ++guarded_items;
      } else {
        ++errored_items;
        failed = true;
      }
    }
    for (const auto& [name, status] : r["checks"].items()) {
      auto& t = totals[name];
      ++t[status == "pass" ? 0 : status == "fail" ? 1 : 2];
    }
    if (failed) ++failed_items;
    item_list.push_back(std::move(r));
  }
  json totals_json = json::object();
  std::size_t failed_checks = 0;
  for (const auto& [name, t] : totals) {
    totals_json[name] = {{"pass", t[0]}, {"fail", t[1]}, {"skip", t[2]}};
    failed_checks += t[1];
  }

  CommandOutput out;
  out.results = {{"item_count", items.size()},
                 {"failed_items", failed_items},
                 {"errored_items", errored_items},
                 {"guarded_items", guarded_items},
                 {"totals", totals_json},
                 {"items", item_list}};
  if (failed_items > 0) out.exit_code = exit_code::verification_failure;
  out.summary = std::to_string(items.size()) + " corpus graphs, " + std::to_string(failed_checks) +
                " failed checks, " + std::to_string(errored_items) + " errors, " + std::to_string(guarded_items) +
                " guarded";
  out.timings["total"] = clock.ms();
  return out;
}

CommandOutput cmd_simplex(const Graph& h, std::size_t max_cliques) {
  Stopwatch clock;
  const auto s = simplex_graph(h, max_cliques);
  CommandOutput out;
  json& r = out.results;
  r["source"] = graph_json(h);
  r["simplex_graph"] = graph_json(s.graph);
  json cliques = json::array();
  for (const auto& k : s.clique_of_vertex) cliques.push_back(k);
  r["cliques"] = cliques;
  r["median"] = median_verdicts(s.graph, is_partial_cube(s.graph));
  const bool identity = verify_simplex_identity(h, max_cliques);
  r["identity_holds"] = identity;
  const bool median = r["median"]["by_convex_u"].get<bool>() && r["median"]["by_triples"] != false;
  if (!median || !identity) out.exit_code = exit_code::verification_failure;
  out.summary = "S(G) has " + std::to_string(s.graph.vertex_count()) + " vertices, " +
                std::to_string(s.graph.edge_count()) + " edges; " + (median ? "median" : "NOT median") +
                (identity ? ", S(G)# = G" : ", S(G)# != G");
  out.timings["total"] = clock.ms();
  return out;
}

}  // namespace pcube
