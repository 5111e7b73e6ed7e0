#include <doctest.h>

#include "fixtures.hpp"
#include "pcube/commands.hpp"
#include "pcube/error.hpp"
#include "pcube/generators.hpp"

using namespace pcube;

namespace {

json strip_timings(json results) {
  for (auto& item : results["items"]) item.erase("timings");
  return results;
}

}  // namespace

TEST_CASE("analyze") {
  const auto c6 = cmd_analyze(fixture::c6());
  CHECK(c6.exit_code == exit_code::ok);
  const auto& r = c6.results;
  CHECK(r["certificate"]["partial_cube"] == true);
  CHECK(r["certificate"]["idim"] == 3);
  CHECK(r["median"]["by_convex_u"] == false);
  CHECK(r["labels"] == json::array({"000", "100", "101", "111", "011", "010"}));
  CHECK(r["crossing_graph"]["n"] == 3);
  CHECK(r["crossing_graph"]["edges"].size() == 3);
  CHECK(r["cube_polynomial"] == json::array({"6", "6"}));
  CHECK(r["crossing_clique_shifted"] == json::array({"8", "12", "6", "1"}));
  CHECK(r["leq_holds"] == true);
  CHECK(r["equality"] == false);
  CHECK(c6.summary.find("not median") != std::string::npos);

  const auto p3 = cmd_analyze(fixture::p3());
  CHECK(p3.results["equality"] == true);
  CHECK(p3.results["x_plus_one_expansion"] == json::array({"1", "2"}));

  const auto k3 = cmd_analyze(fixture::k3());
  CHECK(k3.exit_code == exit_code::ok);
  CHECK(k3.results["certificate"]["partial_cube"] == false);
  CHECK_FALSE(k3.results.contains("cube_polynomial"));
  CHECK_FALSE(k3.results.contains("crossing_graph"));

  const auto k1 = cmd_analyze(fixture::k1());
  CHECK(k1.results["cube_polynomial"] == json::array({"1"}));
  CHECK_FALSE(k1.results.contains("crossing_graph"));

  CHECK(cmd_analyze(fixture::two_k2()).summary.find("disconnected") != std::string::npos);
}

TEST_CASE("verify") {
  const auto q3 = cmd_verify(fixture::q3());
  CHECK(q3.exit_code == exit_code::ok);
  CHECK(q3.results["equality"] == true);
  CHECK(q3.results["theorem_holds"] == true);

  const auto th = cmd_verify(trihex());
  CHECK(th.exit_code == exit_code::ok);
  CHECK(th.results["strict"] == true);
  CHECK(th.results["cube_polynomial"] == json::array({"13", "15"}));
  CHECK(th.results["crossing_clique_shifted"] == json::array({"20", "36", "21", "4"}));

  CHECK_THROWS_AS(cmd_verify(fixture::k1()), InputError);
  CHECK_THROWS_AS(cmd_verify(fixture::k3()), InputError);
  CHECK_THROWS_AS(cmd_verify(fixture::k23()), InputError);
}

TEST_CASE("closure") {
  const auto out = cmd_closure(trihex());
  CHECK(out.exit_code == exit_code::ok);
  CHECK(out.results["vertex_counts"] == json::array({13, 19, 20}));
  CHECK(out.results["stabilization_index"] == 2);
  CHECK(out.results["dimension"] == 6);
  CHECK(out.results["crossing_graph_preserved"] == true);
  CHECK(out.results["final_median"]["by_convex_u"] == true);
  CHECK(out.results["rounds"][1]["added"].size() == 6);
  CHECK(out.results["final_graph"]["n"] == 20);
  CHECK(out.results["final_labels"].size() == 20);
  CHECK(out.summary.find("13 -> 19 -> 20") != std::string::npos);

  CHECK_THROWS_AS(cmd_closure(fixture::k1()), InputError);
  CHECK_THROWS_AS(cmd_closure(even_cycle(6), {20, 2'000'000}), GuardError);
}

TEST_CASE("threshold polynomials and classification") {
  CHECK(threshold_polynomial("clique", 3, 2) == pow(Polynomial{1, 1}, 3) + Polynomial{0, 2});
  CHECK(threshold_polynomial("cube", 2, 5) == pow(Polynomial{2, 1}, 2) + Polynomial{5, 5});
  CHECK(classify(Polynomial{1, 3, 3, 1}) == "log-concave");
  CHECK(classify(Polynomial{1, 1, 4}) == "unimodal-not-LC");
  CHECK(classify(Polynomial{2, 1, 2}) == "not-unimodal");
  CHECK_THROWS_AS(threshold_polynomial("path", 3, 1), InputError);
  CHECK_THROWS_AS(threshold_polynomial("cube", 3, -1), InputError);
}

TEST_CASE("thresholds") {
  const auto clique = cmd_thresholds({"clique", 6, 0, 20});
  CHECK(clique.exit_code == exit_code::ok);
  CHECK(clique.results["observed"]["lc_lost_at"] == 6);
  CHECK(clique.results["observed"]["last_log_concave"] == 5);
  CHECK(clique.results["observed"]["unimodality_lost_at"] == 10);
  CHECK(clique.results["formula"]["applies"] == true);
  CHECK(clique.results["formula"]["agrees"] == true);
  CHECK(clique.results["materialized_check"]["agrees"] == true);

  const auto cube = cmd_thresholds({"cube", 9, 1600, 2400});
  CHECK(cube.exit_code == exit_code::ok);
  CHECK(cube.results["observed"]["last_log_concave"] == 1645);
  CHECK(cube.results["observed"]["unimodality_lost_at"] == 2305);
  CHECK(cube.results["formula"]["agrees"] == true);
  CHECK(cube.results["materialized_check"].is_null());

  const auto small = cmd_thresholds({"cube", 3, 0, 50});
  CHECK(small.results["formula"]["applies"] == false);
  CHECK(small.results["formula"]["agrees"].is_null());
  CHECK(small.results["materialized_check"]["agrees"] == true);

  CHECK_THROWS_AS(cmd_thresholds({"clique", 0, 0, 1}), InputError);
  CHECK_THROWS_AS(cmd_thresholds({"cube", 5, 4, 3}), InputError);
  CHECK_THROWS_AS(cmd_thresholds({"tree", 5, 0, 3}), InputError);
  CHECK_THROWS_AS(cmd_thresholds({"clique", 10, 0, 100'000'000}), GuardError);
}

TEST_CASE("generate") {
  CHECK(generate("hypercube", {{"n", 3}}, 0).graph == fixture::q3());
  CHECK(generate("example42", {{"n", 2}, {"m", 1}}, 0).graph.vertex_count() == 5);
  const auto rm = generate("random_median", {{"steps", 6}}, 4);
  CHECK(rm.steps.size() == 6);
  CHECK(rm.graph == random_median_graph(6, 4));
  CHECK(family_parameters("example41") == std::vector<std::string>{"n", "m"});
  CHECK(family_uses_seed("random_tree"));
  CHECK_FALSE(family_uses_seed("trihex"));
  CHECK(family_names().size() == 13);
  CHECK_THROWS_AS(generate("nope", {}, 0), InputError);
  CHECK_THROWS_AS(generate("hypercube", {}, 0), InputError);
  CHECK_THROWS_AS(generate("hypercube", {{"n", 3}, {"k", 1}}, 0), InputError);
  CHECK_THROWS_AS(generate("path", {{"n", -2}}, 0), InputError);
  CHECK_THROWS_AS(generate("hypercube", {{"n", 12}}, 0, 100), GuardError);
}

TEST_CASE("corpus") {
  const auto empty = cmd_corpus(json{{"families", json::array()}});
  CHECK(empty.exit_code == exit_code::ok);
  CHECK(empty.results["item_count"] == 0);

  const json spec = {{"seed", 1},
                     {"families",
                      {{{"family", "random_median"}, {"steps", {2, 6}}, {"seeds", {0, 1}}},
                       {{"family", "even_cycle"}, {"k", {2, 4}}},
                       {{"family", "complete"}, {"n", 3}}}}};
  const auto a = cmd_corpus(spec, {4, 0});
  const auto b = cmd_corpus(spec, {1, 0});
  CHECK(a.exit_code == exit_code::ok);
  CHECK(a.results["item_count"] == 14);
  CHECK(a.results["failed_items"] == 0);
  CHECK(a.results["items"][0]["name"] == "random_median(steps=2,seed=0)");
  CHECK(a.results["items"][1]["name"] == "random_median(steps=2,seed=1)");
  CHECK(a.results["items"][13]["name"] == "complete(n=3)");
  CHECK(a.results["totals"]["theorem_leq"]["fail"] == 0);
  CHECK(a.results["totals"]["expansion_cube_identity"]["pass"] == 10);
  CHECK(strip_timings(a.results) == strip_timings(b.results));

  auto rejects = [](const json& bad, const char* where) {
    CHECK_THROWS_WITH_AS(cmd_corpus(bad), doctest::Contains(where), InputError);
  };
  rejects(json::array(), "top level");
  rejects({{"families", json::array()}, {"extra", 1}}, "unknown key 'extra'");
  rejects({{"families", {{{"family", "nope"}}}}}, "families[0].family");
  rejects({{"families", {{{"family", "hypercube"}}}}}, "missing parameter 'n'");
  rejects({{"families", {{{"family", "hypercube"}, {"n", {4, 2}}}}}}, "range is empty");
  rejects({{"families", {{{"family", "trihex"}, {"seeds", {0, 1}}}}}}, "takes no seed");
  rejects({{"families", {{{"family", "path"}, {"n", "x"}}}}}, "families[0].n");
}

TEST_CASE("corpus records guard trips without failing") {
  const json spec = {{"families", {{{"family", "hypercube"}, {"n", 12}}}}};
  CorpusOptions options;
  options.max_vertices = 100;
  const auto out = cmd_corpus(spec, options);
  CHECK(out.exit_code == exit_code::ok);
  CHECK(out.results["guarded_items"] == 1);
  CHECK(out.results["items"][0]["error"]["kind"] == "guard");
}

TEST_CASE("simplex") {
  const auto out = cmd_simplex(fixture::k2());
  CHECK(out.exit_code == exit_code::ok);
  CHECK(out.results["identity_holds"] == true);
  CHECK(out.results["simplex_graph"]["n"] == 4);
  CHECK(out.results["cliques"] == json::parse("[[], [0], [0, 1], [1]]"));
  CHECK(out.results["median"]["by_triples"] == true);
  CHECK_THROWS_AS(cmd_simplex(complete(8), 100), GuardError);
}

TEST_CASE("report envelope") {
  const auto g = fixture::p3();
  const auto env = envelope("analyze", {"pcube", "analyze", "p3.txt"}, input_digest(g), cmd_analyze(g).results,
                            json::object());
  CHECK(env["schema"] == kSchemaVersion);
  CHECK(env["tool_version"] == kToolVersion);
  CHECK(env["command"]["name"] == "analyze");
  CHECK(env["command"]["argv"].size() == 3);
  CHECK(env["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(env["input_digest"].get<std::string>().size() == 8 + 16);
  CHECK(input_digest(g) == input_digest(path(3)));
  CHECK(input_digest(g) != input_digest(fixture::k3()));
  CHECK(text_digest("") == "fnv1a64:cbf29ce484222325");
}
