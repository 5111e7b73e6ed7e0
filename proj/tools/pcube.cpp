// pcube: command-line front end.  Reports go to stdout (or --out) as JSON,
// a one-line summary goes to stderr.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcube/commands.hpp"
#include "pcube/error.hpp"
#include "pcube/graph_io.hpp"

namespace {

using pcube::json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcube::InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pcube::InputError("cannot write '" + path + "'");
  out << text;
}

std::map<std::string, long long> parse_gen_params(const std::string& family, const std::vector<std::string>& args) {
  const auto& names = pcube::family_parameters(family);
  std::map<std::string, long long> out;
  std::size_t next = 0;
  for (const auto& arg : args) {
    std::string name;
    std::string value = arg;
    if (const auto eq = arg.find('='); eq != std::string::npos) {
      name = arg.substr(0, eq);
      value = arg.substr(eq + 1);
    } else {
      if (next >= names.size()) throw pcube::InputError(family + ": too many parameters");
      name = names[next++];
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw pcube::InputError(family + ": parameter " + name + " is not an integer: '" + value + "'");
    }
    out[name] = v;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcube: partial cubes, median graphs, cube and clique polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pcube::kToolVersion));

  std::string input;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t max_vertices = pcube::kDefaultVertexGuard;
  std::size_t max_cliques = 1'000'000;
  std::string format = "edges";
  unsigned threads = 0;
  pcube::ThresholdOptions thresholds;
  std::string family;
  std::vector<std::string> gen_args;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write the report here instead of stdout"); };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("graph", input, "Edge-list or JSON graph file ('-' for stdin)")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Verdicts, Θ-classes, crossing graph and polynomials");
  add_input(analyze);
  add_out(analyze);

  auto* verify = app.add_subcommand("verify", "Check C(G,x) <= Cl(G#,x+1), with equality iff G is median");
  add_input(verify);
  add_out(verify);

  auto* closure = app.add_subcommand("closure", "Median closure trace G -> G+");
  add_input(closure);
  add_out(closure);
  closure->add_option("--max-vertices", max_vertices, "Abort when the closure grows past this many vertices");

  auto* thresh = app.add_subcommand("thresholds", "Log-concavity and unimodality scan over m");
  thresh->add_option("--family", thresholds.family, "clique or cube")
      ->required()
      ->check(CLI::IsMember({"clique", "cube"}));
  thresh->add_option("--n", thresholds.n, "Clique size or hypercube dimension")->required();
  thresh->add_option("--m-min", thresholds.m_min, "First m")->default_val(0);
  thresh->add_option("--m-max", thresholds.m_max, "Last m")->required();
  add_out(thresh);

  auto* corpus = app.add_subcommand("corpus", "Run the invariant suite over a corpus spec");
  corpus->add_option("spec", input, "Corpus spec (JSON)")->required();
  corpus->add_option("--threads", threads, "Worker threads (0: all cores)");
  corpus->add_option("--seed", seed, "Seed for families without explicit seeds");
  corpus->add_option("--max-vertices", max_vertices, "Vertex guard for generated graphs");
  add_out(corpus);

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", gen_args, "Parameters, positional or name=value");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"edges", "json"}));
  gen->add_option("--max-vertices", max_vertices, "Vertex guard");
  add_out(gen);

  auto* simplex = app.add_subcommand("simplex", "Simplex graph S(G) and the S(G)# = G check");
  add_input(simplex);
  simplex->add_option("--max-cliques", max_cliques, "Clique-count guard");
  add_out(simplex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? pcube::exit_code::ok : pcube::exit_code::input_error;
  }

  const std::vector<std::string> echo(argv + 1, argv + argc);
  try {
    if (gen->parsed()) {
      const auto g = pcube::generate(family, parse_gen_params(family, gen_args), seed, max_vertices).graph;
      if (format == "json") {
        write_text(out_path, pcube::to_json_text(g) + "\n");
      } else {
        std::ostringstream text;
        pcube::write_edge_list(text, g);
        write_text(out_path, text.str());
      }
      std::cerr << family << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      return pcube::exit_code::ok;
    }

    std::string command;
    std::string digest;
    pcube::CommandOutput result;
    if (thresh->parsed()) {
      command = "thresholds";
      result = pcube::cmd_thresholds(thresholds);
    } else if (corpus->parsed()) {
      command = "corpus";
      const auto text = read_text(input);
      digest = pcube::text_digest(text);
      json spec;
      if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
        try {
          spec = json::parse(text);
        } catch (const json::parse_error& e) {
          throw pcube::InputError(std::string("corpus spec: ") + e.what());
        }
      }
      pcube::CorpusOptions options;
      options.threads = threads;
      options.seed = seed;
      options.max_vertices = max_vertices;
      result = pcube::cmd_corpus(spec, options);
    } else {
      const auto g = pcube::read_graph(read_text(input));
      digest = pcube::input_digest(g);
      if (analyze->parsed()) {
        command = "analyze";
        result = pcube::cmd_analyze(g);
      } else if (verify->parsed()) {
        command = "verify";
        result = pcube::cmd_verify(g);
      } else if (closure->parsed()) {
        command = "closure";
        pcube::CycleLimits limits;
        limits.max_vertices = max_vertices;
        result = pcube::cmd_closure(g, limits);
      } else {
        command = "simplex";
        result = pcube::cmd_simplex(g, max_cliques);
      }
    }
    const auto report = pcube::envelope(command, echo, digest, std::move(result.results), std::move(result.timings));
    write_text(out_path, report.dump(2) + "\n");
    std::cerr << command << ": " << result.summary << "\n";
    return result.exit_code;
  } catch (const pcube::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pcube::exit_code::input_error;
  } catch (const pcube::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return pcube::exit_code::guard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return pcube::exit_code::verification_failure;
  }
}
