// Command-line driver: generate regular graphs, compute exact and empirical
// mixing rates for simple and non-backtracking walks, run max-load
// experiments, and dump rate curves over lambda.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nbwalk/io.hpp"
#include "nbwalk/reports.hpp"

namespace {

using namespace nbwalk;

constexpr int kExitUsage = 1;
constexpr int kExitGeneration = 2;
constexpr int kExitNumerics = 3;

struct GraphSource {
  std::string file;
  std::string gen;
  std::uint64_t seed = 0;
};

// generator specs: complete:N | random:N,D | decorated:M,G,D
RegularGraph build_from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "generator spec needs the form kind:args, got " + spec);
  }
  const std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  try {
    while (pos < rest.size()) {
      std::size_t used = 0;
      args.push_back(std::stoi(rest.substr(pos), &used));
      pos += used;
      if (pos < rest.size()) {
        if (rest[pos] != ',') throw std::invalid_argument(rest);
        ++pos;
      }
    }
  } catch (const std::exception&) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "bad generator arguments in spec: " + spec);
  }

  if (kind == "complete" && args.size() == 1) {
    return complete_graph(args[0]);
  }
  if (kind == "random" && args.size() == 2) {
    return random_regular(args[0], args[1], seed);
  }
  if (kind == "decorated" && args.size() == 3) {
    return cycle_decorated_expander(args[0], args[1], args[2], seed).graph;
  }
  throw GraphError(GraphError::Kind::BadArgument,
                   "unknown generator spec: " + spec +
                       " (expected complete:N | random:N,D | decorated:M,G,D)");
}

RegularGraph load_graph(const GraphSource& src) {
  if (!src.file.empty()) return read_graph_json(src.file);
  return build_from_spec(src.gen, src.seed);
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* file = cmd->add_option("--graph", src.file, "graph JSON file");
  auto* gen = cmd->add_option(
      "--gen", src.gen, "generator spec (complete:N | random:N,D | decorated:M,G,D)");
  file->excludes(gen);
  gen->excludes(file);
  cmd->add_option("--seed", src.seed, "seed for generators and sampling");
}

double resolve_threshold(const std::string& text, int n) {
  if (text == "half-n") return 1.0 / (2.0 * n);
  if (text == "n-squared") return 1.0 / (static_cast<double>(n) * n);
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && value > 0.0) return value;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(
      "--threshold must be half-n, n-squared, or a positive number");
}

void require_one_source(const GraphSource& src) {
  if (src.file.empty() == src.gen.empty()) {
    throw CLI::ValidationError("give exactly one of --graph or --gen");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"mixing rates and max loads of walks on regular graphs"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "build a graph file");
  GraphSource gen_src;
  std::string gen_out;
  generate->add_option("--gen", gen_src.gen, "generator spec")->required();
  generate->add_option("--seed", gen_src.seed, "generator seed");
  generate->add_option("--out", gen_out, "output graph JSON path")->required();

  // rates
  auto* rates = app.add_subcommand(
      "rates", "spectrum, lambda, and theoretical rates for both walks");
  GraphSource rates_src;
  add_graph_source(rates, rates_src);
  std::string rates_out, spectrum_out;
  rates->add_option("--out", rates_out, "write the JSON report here");
  rates->add_option("--spectrum-out", spectrum_out,
                    "write the full spectrum as CSV");

  // evolve
  auto* evolve = app.add_subcommand(
      "evolve", "exact deviation profile and fitted mixing rate");
  GraphSource evolve_src;
  add_graph_source(evolve, evolve_src);
  std::string walk_text = "nb";
  int horizon = 200;
  std::string threshold_text = "half-n";
  int sampled_starts = 0;
  std::string evolve_out;
  evolve->add_option("--walk", walk_text, "simple or nb")
      ->check(CLI::IsMember({"simple", "nb"}));
  evolve->add_option("--horizon", horizon, "number of steps to evolve");
  evolve->add_option("--threshold", threshold_text,
                     "half-n, n-squared, or a positive real");
  evolve->add_option("--sampled-starts", sampled_starts,
                     "restrict the start-vertex max to a random sample");
  evolve->add_option("--out", evolve_out, "basename for .json and .csv output");

  // maxload
  auto* maxload = app.add_subcommand(
      "maxload", "paired nb / simple / balls-and-bins max-load trials");
  GraphSource maxload_src;
  add_graph_source(maxload, maxload_src);
  int steps = -1;
  int trials = 50;
  std::string maxload_out;
  maxload->add_option("--steps", steps, "walk length (default: n)");
  maxload->add_option("--trials", trials, "number of paired trials");
  maxload->add_option("--out", maxload_out, "basename for .json and .csv output");

  // ratecurve
  auto* ratecurve = app.add_subcommand(
      "ratecurve", "closed-form rho and rho_nb across lambda in [0, d]");
  std::vector<int> degrees{3, 10};
  int grid_points = 201;
  std::string curve_out = "ratecurve";
  ratecurve->add_option("--degree", degrees, "degrees to tabulate");
  ratecurve->add_option("--grid", grid_points, "number of lambda samples");
  ratecurve->add_option("--out", curve_out, "output prefix (PREFIX_dD.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      if (gen_src.gen.empty()) {
        std::cerr << "generate needs --gen\n";
        return kExitUsage;
      }
      const RegularGraph g = build_from_spec(gen_src.gen, gen_src.seed);
      write_graph_json(g, gen_out);
      std::cout << "wrote n=" << g.n() << " d=" << g.degree() << " graph to "
                << gen_out << " (seed " << gen_src.seed << ")\n";
      return 0;
    }

    if (*rates) {
      require_one_source(rates_src);
      const RegularGraph g = load_graph(rates_src);
      const RatesReport rep = rates_report(g);
      const auto j = rates_json(rep);
      if (!rates_out.empty()) write_text_file(rates_out, j.dump(2) + "\n");
      if (!spectrum_out.empty()) {
        if (rep.lambda_estimated) {
          std::cerr << "no dense spectrum at n=" << g.n()
                    << "; --spectrum-out skipped\n";
        } else {
          write_spectrum_csv(rep.spectrum, spectrum_out);
        }
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*evolve) {
      require_one_source(evolve_src);
      const RegularGraph g = load_graph(evolve_src);
      if (g.n() > 5000 && sampled_starts == 0) {
        std::cerr << "n=" << g.n()
                  << " needs --sampled-starts for the exact evolution path\n";
        return kExitUsage;
      }
      const WalkKind walk =
          walk_text == "simple" ? WalkKind::kSimple : WalkKind::kNonBacktracking;
      const double threshold = resolve_threshold(threshold_text, g.n());
      const MixingReport rep = mixing_report(g, walk, horizon, threshold,
                                             sampled_starts, evolve_src.seed);

      RatesReport rates_rep = rates_report(g);
      const double theory = walk == WalkKind::kSimple ? rates_rep.rho_simple
                                                      : rates_rep.rho_nb;
      const auto j = mixing_json(rep, rates_rep.lambda, theory, evolve_src.seed);
      if (!evolve_out.empty()) {
        write_text_file(evolve_out + ".json", j.dump(2) + "\n");
        write_deviations_csv(rep, evolve_out + ".csv");
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*maxload) {
      require_one_source(maxload_src);
      const RegularGraph g = load_graph(maxload_src);
      const int effective_steps = steps > 0 ? steps : g.n();
      const LoadReport rep =
          load_experiment(g, effective_steps, trials, maxload_src.seed);
      const auto j = load_json(rep);
      if (!maxload_out.empty()) {
        write_text_file(maxload_out + ".json", j.dump(2) + "\n");
        write_load_csv(rep, maxload_out + ".csv");
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }

    if (*ratecurve) {
      if (grid_points < 1) {
        std::cerr << "--grid must be >= 1\n";
        return kExitUsage;
      }
      for (int d : degrees) {
        std::vector<double> grid(grid_points);
        for (int i = 0; i < grid_points; ++i) {
          grid[i] = grid_points == 1
                        ? 0.0
                        : static_cast<double>(d) * i / (grid_points - 1);
        }
        const auto rows = rate_curve(d, grid);
        const std::string path = curve_out + "_d" + std::to_string(d) + ".csv";
        write_rate_curve_csv(rows, path);
        std::cout << "wrote " << path << '\n';
      }
      return 0;
    }
  } catch (const GraphError& e) {
    std::cerr << "generation error: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvolveError& e) {
    if (e.kind() == EvolveError::Kind::BadArgument ||
        e.kind() == EvolveError::Kind::DegreeTooSmall) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumerics;
  } catch (const MonteCarloError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpectraError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumerics;
  } catch (const NbTheoryError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumerics;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerics;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
