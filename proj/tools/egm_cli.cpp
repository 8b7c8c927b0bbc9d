// egm: command-line front end for the eg-matchlab library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "egm/bounds.hpp"
#include "egm/cover.hpp"
#include "egm/error.hpp"
#include "egm/extremal.hpp"
#include "egm/graph.hpp"
#include "egm/harness.hpp"
#include "egm/matching.hpp"
#include "egm/moves.hpp"
#include "egm/serialize.hpp"

namespace {

using egm::Json;

constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw egm::InputError("cannot write " + path);
    out << text;
  }
  void json(const Json& j) const { write(j.dump() + "\n"); }
};

egm::Graph load_graph(const std::string& path) {
  if (path == "-") return egm::read_edge_list(std::cin);
  return egm::read_edge_list_file(path);
}

std::string slurp_or_inline(const std::string& arg) {
  // Inline JSON starts with '{'; anything else is a path.
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw egm::InputError("cannot read partition file " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// EG_MATCHLAB_BUDGET, when set, replaces every node budget.
std::uint64_t budget_or(std::uint64_t fallback) {
  const char* env = std::getenv("EG_MATCHLAB_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0)
    throw egm::InputError(std::string("EG_MATCHLAB_BUDGET must be a positive integer, got '") + env + "'");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal matching-number subgraphs, Erdos-Gallai checks, bounds and G(n,p) experiments"};
  app.require_subcommand(1);
  Output output;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--out", output.path, "Write the result to this file instead of stdout");
  app.add_option("--threads", threads, "Cap on worker threads")->check(CLI::PositiveNumber);

  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) and print it as an edge list");
  std::uint64_t gen_n = 0;
  double gen_p = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->callback([&] {
    action = [&] {
      const egm::Graph g = egm::gen_gnp({gen_n, gen_p, gen_seed});
      std::ostringstream out;
      egm::write_edge_list(out, g);
      output.write(out.str());
    };
  });

  // nu
  auto* nu = app.add_subcommand("nu", "Maximum matching");
  std::string nu_file;
  nu->add_option("FILE", nu_file, "Edge-list file ('-' for stdin)")->required();
  nu->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(nu_file);
      Json j = egm::to_json(egm::max_matching(g));
      j["n"] = g.order();
      j["m"] = g.size();
      output.json(j);
    };
  });

  // tau
  auto* tau = app.add_subcommand("tau", "Vertex cover number");
  std::string tau_file;
  std::uint64_t tau_budget = egm::kDefaultCoverBudget;
  tau->add_option("FILE", tau_file, "Edge-list file")->required();
  tau->add_option("--budget", tau_budget, "Search node budget");
  tau->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(tau_file);
      const auto res = egm::minimum_vertex_cover(g, budget_or(tau_budget));
      output.json({{"tau", res.size}, {"cover", egm::to_json(res.cover)}, {"nodes", res.nodes}});
    };
  });

  // tb-witness
  auto* tb = app.add_subcommand("tb-witness", "Tutte-Berge deficiency witness");
  std::string tb_file;
  std::string tb_mode = "exhaustive";
  std::size_t tb_n_exact = 20;
  tb->add_option("FILE", tb_file, "Edge-list file")->required();
  tb->add_option("--mode", tb_mode, "exhaustive or heuristic")->check(CLI::IsMember({"exhaustive", "heuristic"}));
  tb->add_option("--n-exact", tb_n_exact, "Largest n for exhaustive mode");
  tb->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(tb_file);
      egm::TBOptions opt;
      opt.mode = tb_mode == "exhaustive" ? egm::WitnessMode::kExhaustive : egm::WitnessMode::kHeuristic;
      opt.n_exact = tb_n_exact;
      Json j = egm::to_json(egm::tutte_berge_witness(g, opt));
      j["nu"] = egm::matching_number(g);
      output.json(j);
    };
  });

  // extremal
  auto* ext = app.add_subcommand("extremal", "Largest subgraph with matching number k");
  std::string ext_file;
  std::size_t ext_k = 0;
  std::string ext_mode = "exact";
  std::size_t ext_n_exact = egm::kDefaultExactExtremal;
  std::optional<std::uint64_t> ext_seed;
  ext->add_option("FILE", ext_file, "Edge-list file")->required();
  ext->add_option("--k", ext_k, "Target matching number")->required();
  ext->add_option("--mode", ext_mode, "exact or heur")->check(CLI::IsMember({"exact", "heur"}));
  ext->add_option("--n-exact", ext_n_exact, "Largest n for exact mode (at most 16)");
  ext->add_option("--seed", ext_seed, "Seed for heuristic restarts (required with --mode heur)");
  ext->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(ext_file);
      egm::ExtremalOptions opt;
      opt.n_exact = ext_n_exact;
      opt.enumeration_budget = budget_or(opt.enumeration_budget);
      if (ext_mode == "heur") {
        if (!ext_seed) throw egm::InputError("--mode heur needs --seed");
        opt.mode = egm::ExtremalMode::kHeuristic;
        opt.seed = *ext_seed;
      }
      output.json(egm::to_json(egm::extremal(g, ext_k, opt)));
    };
  });

  // egcheck
  auto* eg = app.add_subcommand("egcheck", "Erdos-Gallai property verdict (all k unless --k)");
  std::string eg_file;
  std::optional<std::size_t> eg_k;
  std::size_t eg_n_exact = egm::kDefaultExactExtremal;
  eg->add_option("FILE", eg_file, "Edge-list file")->required();
  eg->add_option("--k", eg_k, "Single matching number to check");
  eg->add_option("--n-exact", eg_n_exact, "Largest n for the exact search (at most 16)");
  eg->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(eg_file);
      egm::ExtremalOptions opt;
      opt.n_exact = eg_n_exact;
      if (eg_k) {
        output.json(egm::to_json(egm::eg_check(g, *eg_k, opt)));
        return;
      }
      Json per_k = Json::array();
      bool holds = true;
      for (const auto& v : egm::eg_check_all(g, opt)) {
        holds = holds && v.holds;
        per_k.push_back(egm::to_json(v));
      }
      output.json({{"verdict", holds ? "HOLDS" : "FAILS"}, {"per_k", per_k}});
    };
  });

  // improve
  auto* imp = app.add_subcommand("improve", "Apply case moves to a partition; one JSON line per move");
  std::string imp_file;
  std::string imp_pi;
  std::optional<std::uint64_t> imp_seed;
  std::size_t imp_steps = 100;
  imp->add_option("FILE", imp_file, "Edge-list file")->required();
  imp->add_option("--pi", imp_pi, "Partition JSON, inline or a path")->required();
  imp->add_option("--seed", imp_seed, "Seed for the random split of case 3")->required();
  imp->add_option("--max-steps", imp_steps, "Step limit");
  imp->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(imp_file);
      const egm::Decomposition pi = egm::parse_decomposition(slurp_or_inline(imp_pi), g.order());
      const egm::ImproveResult res = egm::improve(g, pi, imp_steps, *imp_seed);
      std::string lines;
      for (std::size_t i = 0; i < res.trace.size(); ++i) {
        Json j = egm::to_json(res.trace[i]);
        j["step"] = i;
        j["accepted"] = i < res.accepted;
        lines += j.dump() + "\n";
      }
      Json last = {{"final", egm::to_json(res.final_partition)},
                   {"size", egm::decomposition_size(g, res.final_partition)},
                   {"accepted", res.accepted},
                   {"stop", egm::to_string(res.stop)}};
      if (!res.detail.empty()) last["detail"] = res.detail;
      lines += last.dump() + "\n";
      output.write(lines);
    };
  });

  // bounds and budget share the budget options.
  std::string tag;
  std::uint64_t budget_n = 0;
  std::string budget_p = "auto";
  double budget_eps = 0.5;
  auto run_budget = [&] {
    egm::BudgetQuery q;
    q.tag = egm::parse_budget_tag(tag);
    q.n = budget_n;
    q.epsilon = budget_eps;
    if (budget_p == "auto") {
      q.p = egm::dense_p(budget_n);
    } else {
      try {
        std::size_t used = 0;
        q.p = std::stod(budget_p, &used);
        if (used != budget_p.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw egm::InputError("--p must be 'auto' or a number, got '" + budget_p + "'");
      }
    }
    output.json(egm::to_json(egm::union_budget(q)));
  };

  auto* bounds = app.add_subcommand("bounds", "Binomial tail bounds, or a union budget with --tag");
  std::uint64_t b_m = 1;
  double b_q = 0;
  double b_lambda = 0;
  std::optional<double> b_k;
  bounds->add_option("--m", b_m, "Trials");
  bounds->add_option("--q", b_q, "Success probability");
  bounds->add_option("--lambda", b_lambda, "Deviation");
  bounds->add_option("--K", b_k, "Large-deviation multiplier");
  bounds->add_option("--tag", tag, "Budget tag (delegates to the budget subcommand)");
  bounds->add_option("--n", budget_n, "n for --tag");
  bounds->add_option("--p", budget_p, "p for --tag: auto (8 ln n/n) or a number");
  bounds->add_option("--eps", budget_eps, "epsilon for --tag");
  bounds->callback([&] {
    action = [&] {
      if (!tag.empty()) {
        run_budget();
        return;
      }
      const egm::TailQuery q{b_m, b_q, b_lambda, b_k.value_or(0)};
      const double mu = q.mu();
      Json j = {{"m", b_m}, {"q", b_q}, {"lambda", b_lambda}, {"mu", mu}};
      j["chernoff_upper"] = egm::to_json(egm::chernoff_upper(q));
      j["chernoff_lower"] = egm::to_json(egm::chernoff_lower(q));
      j["exact_upper_tail"] = egm::binom_tail_exact(b_m, b_q, mu + b_lambda, egm::TailSide::kGreater);
      j["exact_lower_tail"] = egm::binom_tail_exact(b_m, b_q, mu - b_lambda, egm::TailSide::kLess);
      if (b_k) {
        j["K"] = *b_k;
        j["large_deviation"] = egm::to_json(egm::large_deviation(q));
        j["exact_large_tail"] = egm::binom_tail_exact(b_m, b_q, *b_k * mu, egm::TailSide::kGreater);
      }
      output.json(j);
    };
  });

  auto* budget = app.add_subcommand("budget", "Union-bound budget sum");
  budget->add_option("--tag", tag, "P24a P24b P25 P26 P27a P27b CUT C7a C7b")->required();
  budget->add_option("--n", budget_n, "Vertex count")->required();
  budget->add_option("--p", budget_p, "auto (8 ln n/n) or a number");
  budget->add_option("--eps", budget_eps, "epsilon");
  budget->callback([&] { action = run_budget; });

  // montecarlo
  auto* mc = app.add_subcommand("montecarlo", "Seeded G(n,p) trials; CSV records, JSON summary");
  std::string mc_regime = "dense";
  std::uint64_t mc_n = 0;
  std::size_t mc_trials = 0;
  std::uint64_t mc_seed = 0;
  std::string mc_out;
  std::optional<double> mc_p;
  double mc_c = 0.1;
  std::size_t mc_eg_cutoff = 12;
  std::size_t mc_density = 0;
  bool mc_moves = false;
  bool mc_skip_half = false;
  bool mc_skip_tau = false;
  mc->add_option("--regime", mc_regime, "dense, forest, middle or custom")
      ->check(CLI::IsMember({"dense", "forest", "middle", "custom"}));
  mc->add_option("--n", mc_n, "Vertex count")->required();
  mc->add_option("--trials", mc_trials, "Number of trials")->required();
  mc->add_option("--seed", mc_seed, "Master seed")->required();
  mc->add_option("--out", mc_out, "CSV file for per-trial records")->required();
  mc->add_option("--p", mc_p, "Edge probability (middle and custom regimes)");
  mc->add_option("--c", mc_c, "Forest regime constant: p = c/n");
  mc->add_option("--eg-cutoff", mc_eg_cutoff, "Largest n for exact EG checks");
  mc->add_option("--density-samples", mc_density, "Random sets per density event");
  mc->add_flag("--moves", mc_moves, "Improve a random partition at k = nu");
  mc->add_flag("--skip-empty-half", mc_skip_half, "Do not run the independence search");
  mc->add_flag("--skip-tau", mc_skip_tau, "Do not run the vertex cover search");
  mc->callback([&] {
    action = [&] {
      egm::RegimeSpec spec;
      spec.regime = egm::parse_regime(mc_regime);
      spec.n = mc_n;
      spec.p = mc_p;
      spec.forest_c = mc_c;
      spec.trials = mc_trials;
      spec.master_seed = mc_seed;
      spec.threads = threads;
      spec.checks.eg_cutoff = mc_eg_cutoff;
      spec.checks.density_samples = mc_density;
      spec.checks.moves = mc_moves;
      spec.checks.empty_half = !mc_skip_half;
      spec.checks.tau_eq_nu = !mc_skip_tau;
      spec.independence_budget = budget_or(spec.independence_budget);
      spec.cover_budget = budget_or(spec.cover_budget);
      const egm::TrialRun run = egm::run_trials(spec);
      std::ofstream csv(mc_out);
      if (!csv) throw egm::InputError("cannot write " + mc_out);
      egm::write_trials_csv(csv, run.records);
      std::cout << egm::to_json(run.summary).dump() << "\n";
    };
  });

  // certify
  auto* cert = app.add_subcommand("certify", "Isolated-P3 failure certificate");
  std::string cert_file;
  cert->add_option("FILE", cert_file, "Edge-list file")->required();
  cert->callback([&] {
    action = [&] {
      const egm::Graph g = load_graph(cert_file);
      output.json(egm::to_json(
          egm::certify(g, budget_or(egm::kDefaultIndependenceBudget), budget_or(egm::kDefaultCoverBudget))));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (action) action();
  } catch (const egm::CapabilityError& e) {
    std::cerr << "egm: " << e.what();
    if (e.lower() && e.upper()) std::cerr << " (bounds [" << *e.lower() << ", " << *e.upper() << "])";
    std::cerr << "\n";
    return kExitCapability;
  } catch (const egm::InputError& e) {
    std::cerr << "egm: " << e.what() << "\n";
    return kExitInput;
  } catch (const egm::StructuralError& e) {
    std::cerr << "egm: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
