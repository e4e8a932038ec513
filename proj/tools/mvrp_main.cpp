// mvrp: generate instances, solve them with SVNS or the exact enumerator,
// and run the benchmark experiments into CSV files.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mvrp/construction.hpp"
#include "mvrp/exact.hpp"
#include "mvrp/instances.hpp"
#include "mvrp/model.hpp"
#include "mvrp/svns.hpp"

namespace fs = std::filesystem;

namespace {

std::string fmt_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

// Short human-oriented formatting for config labels and summaries.
std::string fmt_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

int worker_count(std::size_t tasks) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("MVRP_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 0) {
      throw std::runtime_error("MVRP_THREADS must be a non-negative integer, got '" +
                               std::string(env) + "'");
    }
    if (parsed > 0) workers = static_cast<unsigned>(parsed);
  }
  if (workers > tasks) workers = static_cast<unsigned>(tasks);
  return static_cast<int>(workers == 0 ? 1 : workers);
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::string klass = "small";
  int count = 1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool alternate_vehicles = false;
};

int run_generate(const GenerateOptions& opt) {
  fs::create_directories(opt.out_dir);
  for (int i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    mvrp::GeneratorSpec spec;
    if (opt.klass == "small") {
      spec = mvrp::small_spec(seed);
    } else if (opt.klass == "medium") {
      spec = mvrp::medium_spec(seed, opt.alternate_vehicles);
    } else {
      spec = mvrp::large_spec(seed, opt.alternate_vehicles);
    }
    const mvrp::Instance instance = mvrp::generate(spec);
    char name[64];
    std::snprintf(name, sizeof(name), "%s-%04llu.inst", opt.klass.c_str(),
                  static_cast<unsigned long long>(seed));
    const fs::path path = fs::path(opt.out_dir) / name;
    mvrp::write_instance(instance, path.string());
    std::cout << path.string() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// solve / exact

struct SolveOptions {
  std::string instance_path;
  std::uint64_t seed = 1;
  int k_max = 30;
  int unimproved_max = 40;
  double alpha = -1.0;  // < 0 means keep the instance value
  double beta = -1.0;
  double gamma = -1.0;
  std::string trace_path;
  std::string out_path;
};

void apply_weight_overrides(mvrp::Instance& instance, double alpha, double beta, double gamma) {
  if (alpha >= 0.0) instance.weights.alpha = alpha;
  if (beta >= 0.0) instance.weights.beta = beta;
  if (gamma >= 0.0) instance.weights.gamma = gamma;
}

void print_breakdown(const mvrp::CostBreakdown& cost) {
  std::cout << "path_cost " << fmt_real(cost.path_cost) << '\n'
            << "replenishment_cost " << fmt_real(cost.replenishment_cost) << '\n'
            << "hri_cost " << fmt_real(cost.hri_cost) << '\n'
            << "team_cost " << fmt_real(cost.team_cost_total) << '\n'
            << "total " << fmt_real(cost.total) << '\n';
}

void write_trace_csv(const mvrp::SearchTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "iteration,phase,k,candidate_total,current_total,incumbent_total,"
         "gap_percent,accepted,recentered\n";
  for (const mvrp::TraceRecord& rec : trace) {
    out << rec.iteration << ','
        << (rec.phase == mvrp::TracePhase::construction ? "construction" : "iteration") << ','
        << rec.k << ',' << fmt_real(rec.candidate_total) << ','
        << fmt_real(rec.current_total) << ',' << fmt_real(rec.incumbent_total) << ','
        << fmt_real(rec.gap_percent) << ',' << (rec.accepted ? 1 : 0) << ','
        << (rec.recentered ? 1 : 0) << '\n';
  }
}

int run_solve(const SolveOptions& opt) {
  mvrp::Instance instance = mvrp::read_instance(opt.instance_path);
  apply_weight_overrides(instance, opt.alpha, opt.beta, opt.gamma);

  mvrp::SvnsParams params;
  params.k_max = opt.k_max;
  params.unimproved_max = opt.unimproved_max;
  params.seed = opt.seed;

  std::cout << "instance " << opt.instance_path << '\n'
            << "kmax " << params.k_max << '\n'
            << "unimproved-max " << params.unimproved_max << '\n'
            << "seed " << params.seed << '\n'
            << "weights " << fmt_short(instance.weights.alpha) << ' '
            << fmt_short(instance.weights.beta) << ' '
            << fmt_short(instance.weights.gamma) << '\n';

  const mvrp::SvnsResult result = mvrp::solve(instance, params);
  print_breakdown(result.cost);

  if (!opt.out_path.empty()) mvrp::write_solution(result.solution, result.cost, opt.out_path);
  if (!opt.trace_path.empty()) write_trace_csv(result.trace, opt.trace_path);
  return 0;
}

struct ExactOptions {
  std::string instance_path;
  std::string out_path;
};

int run_exact(const ExactOptions& opt) {
  const mvrp::Instance instance = mvrp::read_instance(opt.instance_path);
  const mvrp::ExactResult result = mvrp::solve_exact(instance);
  std::cout << "instance " << opt.instance_path << '\n'
            << "partitions " << result.stats.partitions << '\n'
            << "route_orders " << result.stats.route_orders << '\n';
  print_breakdown(result.cost);
  if (!opt.out_path.empty()) mvrp::write_solution(result.solution, result.cost, opt.out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string instance_dir;
  std::string out_path;
  std::string pareto_path;  // weights subcommand only
  std::uint64_t seed = 1;
};

// One (instance, configuration) run request and its finished row.
struct BenchTask {
  std::string instance_name;
  fs::path instance_path;
  std::string config;
  int config_index = 0;
  mvrp::SvnsParams params;
  mvrp::Weights weights;
  bool override_weights = false;
};

struct BenchRow {
  std::string instance_name;
  int config_index = 0;
  std::string csv;     // fully formatted row
  std::string pareto;  // "travel hri" pair (weights subcommand)
  bool failed = false;
};

std::vector<fs::path> list_instances(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("'" + dir + "' is not a directory");
  }
  std::vector<fs::path> paths;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".inst") {
      paths.push_back(entry.path());
    }
  }
  if (paths.empty()) {
    throw std::runtime_error("no .inst files in '" + dir + "'");
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::string csv_escape(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

BenchRow run_bench_task(const BenchTask& task) {
  BenchRow row;
  row.instance_name = task.instance_name;
  row.config_index = task.config_index;
  std::ostringstream csv;
  csv << task.instance_name << ',' << task.params.seed << ',' << task.config << ',';
  try {
    mvrp::Instance instance = mvrp::read_instance(task.instance_path.string());
    if (task.override_weights) instance.weights = task.weights;

    const auto start = std::chrono::steady_clock::now();
    const mvrp::SvnsResult result = mvrp::solve(instance, task.params);
    const auto stop = std::chrono::steady_clock::now();
    const long long runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    const double construct_total = result.trace.front().current_total;
    const double svns_total = result.cost.total;
    const double improvement_pct =
        construct_total > 0.0 ? 100.0 * (construct_total - svns_total) / construct_total : 0.0;

    csv << fmt_real(construct_total) << ',' << fmt_real(svns_total) << ','
        << fmt_real(improvement_pct) << ',' << runtime_ms << ','
        << fmt_real(result.cost.path_cost) << ',' << fmt_real(result.cost.replenishment_cost)
        << ',' << fmt_real(result.cost.hri_cost) << ',' << fmt_real(result.cost.team_cost_total)
        << ',' << fmt_real(result.cost.total) << ',';

    std::ostringstream pareto;
    pareto << fmt_real(result.cost.path_cost + result.cost.replenishment_cost) << ' '
           << fmt_real(result.cost.hri_cost);
    row.pareto = pareto.str();
  } catch (const std::exception& error) {
    csv << ",,,,,,,," << csv_escape(error.what());
    row.failed = true;
  }
  row.csv = csv.str();
  return row;
}

int run_bench(const BenchOptions& opt, const std::vector<BenchTask>& tasks, bool emit_pareto) {
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  const int workers = worker_count(tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        rows[i] = run_bench_task(tasks[i]);
      }
    });
  }
  for (std::thread& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.instance_name != b.instance_name) return a.instance_name < b.instance_name;
    return a.config_index < b.config_index;
  });

  std::ofstream out(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + opt.out_path + "' for writing");
  out << "instance,seed,config,construct_total,svns_total,improvement_pct,runtime_ms,"
         "path_cost,replenishment_cost,hri_cost,team_cost,total,error\n";
  bool any_failed = false;
  for (const BenchRow& row : rows) {
    out << row.csv << '\n';
    any_failed = any_failed || row.failed;
  }
  out.close();

  if (emit_pareto && !opt.pareto_path.empty()) {
    std::ofstream pareto(opt.pareto_path, std::ios::binary | std::ios::trunc);
    if (!pareto) {
      throw std::runtime_error("cannot open '" + opt.pareto_path + "' for writing");
    }
    pareto << "# travel_cost hri_cost\n";
    for (const BenchRow& row : rows) {
      if (!row.failed) pareto << row.pareto << '\n';
    }
  }

  std::cout << opt.out_path << ": " << rows.size() << " row(s)"
            << (any_failed ? ", with failures" : "") << '\n';
  return any_failed ? 1 : 0;
}

std::vector<BenchTask> make_tasks_improvement(const std::vector<fs::path>& instances,
                                              std::uint64_t seed) {
  std::vector<BenchTask> tasks;
  for (const fs::path& path : instances) {
    BenchTask task;
    task.instance_name = path.filename().string();
    task.instance_path = path;
    task.config = "default";
    task.params.seed = seed;
    tasks.push_back(std::move(task));
  }
  return tasks;
}

std::vector<BenchTask> make_tasks_params(const std::vector<fs::path>& instances,
                                         std::uint64_t seed) {
  static constexpr int kKmaxGrid[] = {10, 20, 30, 40};
  static constexpr int kUnimprovedGrid[] = {10, 20, 40};
  std::vector<BenchTask> tasks;
  for (const fs::path& path : instances) {
    int config_index = 0;
    for (int k_max : kKmaxGrid) {
      for (int unimproved : kUnimprovedGrid) {
        BenchTask task;
        task.instance_name = path.filename().string();
        task.instance_path = path;
        task.config = "kmax=" + std::to_string(k_max) +
                      ";unimproved=" + std::to_string(unimproved);
        task.config_index = config_index++;
        task.params.seed = seed;
        task.params.k_max = k_max;
        task.params.unimproved_max = unimproved;
        tasks.push_back(std::move(task));
      }
    }
  }
  return tasks;
}

std::vector<BenchTask> make_tasks_neighborhoods(const std::vector<fs::path>& instances,
                                                std::uint64_t seed) {
  static constexpr std::pair<unsigned, const char*> kNeighborhoods[] = {
      {mvrp::kNeighborhoodTwoOpt, "2-opt-intra"},
      {mvrp::kNeighborhoodRemoveInsert, "remove-insert"},
      {mvrp::kNeighborhoodSwapInter, "swap-inter"},
      {mvrp::kNeighborhoodSeqExchange, "seq-exchange"},
      {mvrp::kNeighborhoodAsgnRule3, "asgn-rule3"},
  };
  std::vector<BenchTask> tasks;
  for (const fs::path& path : instances) {
    int config_index = 0;
    for (const auto& [mask, name] : kNeighborhoods) {
      BenchTask task;
      task.instance_name = path.filename().string();
      task.instance_path = path;
      task.config = name;
      task.config_index = config_index++;
      task.params.seed = seed;
      task.params.neighborhood_mask = mask;
      tasks.push_back(std::move(task));
    }
  }
  return tasks;
}

// The published weight grid: every (alpha, beta, gamma) from
// {0, 0.1, 0.3, 0.6, 1} summing to 1 — enumerated in tenths to keep the
// sum test exact.
std::vector<mvrp::Weights> weight_grid() {
  static constexpr int kLevels[] = {0, 1, 3, 6, 10};
  std::vector<mvrp::Weights> grid;
  for (int a : kLevels) {
    for (int b : kLevels) {
      for (int g : kLevels) {
        if (a + b + g == 10) {
          grid.push_back({a / 10.0, b / 10.0, g / 10.0});
        }
      }
    }
  }
  return grid;
}

std::vector<BenchTask> make_tasks_weights(const std::vector<fs::path>& instances,
                                          std::uint64_t seed) {
  const std::vector<mvrp::Weights> grid = weight_grid();
  std::vector<BenchTask> tasks;
  for (const fs::path& path : instances) {
    int config_index = 0;
    for (const mvrp::Weights& weights : grid) {
      BenchTask task;
      task.instance_name = path.filename().string();
      task.instance_path = path;
      task.config = "a=" + fmt_short(weights.alpha) + ";b=" + fmt_short(weights.beta) +
                    ";g=" + fmt_short(weights.gamma);
      task.config_index = config_index++;
      task.params.seed = seed;
      task.weights = weights;
      task.override_weights = true;
      tasks.push_back(std::move(task));
    }
  }
  return tasks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-vehicle routing with replenishment and HRI costs"};
  app.require_subcommand(1);

  GenerateOptions gen_opt;
  CLI::App* gen = app.add_subcommand("generate", "generate random instances");
  gen->add_option("--class", gen_opt.klass, "instance class")
      ->check(CLI::IsMember({"small", "medium", "large"}))
      ->capture_default_str();
  gen->add_option("--count", gen_opt.count, "number of instances")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen->add_option("--seed", gen_opt.seed, "seed of the first instance; instance i uses seed+i")
      ->capture_default_str();
  gen->add_option("--out-dir", gen_opt.out_dir, "output directory")->capture_default_str();
  gen->add_flag("--alt-vehicles", gen_opt.alternate_vehicles,
                "use the alternate vehicle count (5 for medium, 8 for large)");

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance with SVNS");
  solve->add_option("--instance", solve_opt.instance_path, "instance file")->required();
  solve->add_option("--seed", solve_opt.seed, "search seed")->capture_default_str();
  solve->add_option("--kmax", solve_opt.k_max, "max shaking intensity")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--unimproved-max", solve_opt.unimproved_max,
                    "non-improving iterations before stopping")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--alpha", solve_opt.alpha, "override travel weight");
  solve->add_option("--beta", solve_opt.beta, "override HRI weight");
  solve->add_option("--gamma", solve_opt.gamma, "override team weight");
  solve->add_option("--trace", solve_opt.trace_path, "write the search trace CSV here");
  solve->add_option("--out", solve_opt.out_path, "write the solution file here");

  ExactOptions exact_opt;
  CLI::App* exact = app.add_subcommand("exact", "solve one small instance exactly");
  exact->add_option("--instance", exact_opt.instance_path, "instance file")->required();
  exact->add_option("--out", exact_opt.out_path, "write the solution file here");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "run an experiment over an instance directory");
  bench->require_subcommand(1);
  CLI::App* bench_improvement =
      bench->add_subcommand("improvement", "SVNS improvement over construction");
  CLI::App* bench_params = bench->add_subcommand("params", "k_max / unimproved_max grid");
  CLI::App* bench_neighborhoods =
      bench->add_subcommand("neighborhoods", "one local-search neighborhood at a time");
  CLI::App* bench_weights = bench->add_subcommand("weights", "objective weight sweep");
  for (CLI::App* sub : {bench_improvement, bench_params, bench_neighborhoods, bench_weights}) {
    sub->add_option("--instances", bench_opt.instance_dir, "directory of .inst files")
        ->required();
    sub->add_option("--out", bench_opt.out_path, "output CSV path")->required();
    sub->add_option("--seed", bench_opt.seed, "search seed used for every run")
        ->capture_default_str();
  }
  bench_weights->add_option("--pareto", bench_opt.pareto_path,
                            "also write travel/HRI pairs to this plot-data file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_generate(gen_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (exact->parsed()) return run_exact(exact_opt);
    if (bench->parsed()) {
      const std::vector<fs::path> instances = list_instances(bench_opt.instance_dir);
      std::vector<BenchTask> tasks;
      bool emit_pareto = false;
      if (bench_improvement->parsed()) {
        tasks = make_tasks_improvement(instances, bench_opt.seed);
      } else if (bench_params->parsed()) {
        tasks = make_tasks_params(instances, bench_opt.seed);
      } else if (bench_neighborhoods->parsed()) {
        tasks = make_tasks_neighborhoods(instances, bench_opt.seed);
      } else {
        tasks = make_tasks_weights(instances, bench_opt.seed);
        emit_pareto = true;
      }
      return run_bench(bench_opt, tasks, emit_pareto);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
