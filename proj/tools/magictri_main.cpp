// magictri: model, verify, count, enumerate, and search for n-level magic
// triangles from the command line.
//
// Exit codes: 0 success; 1 for a triangle that is not magic (verify) or an
// exhausted search budget (solve); 2 for invalid arguments, malformed input,
// or I/O failures. All diagnostics go to stderr as single lines prefixed
// "magictri: error:"; data goes to stdout or --out.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "magictri/annealing.hpp"
#include "magictri/enumeration.hpp"
#include "magictri/experiments.hpp"
#include "magictri/io.hpp"
#include "magictri/reports.hpp"
#include "magictri/rng.hpp"
#include "magictri/symmetry.hpp"
#include "magictri/triangle.hpp"
#include "magictri/version.hpp"

namespace {

using namespace magictri;

int default_threads() {
  if (const char* env = std::getenv("MAGICTRI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) {
      throw CLI::ValidationError("MAGICTRI_THREADS must be an integer in [1, 1024], got \"" +
                                 std::string(env) + "\"");
    }
    return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << data;
  file.flush();
  if (!file) throw std::runtime_error("cannot write output file: " + path);
}

std::string flat_entries(const TriangleArrangement& t) {
  std::string line;
  for (int v : t.entries()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(v);
  }
  return line;
}

// Prints "name: done/total" to stderr roughly every `every` completions.
// Callable from worker threads.
class ProgressPrinter {
 public:
  ProgressPrinter(std::string name, std::uint64_t total, std::uint64_t every)
      : name_(std::move(name)), total_(total), every_(every == 0 ? 1 : every) {}

  void operator()() {
    const std::uint64_t done = done_.fetch_add(1) + 1;
    if (done % every_ != 0 && done != total_) return;
    std::lock_guard<std::mutex> lock(mutex_);
    std::cerr << name_ << ": " << done << "/" << total_ << "\n";
  }

 private:
  std::string name_;
  std::uint64_t total_;
  std::uint64_t every_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mutex_;
};

struct VerifyOpts {
  std::string file;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyOpts& opt) {
  RunMetadata meta = begin_run("verify");
  meta.flags = {{"file", opt.file}, {"format", opt.format}};
  const TriangleArrangement t = read_tri_file(opt.file);
  const bool magic = is_magic(t);
  if (opt.format == "json") {
    auto result = verify_result(t);
    finish_run(meta);
    write_output(opt.out, dump_report(meta, std::move(result)));
  } else {
    write_output(opt.out, verify_text(t));
  }
  return magic ? 0 : 1;
}

struct CanonOpts {
  std::string file;
  std::string out;
};

int cmd_canon(const CanonOpts& opt) {
  const TriangleArrangement t = read_tri_file(opt.file);
  write_output(opt.out, format_tri(canonical(t)));
  return 0;
}

struct CountOpts {
  int levels = 0;
  std::string method = "auto";
  std::string format = "json";
  std::string out;
  int threads = 1;
};

int cmd_count(const CountOpts& opt) {
  RunMetadata meta = begin_run("count");
  meta.flags = {{"levels", std::to_string(opt.levels)},
                {"method", opt.method},
                {"format", opt.format},
                {"threads", std::to_string(opt.threads)}};

  CountResult result;
  if (opt.method == "auto") {
    result = count_magic(opt.levels, opt.threads);
  } else if (opt.method == "brute") {
    result = brute_force_count(opt.levels);
  } else if (opt.method == "hexagon") {
    if (opt.levels != 3 && opt.levels != 4) {
      throw CLI::ValidationError("--method hexagon supports 3 or 4 levels");
    }
    result = count_magic(opt.levels, opt.threads);
  } else {
    if (opt.levels != 4) throw CLI::ValidationError("--method direct supports only 4 levels");
    ProgressPrinter progress("count: blocks", hexagon4_direct_block_count(), 56);
    const std::uint64_t ordered =
        hexagon4_direct_count(opt.threads, {}, std::ref(progress));
    result.levels = 4;
    result.method = CountMethod::hexagon;
    result.up_to_symmetry = ordered * 1296;
    result.raw = result.up_to_symmetry * 6;
  }

  if (opt.format == "text") {
    write_output(opt.out, count_text(result));
  } else {
    auto json = count_result(result);
    finish_run(meta);
    write_output(opt.out, dump_report(meta, std::move(json)));
  }
  return 0;
}

struct EnumerateOpts {
  int levels = 0;
  std::string out;
  std::uint64_t limit = 0;
};

int cmd_enumerate(const EnumerateOpts& opt) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out.empty() && opt.out != "-") {
    file.open(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
    out = &file;
  }

  std::uint64_t emitted = 0;
  bool truncated = false;
  const auto emit = [&](const TriangleArrangement& t) {
    *out << flat_entries(t) << '\n';
    ++emitted;
    if (opt.levels == 4 && emitted % 1000000 == 0) {
      std::cerr << "enumerate: " << emitted << " triangles\n";
    }
    if (opt.limit > 0 && emitted >= opt.limit) truncated = true;
  };

  switch (opt.levels) {
    case 1:
      emit(TriangleArrangement(1, std::vector<int>{1}));
      break;
    case 2:
      for (const auto& t : enumerate_2level()) {
        emit(t);
        if (truncated) break;
      }
      break;
    case 3: {
      struct Done {};
      try {
        enumerate_3level([&](const TriangleArrangement& t) {
          emit(t);
          if (truncated) throw Done{};
        });
      } catch (const Done&) {
      }
      break;
    }
    case 4:
      enumerate_4level([&](const TriangleArrangement& t) { emit(t); }, opt.limit);
      break;
    default:
      throw CLI::ValidationError("enumeration supports 1 to 4 levels, got " +
                                 std::to_string(opt.levels));
  }

  out->flush();
  if (!*out) throw std::runtime_error("cannot write output file: " + opt.out);
  return 0;
}

struct SolveOpts {
  int levels = 0;
  std::uint64_t seed = 1;
  double t0 = 0.0;
  double alpha = 0.0;
  std::uint64_t max_steps = 0;
  std::string format = "tri";
  std::string out;
};

AnnealConfig solve_config(const SolveOpts& opt) {
  // One cell admits no swaps; give the validator a harmless schedule.
  AnnealConfig config = opt.levels == 1 ? AnnealConfig{1, 1.0, 0.5, 1, 0}
                                        : default_config(opt.levels);
  if (opt.t0 > 0.0) config.initial_temperature = opt.t0;
  if (opt.alpha > 0.0) config.cooling_factor = opt.alpha;
  if (opt.max_steps > 0) config.max_steps = opt.max_steps;
  config.seed = opt.seed;
  return config;
}

int cmd_solve(const SolveOpts& opt) {
  RunMetadata meta = begin_run("solve");
  const AnnealConfig config = solve_config(opt);
  meta.flags = {{"levels", std::to_string(opt.levels)},
                {"t0", format_double(config.initial_temperature)},
                {"alpha", format_double(config.cooling_factor)},
                {"max-steps", std::to_string(config.max_steps)},
                {"format", opt.format}};
  meta.seeds = {config.seed};

  const AnnealOutcome outcome = solve(config);
  if (opt.format == "json") {
    auto result = anneal_result(outcome, config);
    finish_run(meta);
    write_output(opt.out, dump_report(meta, std::move(result)));
  } else if (outcome.success) {
    write_output(opt.out, format_tri(*outcome.triangle));
  }
  if (outcome.success) {
    std::cerr << "solve: " << opt.levels << " levels in " << outcome.steps << " steps\n";
    return 0;
  }
  std::cerr << "magictri: error: budget exhausted after " << outcome.steps
            << " steps (final energy " << outcome.final_energy << ")\n";
  return 1;
}

struct ExperimentOpts {
  int levels = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  double t0 = 0.0;
  double alpha = 0.0;
  std::uint64_t max_steps = 0;
  std::string format = "csv";
  std::string out;
  int threads = 1;
};

int cmd_experiment(const ExperimentOpts& opt) {
  RunMetadata meta = begin_run("experiment");
  SolveOpts base;
  base.levels = opt.levels;
  base.t0 = opt.t0;
  base.alpha = opt.alpha;
  base.max_steps = opt.max_steps;
  const AnnealConfig config = solve_config(base);
  meta.flags = {{"levels", std::to_string(opt.levels)},
                {"trials", std::to_string(opt.trials)},
                {"t0", format_double(config.initial_temperature)},
                {"alpha", format_double(config.cooling_factor)},
                {"max-steps", std::to_string(config.max_steps)},
                {"format", opt.format},
                {"threads", std::to_string(opt.threads)}};
  meta.seeds = {opt.seed};

  ProgressPrinter progress("experiment: trials", opt.trials,
                           std::max<std::uint64_t>(1, opt.trials / 10));
  const StepStats stats =
      run_sa_batch(opt.levels, opt.trials, config, opt.seed, opt.threads, std::ref(progress));

  if (opt.format == "json") {
    auto result = step_stats_result(stats);
    finish_run(meta);
    write_output(opt.out, dump_report(meta, std::move(result)));
  } else {
    write_output(opt.out, step_stats_csv(stats));
  }
  return 0;
}

struct SampleOpts {
  int levels = 0;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  std::string out;
  int threads = 1;
};

int cmd_sample(const SampleOpts& opt) {
  RunMetadata meta = begin_run("sample");
  meta.flags = {{"levels", std::to_string(opt.levels)},
                {"trials", std::to_string(opt.trials)},
                {"threads", std::to_string(opt.threads)}};
  meta.seeds = {opt.seed};

  ProgressPrinter progress("sample: trials", opt.trials,
                           std::max<std::uint64_t>(1, opt.trials / 10));
  const FrequencyEstimate est =
      random_frequency(opt.levels, opt.trials, opt.seed, opt.threads, std::ref(progress));

  auto result = frequency_result(est);
  // The implied limit on the count up to symmetry: (n^2)!/6 times the
  // frequency bound. With zero hits the 3-sigma interval collapses, so fall
  // back to 1/trials, the coarsest bound the sample supports.
  if (opt.levels >= 2 && est.trials > 0) {
    const double freq_bound =
        est.hits > 0 ? est.upper3 : 1.0 / static_cast<double>(est.trials);
    result["frequency_bound"] = freq_bound;
    result["count_bound"] = bound_estimate(opt.levels, freq_bound);
  }
  finish_run(meta);
  write_output(opt.out, dump_report(meta, std::move(result)));
  return 0;
}

struct StatsOpts {
  int levels = 0;
  std::string format = "csv";
  std::string out;
  int threads = 1;
};

int cmd_stats(const StatsOpts& opt) {
  RunMetadata meta = begin_run("stats");
  meta.flags = {{"levels", std::to_string(opt.levels)},
                {"format", opt.format},
                {"threads", std::to_string(opt.threads)}};

  const DistributionTable table = distribution(opt.levels, opt.threads);
  if (opt.format == "json") {
    auto result = distribution_result(table);
    finish_run(meta);
    write_output(opt.out, dump_report(meta, std::move(result)));
  } else {
    write_output(opt.out, distribution_csv(table));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-level magic triangle toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("magictri ") + kVersion + "\ntri format " +
                                        kTriFormatVersion + "\nanneal defaults " +
                                        kAnnealDefaultsVersion);

  const auto format_choice = [](std::vector<std::string> choices) {
    return CLI::IsMember(std::move(choices));
  };

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand(
      "verify", "Check the paired-sum property of a .tri file and print all line sums");
  verify->add_option("file", verify_opts.file, "triangle file (.tri)")->required();
  verify->add_option("--format", verify_opts.format, "text or json")
      ->check(format_choice({"text", "json"}));
  verify->add_option("--out", verify_opts.out, "output path (default stdout)");

  CanonOpts canon_opts;
  auto* canon = app.add_subcommand(
      "canon", "Print the canonical symmetry representative of a .tri file");
  canon->add_option("file", canon_opts.file, "triangle file (.tri)")->required();
  canon->add_option("--out", canon_opts.out, "output path (default stdout)");

  CountOpts count_opts;
  auto* count = app.add_subcommand("count", "Count magic triangles exactly (1 to 4 levels)");
  count->add_option("--levels,-n", count_opts.levels, "triangle size")->required();
  count->add_option("--method", count_opts.method,
                    "auto, brute (scan all permutations, levels <= 3), hexagon "
                    "(group-sum search), or direct (pruned assignment scan, levels = 4)")
      ->check(format_choice({"auto", "brute", "hexagon", "direct"}));
  count->add_option("--format", count_opts.format, "json or text")
      ->check(format_choice({"json", "text"}));
  count->add_option("--out", count_opts.out, "output path (default stdout)");
  count->add_option("--threads", count_opts.threads, "worker threads")
      ->check(CLI::Range(1, 1024));

  EnumerateOpts enum_opts;
  auto* enumerate = app.add_subcommand(
      "enumerate",
      "Stream canonical magic triangles, one per line as flat entries (rows bottom to top)");
  enumerate->add_option("--levels,-n", enum_opts.levels, "triangle size")->required();
  enumerate->add_option("--out", enum_opts.out, "output path (default stdout)");
  enumerate->add_option("--limit", enum_opts.limit, "stop after this many triangles (0 = all)");

  SolveOpts solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Search for a magic triangle by annealing");
  solve_cmd->add_option("--levels,-n", solve_opts.levels, "triangle size")->required();
  solve_cmd->add_option("--seed", solve_opts.seed, "rng seed (default 1)");
  solve_cmd->add_option("--t0", solve_opts.t0, "initial temperature (default per size)");
  solve_cmd->add_option("--alpha", solve_opts.alpha, "cooling factor in (0,1)");
  solve_cmd->add_option("--max-steps", solve_opts.max_steps, "proposal budget");
  solve_cmd->add_option("--format", solve_opts.format, "tri or json")
      ->check(format_choice({"tri", "json"}));
  solve_cmd->add_option("--out", solve_opts.out, "output path (default stdout)");

  ExperimentOpts exp_opts;
  auto* experiment = app.add_subcommand(
      "experiment", "Run an annealing batch and report per-trial step counts");
  experiment->add_option("--levels,-n", exp_opts.levels, "triangle size")->required();
  experiment->add_option("--trials", exp_opts.trials, "number of runs (default 1000)");
  experiment->add_option("--seed", exp_opts.seed, "master seed (default 1)");
  experiment->add_option("--t0", exp_opts.t0, "initial temperature (default per size)");
  experiment->add_option("--alpha", exp_opts.alpha, "cooling factor in (0,1)");
  experiment->add_option("--max-steps", exp_opts.max_steps, "proposal budget per trial");
  experiment->add_option("--format", exp_opts.format, "csv or json")
      ->check(format_choice({"csv", "json"}));
  experiment->add_option("--out", exp_opts.out, "output path (default stdout)");
  experiment->add_option("--threads", exp_opts.threads, "worker threads")
      ->check(CLI::Range(1, 1024));

  SampleOpts sample_opts;
  auto* sample = app.add_subcommand(
      "sample", "Estimate how often a random arrangement is magic");
  sample->add_option("--levels,-n", sample_opts.levels, "triangle size")->required();
  sample->add_option("--trials", sample_opts.trials, "number of samples (default 1000000)");
  sample->add_option("--seed", sample_opts.seed, "master seed (default 1)");
  sample->add_option("--out", sample_opts.out, "output path (default stdout)");
  sample->add_option("--threads", sample_opts.threads, "worker threads")
      ->check(CLI::Range(1, 1024));

  StatsOpts stats_opts;
  auto* stats = app.add_subcommand(
      "stats", "Tabulate where each integer lands across all magic triangles (3 or 4 levels)");
  stats->add_option("--levels,-n", stats_opts.levels, "triangle size")->required();
  stats->add_option("--format", stats_opts.format, "csv or json")
      ->check(format_choice({"csv", "json"}));
  stats->add_option("--out", stats_opts.out, "output path (default stdout)");
  stats->add_option("--threads", stats_opts.threads, "worker threads")
      ->check(CLI::Range(1, 1024));

  try {
    const int threads = default_threads();
    count_opts.threads = threads;
    exp_opts.threads = threads;
    sample_opts.threads = threads;
    stats_opts.threads = threads;

    app.parse(argc, argv);

    if (app.got_subcommand(verify)) return cmd_verify(verify_opts);
    if (app.got_subcommand(canon)) return cmd_canon(canon_opts);
    if (app.got_subcommand(count)) return cmd_count(count_opts);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_opts);
    if (app.got_subcommand(solve_cmd)) return cmd_solve(solve_opts);
    if (app.got_subcommand(experiment)) return cmd_experiment(exp_opts);
    if (app.got_subcommand(sample)) return cmd_sample(sample_opts);
    if (app.got_subcommand(stats)) return cmd_stats(stats_opts);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "magictri: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "magictri: error: " << e.what() << "\n";
    return 2;
  }
}
