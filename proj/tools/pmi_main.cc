// Copyright 2026 The PMI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pmi: parametric matroid interdiction solver.
//
//   pmi INSTANCE.json [--algorithm tree] [--verify] [-o solution.json]
//   pmi INSTANCE.json --emit-plot y.tsv --step 1/4
//   pmi --bench A.json B.json ...
//   pmi --generate graphic --vertices 6 --size 8 --ell 2 --seed 7 -o inst.json
//
// Exit status: 0 ok, 1 usage, 2 unreadable instance, 3 verification failed,
// 4 enumeration cap exceeded, 5 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pmi/bench.h"
#include "pmi/enumeration.h"
#include "pmi/generator.h"
#include "pmi/interdiction.h"
#include "pmi/io.h"
#include "pmi/oracle.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kVerify = 3, kCap = 4, kOther = 5 };

struct Options {
  std::vector<std::string> instances;
  std::string algorithm = "tree";
  bool verify = false;
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  std::string output;
  std::string plot_path;
  std::string step = "1/4";
  std::string plot_lo;
  std::string plot_hi;
  bool bench = false;
  bool self_check = false;
  std::string generate;
  pmi::GeneratorSpec spec;
  bool no_reinforce = false;
  std::string interval_lo;
  std::string interval_hi;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_generate(const Options& opt) {
  pmi::GeneratorSpec spec = opt.spec;
  spec.family = opt.generate;
  spec.seed = opt.seed;
  spec.reinforce = !opt.no_reinforce;
  if (!opt.interval_lo.empty() || !opt.interval_hi.empty()) {
    spec.interval = pmi::Interval{
        pmi::parse_bound(opt.interval_lo.empty() ? "-inf" : opt.interval_lo, false),
        pmi::parse_bound(opt.interval_hi.empty() ? "inf" : opt.interval_hi, true)};
  }
  const pmi::MatroidInstance instance = pmi::generate_instance(spec);
  write_output(opt.output, pmi::instance_to_json(instance).dump(2) + "\n");
  return kOk;
}

int run_bench(const Options& opt) {
  std::vector<pmi::BenchInput> inputs;
  for (const std::string& path : opt.instances) {
    inputs.push_back({path, pmi::parse_instance_file(path)});
  }
  const auto report = pmi::bench(
      inputs, {pmi::Algorithm::kBrute, pmi::Algorithm::kUset, pmi::Algorithm::kTree});
  write_output(opt.output, report.format());
  return report.agree && report.within_bounds ? kOk : kVerify;
}

// Plot range: the instance interval where finite, otherwise one unit beyond the
// outermost changepoint.
std::pair<pmi::Rational, pmi::Rational> plot_range(const Options& opt,
                                                   const pmi::MatroidInstance& instance,
                                                   const pmi::InterdictionSolution& solution) {
  pmi::Rational lo = 0;
  pmi::Rational hi = 0;
  if (!solution.changepoints.empty()) {
    lo = solution.changepoints.front().lambda - 1;
    hi = solution.changepoints.back().lambda + 1;
  } else {
    lo = instance.interval.sample_point() - 1;
    hi = instance.interval.sample_point() + 1;
  }
  if (instance.interval.lo) lo = *instance.interval.lo;
  if (instance.interval.hi) hi = *instance.interval.hi;
  if (!opt.plot_lo.empty()) lo = pmi::parse_rational(opt.plot_lo);
  if (!opt.plot_hi.empty()) hi = pmi::parse_rational(opt.plot_hi);
  return {lo, hi};
}

int run_solve(const Options& opt) {
  if (opt.instances.size() != 1) {
    std::cerr << "pmi: exactly one instance file expected (use --bench for several)\n";
    return kUsage;
  }
  const pmi::MatroidInstance instance = pmi::parse_instance_file(opt.instances.front());
  pmi::SolveOptions solve_options;
  solve_options.self_check = opt.self_check;
  const pmi::InterdictionSolution solution =
      pmi::solve(instance, pmi::parse_algorithm(opt.algorithm), solve_options);
  std::optional<pmi::VerificationReport> report;
  if (opt.verify) {
    report = pmi::verify_solution(instance, solution, {opt.samples, opt.seed});
    std::cerr << report->summary() << '\n';
  }
  write_output(opt.output,
               pmi::solution_to_json(solution, instance, report ? &*report : nullptr).dump(2) +
                   "\n");
  if (!opt.plot_path.empty()) {
    const auto [lo, hi] = plot_range(opt, instance, solution);
    const auto rows = pmi::plot_rows(solution, pmi::parse_rational(opt.step), lo, hi);
    std::ofstream plot(opt.plot_path);
    if (!plot) throw std::runtime_error("cannot write " + opt.plot_path);
    plot << pmi::format_plot(rows, instance.names);
  }
  return report && !report->passed ? kVerify : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact parametric matroid interdiction"};
  Options opt;
  app.add_option("instances", opt.instances, "Instance file(s)");
  app.add_option("--algorithm", opt.algorithm, "brute, uset or tree")
      ->check(CLI::IsMember({"brute", "uset", "tree"}))
      ->capture_default_str();
  app.add_flag("--verify", opt.verify, "Check the solution against exhaustive enumeration");
  app.add_option("--samples", opt.samples, "Extra random lambda samples for --verify")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for --verify samples and --generate")
      ->capture_default_str();
  app.add_option("-o,--output", opt.output, "Output file (default stdout)");
  app.add_option("--emit-plot", opt.plot_path, "Write tab-separated samples of y to PATH");
  app.add_option("--step", opt.step, "Sampling step for --emit-plot")->capture_default_str();
  app.add_option("--plot-lo", opt.plot_lo, "Lower end of the plot range");
  app.add_option("--plot-hi", opt.plot_hi, "Upper end of the plot range");
  app.add_flag("--bench", opt.bench, "Run every algorithm on every instance and tabulate");
  app.add_flag("--self-check", opt.self_check,
               "Re-derive incremental state from scratch after every event");
  auto* generate = app.add_option("--generate", opt.generate, "graphic, uniform or partition")
                       ->check(CLI::IsMember({"graphic", "uniform", "partition"}));
  app.add_option("--size", opt.spec.size, "Ground set size (graphic: edges before reinforcement)");
  app.add_option("--rank", opt.spec.rank, "Rank for uniform and partition");
  app.add_option("--vertices", opt.spec.vertices, "Vertices for graphic");
  app.add_option("--ell", opt.spec.ell, "Interdiction budget")->capture_default_str();
  app.add_flag("--no-reinforce", opt.no_reinforce, "Skip the heavy parallels (graphic)");
  app.add_option("--lo", opt.interval_lo, "Interval lower end for --generate");
  app.add_option("--hi", opt.interval_hi, "Interval upper end for --generate");
  app.footer(std::string("Environment: ") + pmi::kEnumerationCapEnv +
             " caps the number of ell-subsets enumerated by brute and --verify.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*generate) return run_generate(opt);
    if (opt.instances.empty()) {
      std::cerr << "pmi: no instance file given\n" << app.help();
      return kUsage;
    }
    if (opt.bench) return run_bench(opt);
    return run_solve(opt);
  } catch (const pmi::ParseError& err) {
    std::cerr << "pmi: " << err.what() << '\n';
    return kParse;
  } catch (const pmi::EnumerationCapExceeded& err) {
    std::cerr << "pmi: " << err.what() << '\n';
    return kCap;
  } catch (const std::invalid_argument& err) {
    std::cerr << "pmi: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "pmi: " << err.what() << '\n';
    return kOther;
  }
}
