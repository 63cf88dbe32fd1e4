// Copyright 2026 The overlap-gap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = overlap_gap::cli;

int main(int argc, char** argv) {
  CLI::App app{"Overlap gaps between left-infinite and right-infinite words"};
  app.require_subcommand(1);

  cli::TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate n, log, rog, og for n = 0..N");
  table_cmd->add_option("left", table.left, "Left-infinite word, e.g. (bbaa)~cab")->required();
  table_cmd->add_option("right", table.right, "Right-infinite word, e.g. ~(abba)")->required();
  table_cmd->add_option("--n", table.horizon, "Horizon N")->capture_default_str();
  table_cmd->add_flag("--one-sided", table.one_sided, "Both words are left-infinite");
  table_cmd->add_option("--format", table.format, "csv or md")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Format>{{"csv", cli::Format::csv}, {"md", cli::Format::md}}));

  std::string left, right;
  bool one_sided = false;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether OG is finite");
  decide_cmd->add_option("left", left, "Left-infinite word")->required();
  decide_cmd->add_option("right", right, "Right-infinite word")->required();
  decide_cmd->add_flag("--one-sided", one_sided, "Both words are left-infinite");

  auto* sets_cmd = app.add_subcommand("sets", "Exact LOG, ROG and OG for conjugate periods");
  sets_cmd->add_option("left", left, "Left-infinite word")->required();
  sets_cmd->add_option("right", right, "Right-infinite word")->required();

  std::string suite = "all";
  std::uint64_t seed = overlap_gap::verify::kDefaultSeed;
  std::optional<std::string> output;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites, JSON lines out");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(overlap_gap::verify::suite_names()))
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  verify_cmd->add_option("--output", output, "Write the report here instead of stdout");

  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the naive and linear gap kernels");
  bench_cmd->add_option("--len", bench.length, "Word length L")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Number of trials")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--workload", bench.workload, "sparse or uniform")
      ->check(CLI::IsMember({"sparse", "uniform"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (*table_cmd) return cli::cmd_table(table, std::cout, std::cerr);
  if (*decide_cmd) return cli::cmd_decide(left, right, one_sided, std::cout, std::cerr);
  if (*sets_cmd) return cli::cmd_sets(left, right, std::cout, std::cerr);
  if (*verify_cmd) return cli::cmd_verify(suite, seed, output, std::cout, std::cerr);
  return cli::cmd_bench(bench, std::cout, std::cerr);
}
