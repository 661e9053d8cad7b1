// Copyright 2026 The zdsolve Authors
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

// zdsolve: certified solving of zero-dimensional integer polynomial systems.
//
//   zdsolve solve system.txt --precision 64
//   zdsolve eliminate system.txt --form 1,3,-2
//   zdsolve roots poly.txt
//   zdsolve grid-sep pair.txt --block 9
//   zdsolve slf system.txt [--block c]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zdsolve/errors.hpp"
#include "zdsolve/report.hpp"

namespace {

std::vector<zds::Integer> parse_form(const std::string& text) {
  std::vector<zds::Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item, 10);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("--form", "not an integer: " + item);
    }
  }
  if (out.empty()) throw CLI::ValidationError("--form", "empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified solver for zero-dimensional integer polynomial systems"};
  app.require_subcommand(1);

  zds::RunConfig config;
  std::string input = "-";
  std::string format = "json";
  std::string form;
  std::string block;

  const std::vector<std::pair<zds::Command, std::string>> commands = {
      {zds::Command::kRoots, "isolate the complex roots of a univariate polynomial"},
      {zds::Command::kEliminate, "elimination polynomial along a linear form"},
      {zds::Command::kGridSep, "separating integers for the root grid of two polynomials"},
      {zds::Command::kSlf, "separating linear form by divide and conquer"},
      {zds::Command::kSolve, "isolating boxes for all finite solutions"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(zds::to_string(cmd), help);
    sub->add_option("input", input, "input file, - for stdin")->capture_default_str();
    sub->add_option("--precision", config.precision_bits, "output quality in bits")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--format", format, "json or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--check", config.check, "re-certify every reported box");
    sub->add_flag("--timing", config.timing, "include wall-clock time");
    if (cmd == zds::Command::kEliminate) {
      sub->add_option("--form", form, "coefficients c1,...,cn (first nonzero is 1)");
    }
    if (cmd == zds::Command::kGridSep || cmd == zds::Command::kSlf) {
      sub->add_option("--block", block, "number of consecutive separating integers");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (subs[k]->parsed()) config.command = commands[k].first;
    }
    config.format = format == "text" ? zds::Format::kText : zds::Format::kJson;
    if (!form.empty()) config.form = parse_form(form);
    if (!block.empty()) {
      try {
        config.block = zds::Integer(block, 10);
      } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--block", "not an integer: " + block);
      }
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? zds::kExitOk : zds::kExitUsage;
  }

  try {
    nlohmann::ordered_json report;
    if (input == "-") {
      report = zds::run_command(config, std::cin);
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "zdsolve: cannot open " << input << "\n";
        return zds::kExitParse;
      }
      report = zds::run_command(config, in);
    }
    std::cout << zds::emit_report(report, config.format);
    return zds::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "zdsolve: " << e.what() << "\n";
    return zds::exit_code_for(e);
  }
}
