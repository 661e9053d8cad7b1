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

#include "cli_runner.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace oracle {

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

CliRun run_cli(const std::string& cli, const std::vector<std::string>& args,
               const std::string& input) {
  std::string cmd = quote(cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " " + quote(input) + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<GoldenCase> golden_cases(const std::string& dir) {
  auto j = nlohmann::json::parse(read_file(dir + "/cases.json"));
  std::vector<GoldenCase> out;
  for (const auto& c : j) {
    GoldenCase g;
    g.name = c.at("name").get<std::string>();
    g.input = dir + "/inputs/" + c.at("input").get<std::string>();
    g.args = c.at("args").get<std::vector<std::string>>();
    bool text = std::find(g.args.begin(), g.args.end(), "text") != g.args.end();
    g.expected = dir + "/expected/" + g.name + (text ? ".txt" : ".json");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
