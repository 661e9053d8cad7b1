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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zdsolve/report.hpp"

namespace py = pybind11;

namespace {

zds::Integer to_integer(const std::string& s) {
  try {
    return zds::Integer(s);
  } catch (const std::invalid_argument&) {
    throw py::value_error("not an integer: " + s);
  }
}

std::string run(const std::string& command, const std::string& text,
                std::int64_t precision, std::uint64_t seed, bool check,
                std::optional<std::vector<std::string>> form,
                std::optional<std::string> block, bool as_text) {
  auto c = zds::parse_command(command);
  if (!c) throw py::value_error("unknown command: " + command);
  if (precision < 1) throw py::value_error("precision must be positive");
  zds::RunConfig cfg;
  cfg.command = *c;
  cfg.precision_bits = precision;
  cfg.seed = seed;
  cfg.check = check;
  cfg.format = as_text ? zds::Format::kText : zds::Format::kJson;
  if (form) {
    std::vector<zds::Integer> coeffs;
    for (const auto& s : *form) coeffs.push_back(to_integer(s));
    cfg.form = std::move(coeffs);
  }
  if (block) cfg.block = to_integer(*block);
  std::istringstream in(text);
  nlohmann::ordered_json report;
  {
    py::gil_scoped_release release;
    report = zds::run_command(cfg, in);
  }
  return zds::emit_report(report, cfg.format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified solver for zero-dimensional integer polynomial systems";

  auto base = py::register_exception<zds::Error>(m, "Error", PyExc_RuntimeError);
  // registration order matters: most derived last
  py::register_exception<zds::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<zds::InputError>(m, "InputError", base.ptr());
  py::register_exception<zds::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<zds::PositiveDimensionalError>(m, "PositiveDimensionalError",
                                                        base.ptr());
  auto cert = py::register_exception<zds::CertificationError>(m, "CertificationError",
                                                              base.ptr());
  py::register_exception<zds::NoPreimageError>(m, "NoPreimageError", base.ptr());
  py::register_exception<zds::CheckFailure>(m, "CheckFailure", cert.ptr());

  m.def("run", &run, py::arg("command"), py::arg("text"), py::arg("precision") = 53,
        py::arg("seed") = 0, py::arg("check") = false, py::arg("form") = py::none(),
        py::arg("block") = py::none(), py::arg("as_text") = false,
        "Runs one stage on the input text and returns the report (JSON unless "
        "as_text).");
}
