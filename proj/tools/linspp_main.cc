// Copyright 2026 The linspp Authors.
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

// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "linspp/linspp.h"

namespace {

constexpr int kExitLinearizable = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct InstanceDeleter {
  void operator()(linspp_instance* p) const { linspp_instance_free(p); }
};
struct ResultDeleter {
  void operator()(linspp_result* p) const { linspp_result_free(p); }
};
struct CostDeleter {
  void operator()(linspp_cost* p) const { linspp_cost_free(p); }
};
struct BasisDeleter {
  void operator()(linspp_basis* p) const { linspp_basis_free(p); }
};
using InstancePtr = std::unique_ptr<linspp_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<linspp_result, ResultDeleter>;
using CostPtr = std::unique_ptr<linspp_cost, CostDeleter>;
using BasisPtr = std::unique_ptr<linspp_basis, BasisDeleter>;

// Thrown to unwind to main with an exit code after printing the error.
struct Exit {
  int code;
};

void Check(linspp_status status) {
  if (status == LINSPP_OK) return;
  std::cerr << "error: " << linspp_status_name(status) << ": "
            << linspp_last_error_message() << '\n';
  throw Exit{status == LINSPP_ERR_IO ? kExitIo : kExitError};
}

std::string Take(char* s) {
  std::string out = s ? s : "";
  linspp_string_free(s);
  return out;
}

InstancePtr Load(const std::string& path) {
  linspp_instance* raw = nullptr;
  Check(linspp_instance_read(path.c_str(), &raw));
  InstancePtr inst(raw);
  for (size_t i = 0; i < linspp_instance_warning_count(inst.get()); ++i) {
    std::cerr << "warning: " << linspp_instance_warning(inst.get(), i) << '\n';
  }
  return inst;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "error: IoError: cannot write " << path << '\n';
    throw Exit{kExitIo};
  }
}

ResultPtr Linearize(const linspp_instance* inst, int jobs) {
  linspp_result* raw = nullptr;
  Check(linspp_linearize(inst, jobs, &raw));
  return ResultPtr(raw);
}

int PrintFailure(const linspp_result* result) {
  char* text = nullptr;
  Check(linspp_result_witness_text(result, &text));
  std::cout << "NOT_LINEARIZABLE\n" << Take(text);
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearizability of order-d shortest path instances on DAGs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string file, cost_file, out_file;
  std::uint64_t max_paths = 1000000;
  std::uint64_t oracle_max_paths = 1024;
  std::uint64_t max_systems = 10000000;

  auto* check = app.add_subcommand("check", "Decide linearizability");
  check->add_option("FILE", file)->required();

  auto* linearize = app.add_subcommand("linearize", "Write the reduced-form linearization");
  linearize->add_option("FILE", file)->required();
  linearize->add_option("--out", out_file, "Cost file (default stdout)");

  auto* apec = app.add_subcommand("apec", "Do all paths have equal cost?");
  apec->add_option("FILE", file)->required();

  auto* basis = app.add_subcommand("basis", "Basis of the linearizable instances");
  basis->add_option("FILE", file)->required();
  basis->add_option("--out", out_file, "Basis file")->required();

  auto* verify = app.add_subcommand("verify", "Compare a cost file on every path");
  verify->add_option("FILE", file)->required();
  verify->add_option("COSTFILE", cost_file)->required();
  verify->add_option("--max-paths", max_paths, "Path enumeration limit");

  auto* oracle = app.add_subcommand("oracle", "Run the brute-force deciders");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("--max-paths", oracle_max_paths, "Path enumeration limit");
  oracle->add_option("--max-systems", max_systems, "Two-path system limit");

  linspp_gen_params params;
  linspp_gen_params_init(&params);
  std::string family = params.family, mode = params.mode;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", family,
                  "random-dag | layered | grid | two-path | double-diamond");
  gen->add_option("--mode", mode, "arbitrary | linearizable | non-linearizable");
  gen->add_option("--order,-d", params.order, "Order d");
  gen->add_option("--arcs,-m", params.arcs, "Arc count (random-dag, layered)");
  gen->add_option("--vertices,-n", params.vertices,
                  "Vertices (random-dag) or layers (layered)");
  gen->add_option("--width", params.width, "Layer width");
  gen->add_option("--rows", params.rows, "Grid rows");
  gen->add_option("--cols", params.cols, "Grid columns");
  gen->add_option("--segment", params.segment, "Two-path branch length");
  gen->add_option("--max-numerator", params.max_numerator, "Value range");
  gen->add_option("--density", params.density, "Share of optional cost keys");
  gen->add_option("--seed", params.seed, "Random seed");
  gen->add_option("--out", out_file, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      const InstancePtr inst = Load(file);
      const ResultPtr result = Linearize(inst.get(), jobs);
      if (!linspp_result_linearizable(result.get())) {
        return PrintFailure(result.get());
      }
      std::cout << "LINEARIZABLE\n";
      return kExitLinearizable;
    }
    if (*linearize) {
      const InstancePtr inst = Load(file);
      const ResultPtr result = Linearize(inst.get(), jobs);
      if (!linspp_result_linearizable(result.get())) {
        return PrintFailure(result.get());
      }
      linspp_cost* raw = nullptr;
      Check(linspp_result_cost(result.get(), &raw));
      const CostPtr cost(raw);
      char* text = nullptr;
      Check(linspp_cost_to_string(inst.get(), cost.get(), &text));
      Emit(out_file, Take(text));
      return kExitLinearizable;
    }
    if (*apec) {
      const InstancePtr inst = Load(file);
      int equal = 0;
      char* beta = nullptr;
      char* witness = nullptr;
      Check(linspp_apec(inst.get(), &equal, &beta, &witness));
      if (equal) {
        std::cout << "EQUAL beta=" << Take(beta) << '\n';
        return kExitLinearizable;
      }
      std::cout << "UNEQUAL\n" << Take(witness);
      return kExitNegative;
    }
    if (*basis) {
      const InstancePtr inst = Load(file);
      linspp_basis* raw = nullptr;
      Check(linspp_basis_compute(inst.get(), jobs, &raw));
      const BasisPtr b(raw);
      char* text = nullptr;
      Check(linspp_basis_to_string(b.get(), &text));
      Emit(out_file, Take(text));
      std::cout << "dimension " << linspp_basis_dimension(b.get()) << " of "
                << linspp_basis_coordinate_count(b.get()) << '\n';
      return kExitLinearizable;
    }
    if (*verify) {
      const InstancePtr inst = Load(file);
      linspp_cost* raw = nullptr;
      Check(linspp_cost_read(inst.get(), cost_file.c_str(), &raw));
      const CostPtr cost(raw);
      int ok = 0;
      Check(linspp_verify(inst.get(), cost.get(), max_paths, &ok));
      std::cout << (ok ? "OK" : "MISMATCH") << '\n';
      return ok ? kExitLinearizable : kExitNegative;
    }
    if (*oracle) {
      const InstancePtr inst = Load(file);
      linspp_oracle_report report;
      Check(linspp_oracle(inst.get(), oracle_max_paths, max_systems, &report));
      auto word = [](int yes) { return yes ? "LINEARIZABLE" : "NOT_LINEARIZABLE"; };
      std::cout << "lp: " << word(report.lp_linearizable) << '\n'
                << "two-path: " << word(report.tps_linearizable) << '\n'
                << "linearizer: " << word(report.linearizer_linearizable)
                << '\n';
      if (report.lp_linearizable != report.tps_linearizable ||
          report.lp_linearizable != report.linearizer_linearizable) {
        std::cout << "DISAGREE\n";
        return kExitDisagreement;
      }
      std::cout << "AGREE\n";
      return kExitLinearizable;
    }
    if (*gen) {
      params.family = family.c_str();
      params.mode = mode.c_str();
      linspp_instance* raw = nullptr;
      Check(linspp_generate(&params, &raw));
      const InstancePtr inst(raw);
      char* text = nullptr;
      Check(linspp_instance_to_string(inst.get(), &text));
      Emit(out_file, Take(text));
      return kExitLinearizable;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
