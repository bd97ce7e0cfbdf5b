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

#include "linspp/linspp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "linspp/apec.h"
#include "linspp/error.h"
#include "linspp/generator.h"
#include "linspp/instance_io.h"
#include "linspp/linearizer.h"
#include "linspp/oracle.h"
#include "linspp/subspace.h"

struct linspp_instance {
  linspp::Instance instance;
  std::optional<linspp::PlantedViolation> planted;
};

struct linspp_cost {
  linspp::LinearCost cost;
};

struct linspp_result {
  linspp::LinVerdict verdict;
  std::string witness;
};

struct linspp_basis {
  std::vector<linspp::ArcSet> coordinates;
  std::vector<std::vector<linspp::Rational>> vectors;
};

namespace {

using linspp::ArcId;
using linspp::ErrorCode;

thread_local std::string last_error;

linspp_status ToStatus(ErrorCode code) {
  return static_cast<linspp_status>(static_cast<int>(code) + 1);
}

linspp_status Fail(linspp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
linspp_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return LINSPP_OK;
  } catch (const linspp::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LINSPP_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LINSPP_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(LINSPP_ERR_INTERNAL, "unknown failure");
  }
}

void Require(bool condition, const char* what) {
  if (!condition) {
    throw linspp::Error(ErrorCode::kInvalidArgument,
                        std::string(what) + " must not be null");
  }
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string PathLine(const linspp::Path& p) {
  std::string line = "path:";
  for (ArcId a : p.arcs) line += " " + std::to_string(a);
  return line;
}

std::string WitnessText(const linspp::Instance& inst,
                        const linspp::FailureWitness& w) {
  const linspp::WitnessCosts wc =
      linspp::EvaluateWitness(inst.dag, inst.cost, w);
  const auto& arc = inst.dag.arc(w.arc);
  std::ostringstream out;
  out << "arc " << w.arc << " (" << inst.labels[arc.tail] << " -> "
      << inst.labels[arc.head] << ") at vertex " << inst.labels[w.vertex]
      << '\n';
  for (const auto& p : wc.paths) out << PathLine(p) << '\n';
  out << "f(P.N_u) + f(Q.aN_v) = " << wc.costs[0] << " + " << wc.costs[3]
      << " != " << wc.costs[1] << " + " << wc.costs[2]
      << " = f(P.aN_v) + f(Q.N_u)\n";
  return out.str();
}

std::string Text(const linspp_instance& inst) {
  std::string text = linspp::FormatInstance(
      inst.instance.dag, inst.instance.cost, inst.instance.labels);
  if (inst.planted) text += linspp::PlantedComment(*inst.planted);
  return text;
}

}  // namespace

extern "C" {

const char* linspp_status_name(linspp_status status) {
  switch (status) {
    case LINSPP_OK: return "Ok";
    case LINSPP_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case LINSPP_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > LINSPP_OK && status < LINSPP_ERR_OUT_OF_MEMORY) {
    return linspp::ErrorCodeName(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* linspp_last_error_message(void) { return last_error.c_str(); }

void linspp_string_free(char* s) { std::free(s); }

linspp_status linspp_instance_read(const char* path, linspp_instance** out) {
  return Guard([&] {
    Require(path && out, "path and out");
    *out = new linspp_instance{linspp::ReadInstance(path), std::nullopt};
  });
}

linspp_status linspp_instance_parse(const char* text, linspp_instance** out) {
  return Guard([&] {
    Require(text && out, "text and out");
    *out = new linspp_instance{linspp::ParseInstance(text), std::nullopt};
  });
}

linspp_status linspp_instance_to_string(const linspp_instance* inst,
                                        char** out) {
  return Guard([&] {
    Require(inst && out, "instance and out");
    *out = Duplicate(Text(*inst));
  });
}

linspp_status linspp_instance_write(const linspp_instance* inst,
                                    const char* path) {
  return Guard([&] {
    Require(inst && path, "instance and path");
    linspp::WriteFile(path, Text(*inst));
  });
}

void linspp_instance_free(linspp_instance* inst) { delete inst; }

int linspp_instance_vertex_count(const linspp_instance* inst) {
  return inst ? inst->instance.dag.vertex_count() : 0;
}

int linspp_instance_arc_count(const linspp_instance* inst) {
  return inst ? inst->instance.dag.arc_count() : 0;
}

int linspp_instance_arc_universe(const linspp_instance* inst) {
  return inst ? inst->instance.dag.arc_universe() : 0;
}

int linspp_instance_order(const linspp_instance* inst) {
  return inst ? inst->instance.cost.order() : 0;
}

size_t linspp_instance_cost_key_count(const linspp_instance* inst) {
  return inst ? inst->instance.cost.size() : 0;
}

uint64_t linspp_instance_path_count(const linspp_instance* inst, uint64_t cap) {
  return inst ? linspp::CountPaths(inst->instance.dag, cap) : 0;
}

size_t linspp_instance_warning_count(const linspp_instance* inst) {
  return inst ? inst->instance.warnings.size() : 0;
}

const char* linspp_instance_warning(const linspp_instance* inst, size_t i) {
  if (!inst || i >= inst->instance.warnings.size()) return nullptr;
  return inst->instance.warnings[i].c_str();
}

void linspp_gen_params_init(linspp_gen_params* params) {
  if (!params) return;
  const linspp::GeneratorSpec spec;
  params->family = "random-dag";
  params->mode = "arbitrary";
  params->order = spec.order;
  params->arcs = spec.arcs;
  params->vertices = spec.vertices;
  params->width = spec.width;
  params->rows = spec.rows;
  params->cols = spec.cols;
  params->segment = spec.segment;
  params->max_numerator = spec.max_numerator;
  params->density = spec.density;
  params->seed = spec.seed;
}

linspp_status linspp_generate(const linspp_gen_params* params,
                              linspp_instance** out) {
  return Guard([&] {
    Require(params && out && params->family && params->mode,
            "params, family, mode and out");
    linspp::GeneratorSpec spec;
    const auto family = linspp::FamilyFromName(params->family);
    const auto mode = linspp::ModeFromName(params->mode);
    if (!family) {
      throw linspp::Error(ErrorCode::kUnsupportedParams,
                          std::string("unknown family '") + params->family + "'");
    }
    if (!mode) {
      throw linspp::Error(ErrorCode::kUnsupportedParams,
                          std::string("unknown mode '") + params->mode + "'");
    }
    spec.family = *family;
    spec.mode = *mode;
    spec.order = params->order;
    spec.arcs = params->arcs;
    spec.vertices = params->vertices;
    spec.width = params->width;
    spec.rows = params->rows;
    spec.cols = params->cols;
    spec.segment = params->segment;
    spec.max_numerator = params->max_numerator;
    spec.density = params->density;
    spec.seed = params->seed;
    linspp::Generated g = linspp::Generate(spec);
    *out = new linspp_instance{std::move(g.instance), g.planted};
  });
}

int linspp_instance_planted(const linspp_instance* inst, uint32_t* arc,
                            uint32_t* partner) {
  if (!inst || !inst->planted) return 0;
  if (arc) *arc = inst->planted->arc;
  if (partner) *partner = inst->planted->partner;
  return 1;
}

linspp_status linspp_cost_parse(const linspp_instance* inst, const char* text,
                                linspp_cost** out) {
  return Guard([&] {
    Require(inst && text && out, "instance, text and out");
    *out = new linspp_cost{
        linspp::ParseCostFile(text, inst->instance.dag.arc_universe())};
  });
}

linspp_status linspp_cost_read(const linspp_instance* inst, const char* path,
                               linspp_cost** out) {
  return Guard([&] {
    Require(inst && path && out, "instance, path and out");
    *out = new linspp_cost{linspp::ParseCostFile(
        linspp::ReadFile(path), inst->instance.dag.arc_universe())};
  });
}

linspp_status linspp_cost_to_string(const linspp_instance* inst,
                                    const linspp_cost* cost, char** out) {
  return Guard([&] {
    Require(inst && cost && out, "instance, cost and out");
    *out = Duplicate(linspp::FormatCostFile(inst->instance.dag, cost->cost));
  });
}

linspp_status linspp_cost_value(const linspp_cost* cost, uint32_t arc,
                                char** out) {
  return Guard([&] {
    Require(cost && out, "cost and out");
    *out = Duplicate(cost->cost.at(arc).ToString());
  });
}

void linspp_cost_free(linspp_cost* cost) { delete cost; }

linspp_status linspp_verify(const linspp_instance* inst,
                            const linspp_cost* cost, uint64_t max_paths,
                            int* ok) {
  return Guard([&] {
    Require(inst && cost && ok, "instance, cost and ok");
    *ok = linspp::VerifyLinearization(inst->instance.dag, inst->instance.cost,
                                      cost->cost, max_paths)
              ? 1
              : 0;
  });
}

linspp_status linspp_linearize(const linspp_instance* inst, int jobs,
                               linspp_result** out) {
  return Guard([&] {
    Require(inst && out, "instance and out");
    const auto& in = inst->instance;
    linspp::LinearizeOptions options;
    options.jobs = jobs;
    auto result = std::make_unique<linspp_result>();
    result->verdict = linspp::Linearize(
        in.dag, in.cost, linspp::ChooseNonbasicSystem(in.dag), options);
    if (result->verdict.failure) {
      result->witness = WitnessText(in, *result->verdict.failure);
    }
    *out = result.release();
  });
}

int linspp_result_linearizable(const linspp_result* result) {
  return result && result->verdict.linearizable ? 1 : 0;
}

linspp_status linspp_result_cost(const linspp_result* result,
                                 linspp_cost** out) {
  return Guard([&] {
    Require(result && out, "result and out");
    if (!result->verdict.cost) {
      throw linspp::Error(ErrorCode::kNotLinearizable,
                          "instance is not linearizable");
    }
    *out = new linspp_cost{*result->verdict.cost};
  });
}

uint32_t linspp_result_failure_arc(const linspp_result* result) {
  return result && result->verdict.failure ? result->verdict.failure->arc : 0;
}

linspp_status linspp_result_witness_text(const linspp_result* result,
                                         char** out) {
  return Guard([&] {
    Require(result && out, "result and out");
    *out = Duplicate(result->witness);
  });
}

void linspp_result_free(linspp_result* result) { delete result; }

linspp_status linspp_apec(const linspp_instance* inst, int* all_equal,
                          char** beta, char** witness) {
  return Guard([&] {
    Require(inst && all_equal, "instance and all_equal");
    if (beta) *beta = nullptr;
    if (witness) *witness = nullptr;
    const auto& in = inst->instance;
    const linspp::ApecVerdict v =
        linspp::SolveApec(linspp::ApecInstance{in.dag, in.cost});
    *all_equal = v.all_equal ? 1 : 0;
    if (v.all_equal && beta) *beta = Duplicate(v.beta->ToString());
    if (!v.all_equal && witness) {
      const auto& [p, q] = *v.witness;
      std::ostringstream text;
      text << PathLine(p) << '\n' << PathLine(q) << '\n';
      text << "costs: " << linspp::EvalOrderD(in.cost, p.arcs) << " != "
           << linspp::EvalOrderD(in.cost, q.arcs) << '\n';
      *witness = Duplicate(text.str());
    }
  });
}

linspp_status linspp_basis_compute(const linspp_instance* inst, int jobs,
                                   linspp_basis** out) {
  return Guard([&] {
    Require(inst && out, "instance and out");
    const auto& in = inst->instance;
    const linspp::CoordinateIndex index(in.dag, in.cost.order());
    linspp::AssembleOptions options;
    options.jobs = jobs;
    auto basis = std::make_unique<linspp_basis>();
    basis->vectors =
        linspp::KernelBasis(linspp::AssembleMatrix(in.dag, index, options));
    for (size_t i = 0; i < index.size(); ++i) {
      basis->coordinates.push_back(index.set(i));
    }
    *out = basis.release();
  });
}

size_t linspp_basis_dimension(const linspp_basis* basis) {
  return basis ? basis->vectors.size() : 0;
}

size_t linspp_basis_coordinate_count(const linspp_basis* basis) {
  return basis ? basis->coordinates.size() : 0;
}

linspp_status linspp_basis_to_string(const linspp_basis* basis, char** out) {
  return Guard([&] {
    Require(basis && out, "basis and out");
    *out = Duplicate(linspp::FormatBasis(basis->coordinates, basis->vectors));
  });
}

void linspp_basis_free(linspp_basis* basis) { delete basis; }

linspp_status linspp_oracle(const linspp_instance* inst, uint64_t max_paths,
                            uint64_t max_systems,
                            linspp_oracle_report* report) {
  return Guard([&] {
    Require(inst && report, "instance and report");
    const auto& in = inst->instance;
    report->lp_linearizable =
        linspp::OracleLinearizeLp(in.dag, in.cost, max_paths).linearizable;
    report->tps_linearizable =
        linspp::OracleLinearizeTps(in.dag, in.cost, max_systems);
    report->linearizer_linearizable =
        linspp::Linearize(in.dag, in.cost, linspp::ChooseNonbasicSystem(in.dag))
            .linearizable;
  });
}

}  // extern "C"
