// Copyright 2026 The slfol Authors
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

#include "slfol/slfol.h"

#include <memory>
#include <new>
#include <string>
#include <string_view>

#include "slfol/group_decomp.hpp"
#include "slfol/io.hpp"
#include "slfol/sl_algebra.hpp"

struct slfol_context {
  slfol::ToleranceContext tol;
};

struct slfol_report {
  std::string json;
  bool passed = false;
};

struct slfol_table {
  explicit slfol_table(int n) : table(n) {
    for (const auto& b : table.basis_order()) labels.push_back(b.label());
  }
  slfol::algebra::StructureTable table;
  std::vector<std::string> labels;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

void clear_error() {
  last_error.clear();
  last_code.clear();
}

slfol_status record(slfol_status status, std::string_view code, std::string msg) {
  last_code = code;
  last_error = std::move(msg);
  return status;
}

slfol_status status_of(slfol::ErrorCode code) {
  return slfol::is_check_failure(code) ? SLFOL_ERR_CHECK_FAILED : SLFOL_ERR_INPUT;
}

// Runs body, translating exceptions into status codes.
template <class Body>
slfol_status guarded(Body&& body) {
  clear_error();
  try {
    return body();
  } catch (const slfol::Error& e) {
    return record(status_of(e.code()), slfol::to_string(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(SLFOL_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return record(SLFOL_ERR_INTERNAL, "Internal", e.what());
  } catch (...) {
    return record(SLFOL_ERR_INTERNAL, "Internal", "unknown failure");
  }
}

slfol_status emit(const slfol::io::Outcome& o, slfol_report** out) {
  *out = new slfol_report{o.report.dump(2) + "\n", o.passed};
  if (o.passed) return SLFOL_OK;
  return record(SLFOL_ERR_CHECK_FAILED, "CheckFailed", "check failed; see report");
}

slfol::ToleranceContext tolerances(const slfol_context* ctx) { return ctx ? ctx->tol : slfol::ToleranceContext{}; }

}  // namespace

extern "C" {

const char* slfol_version(void) { return "1.0.0"; }

const char* slfol_status_name(slfol_status status) {
  switch (status) {
    case SLFOL_OK: return "ok";
    case SLFOL_ERR_INPUT: return "input error";
    case SLFOL_ERR_CHECK_FAILED: return "check failed";
    case SLFOL_ERR_INTERNAL: return "internal error";
    case SLFOL_ERR_NULL: return "null argument";
  }
  return "unknown";
}

const char* slfol_last_error(void) { return last_error.c_str(); }
const char* slfol_last_error_code(void) { return last_code.c_str(); }

slfol_context* slfol_context_create(void) { return new (std::nothrow) slfol_context{}; }
void slfol_context_destroy(slfol_context* ctx) { delete ctx; }

slfol_status slfol_context_set_tolerances(slfol_context* ctx, double eq_tol, double residual_tol) {
  if (!ctx) return record(SLFOL_ERR_NULL, "Null", "context is NULL");
  return guarded([&] {
    const slfol::ToleranceContext tol{eq_tol, residual_tol};
    tol.validate();
    ctx->tol = tol;
    return SLFOL_OK;
  });
}

slfol_status slfol_verify_brackets(const slfol_context*, int n, slfol_report** out) {
  if (!out) return record(SLFOL_ERR_NULL, "Null", "output pointer is NULL");
  *out = nullptr;
  return guarded([&] { return emit(slfol::io::verify_brackets_report(n), out); });
}

slfol_status slfol_decompose(const slfol_context* ctx, const char* matrix_json, slfol_report** out) {
  if (!out || !matrix_json) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  *out = nullptr;
  return guarded([&] {
    const auto g = slfol::io::matrix_from_json(slfol::io::parse(matrix_json));
    return emit(slfol::io::decompose_report(g, tolerances(ctx)), out);
  });
}

slfol_status slfol_check_foliation(const slfol_context* ctx, const char* spec_json, slfol_report** out) {
  if (!out || !spec_json) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  *out = nullptr;
  return guarded([&] {
    const auto spec = slfol::io::spec_from_json(slfol::io::parse(spec_json));
    return emit(slfol::io::check_foliation_report(spec, tolerances(ctx)), out);
  });
}

slfol_status slfol_tischler(const slfol_context* ctx, const char* input_json, double epsilon, long long max_denominator,
                            slfol_report** out) {
  if (!out || !input_json) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  *out = nullptr;
  return guarded([&] {
    const auto input = slfol::io::tischler_input_from_json(slfol::io::parse(input_json));
    const slfol::tischler::RationalizeConfig cfg{epsilon, max_denominator};
    return emit(slfol::io::tischler_report(input, cfg, tolerances(ctx)), out);
  });
}

slfol_status slfol_pipeline(const slfol_context* ctx, const char* spec_json, double epsilon, slfol_report** out) {
  if (!out || !spec_json) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  *out = nullptr;
  return guarded([&] {
    const auto spec = slfol::io::spec_from_json(slfol::io::parse(spec_json));
    slfol::pipeline::PipelineConfig cfg;
    cfg.rationalize.epsilon = epsilon;
    const auto report = slfol::pipeline::pipeline_sln(spec, cfg, tolerances(ctx));
    *out = new slfol_report{slfol::io::pipeline_report_to_json(report, cfg).dump(2) + "\n", report.completed()};
    if (report.completed()) return SLFOL_OK;
    return record(status_of(*report.failure), slfol::to_string(*report.failure), report.message);
  });
}

slfol_status slfol_example(const char* name, slfol_report** out) {
  if (!out || !name) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new slfol_report{slfol::io::example(name).dump(2) + "\n", true};
    return SLFOL_OK;
  });
}

const char* slfol_example_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : slfol::io::example_names()) s += n + "\n";
    return s;
  }();
  return names.c_str();
}

const char* slfol_report_json(const slfol_report* report) { return report ? report->json.c_str() : ""; }
int slfol_report_passed(const slfol_report* report) { return report && report->passed ? 1 : 0; }
void slfol_report_destroy(slfol_report* report) { delete report; }

slfol_status slfol_table_create(int n, slfol_table** out) {
  if (!out) return record(SLFOL_ERR_NULL, "Null", "output pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new slfol_table(n);
    return SLFOL_OK;
  });
}

void slfol_table_destroy(slfol_table* table) { delete table; }

size_t slfol_table_size(const slfol_table* table) { return table ? table->table.size() : 0; }

const char* slfol_table_label(const slfol_table* table, size_t index) {
  if (!table || index >= table->labels.size()) return nullptr;
  return table->labels[index].c_str();
}

slfol_status slfol_table_coefficient(const slfol_table* table, size_t a, size_t b, size_t c, long long* numerator,
                                     long long* denominator) {
  if (!table || !numerator || !denominator) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  const std::size_t size = table->table.size();
  if (a >= size || b >= size || c >= size) return record(SLFOL_ERR_INPUT, "IndexOutOfRange", "basis index out of range");
  return guarded([&] {
    const auto& x = table->table(a, b).coeffs()[c];
    *numerator = slfol::to_int64(x.get_num());
    *denominator = slfol::to_int64(x.get_den());
    return SLFOL_OK;
  });
}

slfol_status slfol_iwasawa(const slfol_context* ctx, int n, const double* g, double* k_out, double* chart_out) {
  if (!g || !k_out || !chart_out) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  return guarded([&] {
    slfol::algebra::require_dimension(n);
    const std::size_t size = static_cast<std::size_t>(n);
    const slfol::FMatrix m(size, size, std::vector<double>(g, g + size * size));
    const auto f = slfol::decomp::iwasawa_sln(m, tolerances(ctx));
    std::copy(f.k.data().begin(), f.k.data().end(), k_out);
    std::copy(f.chart.begin(), f.chart.end(), chart_out);
    return SLFOL_OK;
  });
}

slfol_status slfol_recompose(int n, const double* k, const double* chart, double* g_out) {
  if (!k || !chart || !g_out) return record(SLFOL_ERR_NULL, "Null", "argument is NULL");
  return guarded([&] {
    slfol::algebra::require_dimension(n);
    const std::size_t size = static_cast<std::size_t>(n);
    slfol::decomp::IwasawaFactors f{slfol::FMatrix(size, size, std::vector<double>(k, k + size * size)),
                                    std::vector<double>(chart, chart + slfol::decomp::chart_length(n))};
    const auto g = slfol::decomp::recompose_sln(f);
    std::copy(g.data().begin(), g.data().end(), g_out);
    return SLFOL_OK;
  });
}

}  // extern "C"
