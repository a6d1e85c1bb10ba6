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

// Command-line front end; talks to the toolkit through the C API only.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slfol/slfol.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheck = 3;

struct ReportDeleter {
  void operator()(slfol_report* r) const { slfol_report_destroy(r); }
};
using ReportPtr = std::unique_ptr<slfol_report, ReportDeleter>;

struct ContextDeleter {
  void operator()(slfol_context* c) const { slfol_context_destroy(c); }
};

struct Result {
  std::string name;  // golden file stem
  std::string text;  // report or error document
  int code = kExitOk;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

int exit_code(slfol_status s) {
  switch (s) {
    case SLFOL_OK: return kExitOk;
    case SLFOL_ERR_CHECK_FAILED: return kExitCheck;
    default: return kExitInput;
  }
}

Result finish(std::string name, slfol_status status, slfol_report* raw) {
  ReportPtr report(raw);
  Result r{std::move(name), {}, exit_code(status)};
  if (report) {
    r.text = slfol_report_json(report.get());
  } else {
    r.text = "{\n  \"error\": {\n    \"code\": \"" + json_escape(slfol_last_error_code()) + "\",\n    \"message\": \"" +
             json_escape(slfol_last_error()) + "\"\n  }\n}\n";
  }
  if (status != SLFOL_OK) std::cerr << r.name << ": " << slfol_last_error() << "\n";
  return r;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Runs one command per input file concurrently; results keep input order.
template <class Command>
std::vector<Result> run_files(const std::vector<std::string>& files, const std::string& tag, Command command) {
  std::vector<std::future<Result>> jobs;
  for (const auto& path : files) {
    jobs.push_back(std::async(std::launch::async, [path, tag, command] {
      const std::string name = fs::path(path).stem().string() + "." + tag;
      std::string text;
      if (!read_file(path, text)) {
        std::cerr << path << ": cannot read\n";
        return Result{name, "{\n  \"error\": {\n    \"code\": \"InvalidInput\",\n    \"message\": \"cannot read " +
                                json_escape(path) + "\"\n  }\n}\n",
                      kExitInput};
      }
      slfol_report* report = nullptr;
      const slfol_status s = command(text.c_str(), &report);
      return finish(name, s, report);
    }));
  }
  std::vector<Result> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int emit(const std::vector<Result>& results, const std::string& golden, bool write_golden) {
  int code = kExitOk;
  for (const auto& r : results) {
    int rc = r.code;
    if (!golden.empty()) {
      const fs::path path = fs::path(golden) / (r.name + ".json");
      if (write_golden) {
        std::ofstream(path, std::ios::binary) << r.text;
      } else {
        std::string expected;
        if (!read_file(path.string(), expected)) {
          std::cerr << path.string() << ": golden file missing\n";
          rc = std::max(rc, kExitInput);
        } else if (expected != r.text) {
          std::cerr << path.string() << ": output differs from golden\n";
          rc = kExitCheck;
        }
      }
    }
    std::cout << r.text;
    code = std::max(code, rc);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie foliations on simplicial complexes: brackets, Iwasawa charts, Tischler fibrations"};
  app.require_subcommand(1);

  double eq_tol = 1e-10, residual_tol = 1e-9;
  std::string golden;
  bool write_golden = false;
  app.add_option("--eq-tol", eq_tol, "Absolute comparison tolerance")->capture_default_str();
  app.add_option("--residual-tol", residual_tol, "Reconstruction tolerance")->capture_default_str();
  app.add_option("--golden", golden, "Compare reports byte-for-byte with <dir>/<name>.json")->check(CLI::ExistingDirectory);
  app.add_flag("--write-golden", write_golden, "Write reports into the --golden directory instead");

  int n = 2;
  auto* brackets = app.add_subcommand("verify-brackets", "Exact structure constants and identities of sl(n)");
  brackets->add_option("--n", n, "Matrix size, 2..8")->required();

  std::vector<std::string> files;
  double epsilon = 0.01;
  long long max_den = 1'000'000;
  auto* decompose = app.add_subcommand("decompose", "Iwasawa chart of an SL(n) matrix");
  decompose->add_option("files", files, "Matrix JSON files")->required()->check(CLI::ExistingFile);
  auto* check = app.add_subcommand("check-foliation", "Maurer-Cartan, consistency and equivariance checks");
  check->add_option("files", files, "Lie foliation spec files")->required()->check(CLI::ExistingFile);
  auto* tischler = app.add_subcommand("tischler", "Rationalize a closed cochain and integrate it to the circle");
  tischler->add_option("files", files, "Cochain JSON files")->required()->check(CLI::ExistingFile);
  tischler->add_option("--epsilon", epsilon, "Sup-norm perturbation budget")->required();
  tischler->add_option("--max-denominator", max_den, "Cap on convergent denominators")->capture_default_str();
  auto* pipeline = app.add_subcommand("pipeline", "SL(n) foliation to a circle fibration");
  pipeline->add_option("files", files, "Lie foliation spec files")->required()->check(CLI::ExistingFile);
  pipeline->add_option("--epsilon", epsilon, "Sup-norm perturbation budget")->required();

  std::string example_name;
  bool list = false;
  auto* example = app.add_subcommand("example", "Print a built-in input");
  example->add_option("name", example_name, "Example name");
  example->add_flag("--list", list, "List example names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (write_golden && golden.empty()) {
    std::cerr << "--write-golden needs --golden <dir>\n";
    return kExitInput;
  }

  std::unique_ptr<slfol_context, ContextDeleter> ctx(slfol_context_create());
  if (!ctx || slfol_context_set_tolerances(ctx.get(), eq_tol, residual_tol) != SLFOL_OK) {
    std::cerr << "invalid tolerances: " << slfol_last_error() << "\n";
    return kExitInput;
  }
  const slfol_context* c = ctx.get();

  std::vector<Result> results;
  if (*brackets) {
    slfol_report* r = nullptr;
    const slfol_status s = slfol_verify_brackets(c, n, &r);
    results.push_back(finish("n" + std::to_string(n) + ".verify-brackets", s, r));
  } else if (*decompose) {
    results = run_files(files, "decompose", [c](const char* t, slfol_report** r) { return slfol_decompose(c, t, r); });
  } else if (*check) {
    results = run_files(files, "check-foliation",
                        [c](const char* t, slfol_report** r) { return slfol_check_foliation(c, t, r); });
  } else if (*tischler) {
    results = run_files(files, "tischler", [c, epsilon, max_den](const char* t, slfol_report** r) {
      return slfol_tischler(c, t, epsilon, max_den, r);
    });
  } else if (*pipeline) {
    results = run_files(files, "pipeline",
                        [c, epsilon](const char* t, slfol_report** r) { return slfol_pipeline(c, t, epsilon, r); });
  } else if (*example) {
    if (list || example_name.empty()) {
      std::cout << slfol_example_names();
      return kExitOk;
    }
    slfol_report* r = nullptr;
    const slfol_status s = slfol_example(example_name.c_str(), &r);
    results.push_back(finish(example_name + ".example", s, r));
  }
  return emit(results, golden, write_golden);
}
