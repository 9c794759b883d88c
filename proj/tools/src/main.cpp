#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toricres/error.hpp"
#include "toricres/fixtures.hpp"
#include "toricres/fuzz.hpp"
#include "toricres/job.hpp"

namespace fs = std::filesystem;
using toricres::io::json;
namespace job = toricres::job;
namespace fixtures = toricres::fixtures;
namespace fuzz = toricres::fuzz;

namespace {

// Writes `text` to stdout and, when TORICRES_OUT_DIR is set, to that directory.
void emit(const std::string& text, const std::string& file_name) {
  std::cout << text;
  const char* dir = std::getenv("TORICRES_OUT_DIR");
  if (!dir || !*dir) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = fs::path(dir) / file_name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) std::cerr << "warning: could not write " << path << "\n";
}

void print_failure(const json& report) {
  if (report.contains("error")) {
    std::cerr << "error: " << report["error"]["code"].get<std::string>() << ": "
              << report["error"]["message"].get<std::string>() << "\n";
  }
}

int run_job_command(const std::string& command, const std::string& path, bool timing) {
  const std::string stem = fs::path(path).stem().string();
  json raw;
  {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      return job::kExitInput;
    }
    try {
      raw = json::parse(in);
    } catch (const json::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      return job::kExitInput;
    }
  }
  const job::Options options{timing};
  const job::Outcome out = job::run_guarded(command, raw, [&](const job::JobSpec& spec) {
    return command == "resolve" ? job::cmd_resolve(spec, options) : job::cmd_verify(spec, options);
  });
  print_failure(out.report);
  if (out.report.contains("stages")) {
    for (const auto& [name, stage] : out.report["stages"].items()) {
      std::cerr << name << ": " << (stage["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
  }
  emit(toricres::io::canonical_dump(out.report), command + "-" + stem + ".json");
  return out.exit_code;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const toricres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return job::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return job::kExitEngine;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric resolutions of base-changed semi-stable degenerations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TORICRES_VERSION));

  std::string job_path;
  bool timing = false;
  auto* resolve = app.add_subcommand("resolve", "Resolve a job and print the refinement");
  resolve->add_option("job", job_path, "Job JSON file")->required();
  resolve->add_flag("--timing", timing, "Include wall-clock timings in the report");

  auto* verify = app.add_subcommand("verify", "Resolve a job and run its verification stages");
  verify->add_option("job", job_path, "Job JSON file")->required();
  verify->add_flag("--timing", timing, "Include wall-clock timings in the report");

  std::string fixture_name;
  std::string variant = "schedule";
  auto* fixture = app.add_subcommand("fixture", "Run a bundled example against its expected data");
  fixture->add_option("name", fixture_name, "Fixture name")->required()->check(CLI::IsMember({"a1", "a2"}));
  fixture->add_option("--variant", variant, "schedule, reordered or figure")
      ->check(CLI::IsMember({"schedule", "reordered", "figure"}));

  std::uint64_t seed = 1;
  std::uint64_t count = 100;
  unsigned threads = 0;
  auto* fz = app.add_subcommand("fuzz", "Verify random complexes");
  fz->add_option("--seed", seed, "Campaign seed");
  fz->add_option("--count", count, "Number of cases")->check(CLI::PositiveNumber);
  fz->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string format = "csv";
  std::string matrix_fixture = "a2";
  std::string matrix_job;
  auto* exp = app.add_subcommand("export-matrix", "Print the intersection matrix");
  exp->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
  auto* fixture_opt = exp->add_option("--fixture", matrix_fixture, "Fixture to export")
                          ->check(CLI::IsMember({"a1", "a2"}));
  exp->add_option("--job", matrix_job, "Job JSON file to export instead")->excludes(fixture_opt);
  exp->add_option("--variant", variant, "Fixture variant")
      ->check(CLI::IsMember({"schedule", "reordered", "figure"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : job::kExitInput;
  }

  if (*resolve) return run_job_command("resolve", job_path, timing);
  if (*verify) return run_job_command("verify", job_path, timing);

  if (*fixture) {
    return guarded([&] {
      const auto run = fixtures::run_fixture(fixture_name, fixtures::variant_from_string(variant));
      for (const auto& c : run.checks) {
        std::cerr << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      emit(toricres::io::canonical_dump(fixtures::report_json(run)),
           "fixture-" + fixture_name + "-" + variant + ".json");
      return run.ok() ? job::kExitOk : job::kExitVerificationFailed;
    });
  }

  if (*fz) {
    return guarded([&] {
      const auto campaign = fuzz::run_campaign(seed, count, threads);
      std::cerr << campaign.passed() << "/" << campaign.cases.size() << " cases passed\n";
      for (const auto& c : campaign.cases) {
        if (!c.passed) {
          std::cerr << "case " << c.index << " (seed " << c.seed << "): "
                    << (c.error.empty() ? "verification failed" : c.error) << "\n";
        }
      }
      emit(toricres::io::canonical_dump(fuzz::campaign_json(campaign)),
           "fuzz-" + std::to_string(seed) + "-" + std::to_string(count) + ".json");
      return campaign.exit_code();
    });
  }

  if (*exp) {
    return guarded([&] {
      fixtures::IntersectionMatrix m;
      std::string name;
      if (!matrix_job.empty()) {
        std::ifstream in(matrix_job);
        if (!in) throw toricres::Error(toricres::ErrorCode::InvalidInput, "cannot read " + matrix_job);
        json raw;
        try {
          raw = json::parse(in);
        } catch (const json::exception& e) {
          throw toricres::Error(toricres::ErrorCode::InvalidInput, matrix_job + ": " + e.what());
        }
        const auto spec = job::parse_job(raw);
        const auto resolved = job::obtain_refinement(spec);
        auto tables = toricres::compute_tables(resolved.refinement);
        if (spec.intersection_override) {
          job::apply_intersection_override(resolved.refinement, *spec.intersection_override, tables);
        }
        m = fixtures::intersection_matrix(resolved.refinement, tables);
        name = fs::path(matrix_job).stem().string();
      } else {
        m = fixtures::intersection_matrix(
            fixtures::run_fixture(matrix_fixture, fixtures::variant_from_string(variant)));
        name = matrix_fixture + "-" + variant;
      }
      const bool csv = format == "csv";
      emit(csv ? fixtures::matrix_csv(m) : fixtures::matrix_markdown(m),
           "matrix-" + name + (csv ? ".csv" : ".md"));
      return job::kExitOk;
    });
  }
  return job::kExitInput;
}
