// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

// sarforge command-line front end.
// Exit codes: 0 success, 1 runtime failure, 2 configuration or usage error.

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sarforge/cli/commands.hpp"
#include "sarforge/cli/dataset.hpp"
#include "sarforge/cli/project.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/validation/acceptance.hpp"

namespace fs = std::filesystem;
using namespace sarforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct GlobalFlags {
  std::string config;
  std::string out;
  unsigned jobs = 1;
};

cli::ProjectConfig require_project(const GlobalFlags& g) {
  if (g.config.empty()) throw ConfigError("--config", "a project file is required for this command");
  return cli::load_project(g.config);
}

fs::path output_root(const GlobalFlags& g, const cli::ProjectConfig& p) {
  return cli::resolve_output_root(g.out.empty() ? std::nullopt : std::optional<fs::path>(g.out), p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sarforge: bistatic SAR signature simulator and dataset generator"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--config", g.config, "project file (JSON, see docs/config.schema.json)");
  app.add_option("--out", g.out, "output root (overrides SARFORGE_OUT and output.root)");
  app.add_option("--jobs", g.jobs, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  auto* rcs = app.add_subcommand("rcs", "bistatic RCS cut at the center frequency -> rcs.csv");
  auto* shadow = app.add_subcommand("shadowmap", "surface currents of a scene with ground -> currents.csv");
  auto* sweep_cmd = app.add_subcommand("sweep", "full frequency x azimuth run -> run.bsar");
  auto* image = app.add_subcommand("image", "clip series of a run -> clips/NNN.{png,json}");
  std::string run_path;
  image->add_option("--run", run_path, "run file (default <out>/run.bsar)");
  auto* dataset = app.add_subcommand("dataset", "planned runs and clips -> dataset/ with manifest.json");
  bool dry_run = false;
  dataset->add_flag("--dry-run", dry_run, "write the planned manifest and list the runs only");
  auto* validate = app.add_subcommand("validate", "run the acceptance checks and print the report");
  std::string work_dir;
  validate->add_option("--work-dir", work_dir, "scratch directory for the dataset check");
  double perturb = 0.0;
  for (auto* sub : {image, dataset, validate})
    sub->add_option("--perturb-interpolation", perturb)->group("");  // negative-control hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*validate) {
      validation::ValidationOptions o;
      o.work_dir = work_dir;
      o.interp_scale_error = perturb;
      std::size_t failed = 0;
      validation::run_all(o, [&](const validation::CriterionResult& r) {
        if (!r.pass()) ++failed;
        validation::print_table(std::cout, r);
        std::cout.flush();
      });
      std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " criteria failed") << "\n";
      return failed == 0 ? kExitOk : kExitFailure;
    }

    const auto project = require_project(g);
    const fs::path out = output_root(g, project);
    if (*rcs) {
      cli::print_rcs_summary(std::cout, cli::cmd_rcs(project, out, g.jobs));
    } else if (*shadow) {
      const auto r = cli::cmd_shadowmap(project, out);
      std::cout << "ground facets: " << r.ground_facets << " (lit " << r.ground_lit << ", shadowed "
                << r.ground_shadowed << ")\n";
      std::printf("max |J| on shadowed facets: %.3g A/m\n", r.max_shadowed_current);
      std::cout << "csv: " << r.csv_path.string() << "\n";
    } else if (*sweep_cmd) {
      std::cout << "run: " << cli::cmd_sweep(project, out, g.jobs).string() << "\n";
    } else if (*image) {
      const fs::path run = run_path.empty() ? out / "run.bsar" : fs::path(run_path);
      const auto r = cli::cmd_image(project, run, out, g.jobs, perturb);
      std::cout << "clips: " << r.clips << " (degraded " << r.degraded << ", skipped " << r.skipped << ") in "
                << (out / "clips").string() << "\n";
    } else if (*dataset) {
      cli::DatasetOptions o;
      o.jobs = g.jobs;
      o.dry_run = dry_run;
      o.interp_scale_error = perturb;
      cli::cmd_dataset(project, out, o, std::cout);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
