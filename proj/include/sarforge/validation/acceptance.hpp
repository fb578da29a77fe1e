// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace sarforge::validation {

/// One measured-vs-expected line of a criterion.
struct CheckRow {
  std::string name;
  std::string measured;
  std::string expected;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0.0;
  std::vector<CheckRow> rows;
  std::string error;  // exception text when the check could not run

  bool pass() const;
};

struct ValidationOptions {
  /// Scratch space for the dataset determinism check; a temporary directory when empty.
  std::filesystem::path work_dir;
  /// Worker count of the parallel side of the determinism check.
  unsigned parallel_jobs = 8;
  /// Negative-control hook forwarded to keystone resampling (0 = off).
  double interp_scale_error = 0.0;
};

CriterionResult check_forward_scatter_peaks(const ValidationOptions& o);
CriterionResult check_shadow(const ValidationOptions& o);
CriterionResult check_plate_rcs(const ValidationOptions& o);
CriterionResult check_parameter_arithmetic(const ValidationOptions& o);
CriterionResult check_point_scatterers(const ValidationOptions& o);
CriterionResult check_bistatic_degradation(const ValidationOptions& o);
CriterionResult check_clip_accounting(const ValidationOptions& o);
CriterionResult check_invariances(const ValidationOptions& o);
CriterionResult check_dataset_determinism(const ValidationOptions& o);

/// All nine criteria in order; `progress` is called after each one.
std::vector<CriterionResult> run_all(const ValidationOptions& o,
                                     const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS  n  title  (t s)" or "FAIL ...".
std::string summary_line(const CriterionResult& r);
/// Summary line followed by the measured-vs-expected table.
void print_table(std::ostream& out, const CriterionResult& r);

}  // namespace sarforge::validation
