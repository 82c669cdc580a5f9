/*
 * report.hpp
 * ----------
 * Deterministic serialization of results and the full table-regeneration run.
 */
#pragma once

#include "superbialg/golden.hpp"

namespace sbg {

std::string algebra_to_json_string(const SuperAlgebra& a);
std::string solution_set_json_string(const SolutionSet& s);
std::string classification_json_string(const ClassificationResult& c);
std::string bracket_table_json_string(const PoissonTable& t);
std::string bracket_table_markdown(const PoissonTable& t, const std::string& title);

struct ReportStatus {
  std::vector<CheckResult> results;
  std::vector<std::string> failures;
  bool all_ok() const { return failures.empty(); }
};

// Regenerates the machine-readable tables into `outdir` and verifies every
// embedded golden row. Byte-identical across runs with the same manifest.
ReportStatus report_all(const std::string& outdir);

} // namespace sbg
