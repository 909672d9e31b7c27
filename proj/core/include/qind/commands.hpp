#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qind/pipeline.hpp"

namespace qind {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;              // every dimension minimum met
inline constexpr int kExitBelowMinimum = 1;    // assessment ran, minimums missed
inline constexpr int kExitInputError = 2;      // bad flags, files, or references
inline constexpr int kExitCollectorFailure = 3;  // collector/network trouble online

struct RunConfig {
  std::string rubric_ref;     // builtin id or rubric file path
  std::string target;         // path | URL | PID (assess)
  std::string kind;           // "" infer | repo | pid | url
  std::string answers_path;
  std::string weights_path;
  std::string json_out;
  std::string md_out;
  std::string svg_out;
  bool offline = false;
  std::string cache_dir;
  std::string overall_mode = "none";
  bool strict_minimum = false;
  std::string external_score;
  std::string label;
  std::string timestamp;      // recorded verbatim; empty keeps artifacts reproducible
  std::string datacite_base;  // empty = default endpoint
  std::string registry_base;
  int jobs = 0;               // batch concurrency; 0 = pick a small default
  std::string out_dir;        // batch artifact directory
};

// QIND_CACHE_DIR, QIND_OFFLINE, QIND_DATACITE_BASE, QIND_REGISTRY_BASE.
void apply_environment(RunConfig& config);

int cmd_assess(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_batch(const std::string& manifest_path, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_rubric(const std::string& action, const std::string& ref, std::ostream& out,
               std::ostream& err);
int cmd_render(const std::vector<std::string>& report_paths, const RunConfig& config,
               std::ostream& out, std::ostream& err);

// Weights file: {"attribute_weights": {id: w}, "dimension_minimums": {id: m},
// "dimension_weights": {id: w}}; numbers or "n/d" strings.
WeightScheme load_weights_file(const std::string& path, const Rubric& rubric);

}  // namespace qind
