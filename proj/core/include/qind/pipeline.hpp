#pragma once

#include <optional>
#include <string>

#include "qind/checks.hpp"
#include "qind/collectors.hpp"
#include "qind/evidence.hpp"
#include "qind/manual_answers.hpp"
#include "qind/scoring.hpp"

namespace qind {

// One target to assess: where it lives, how to treat it, what the reviewer
// already answered.
struct TargetSpec {
  std::string locator;         // path, URL, or PID
  std::string kind;            // "repo" | "pid" | "url" | "" (infer)
  std::string answers_path;    // optional ManualAnswers file
  std::string label;           // display label
  std::string external_score;  // optional percentage for the external-view axis
};

struct PipelineOptions {
  bool offline = false;
  std::string cache_dir;
  OverallMode overall_mode = OverallMode::None;
  CheckConfig checks;
  PidConfig pid;
  RegistryConfig registry;
  HttpClient* client = nullptr;  // nullptr: pipeline constructs none; cache-only
  std::string timestamp;         // copied into the target descriptor verbatim
};

struct AssessOutcome {
  Assessment assessment;
  EvidenceSet evidence;
  // True when a collector recorded a failure; under offline mode cache
  // misses are expected and do not count.
  bool collector_failure = false;
};

// "repo" | "pid" | "url"; throws InputError when nothing matches.
std::string infer_target_kind(const std::string& locator);

// Collect evidence, overlay answers, rate and aggregate.
AssessOutcome assess_target(const TargetSpec& target, const Rubric& rubric,
                            const WeightScheme& weights, const PipelineOptions& options);

}  // namespace qind
