#include "qind/pipeline.hpp"

#include <filesystem>

#include "qind/errors.hpp"

namespace qind {

namespace fs = std::filesystem;

std::string infer_target_kind(const std::string& locator) {
  std::error_code ec;
  if (fs::exists(locator, ec)) return "repo";
  switch (classify_identifier(locator)) {
    case IdentifierKind::Doi:
    case IdentifierKind::Handle:
      return "pid";
    case IdentifierKind::Url:
      return "url";
    case IdentifierKind::None:
      break;
  }
  throw InputError("cannot classify target '" + locator +
                   "': not an existing path, PID, or URL (use --kind to force)");
}

AssessOutcome assess_target(const TargetSpec& target, const Rubric& rubric,
                            const WeightScheme& weights, const PipelineOptions& options) {
  const std::string kind = target.kind.empty() ? infer_target_kind(target.locator)
                                               : target.kind;
  if (kind != "repo" && kind != "pid" && kind != "url") {
    throw InputError("unknown target kind '" + kind + "' (repo|pid|url)");
  }

  Fetcher::Options fetch_options;
  fetch_options.cache_dir = options.cache_dir;
  fetch_options.offline = options.offline;
  Fetcher fetcher(fetch_options, options.client);

  std::vector<EvidenceSet> parts;
  if (kind == "repo") {
    std::error_code ec;
    if (!fs::is_directory(target.locator, ec)) {
      throw InputError("target path '" + target.locator + "' is not a directory");
    }
    parts.push_back(scan_local_repository(target.locator));
  } else if (kind == "pid") {
    parts.push_back(fetch_pid_metadata(target.locator, fetcher, options.pid));
  } else {
    parts.push_back(fetch_pid_metadata(target.locator, fetcher, options.pid));
    parts.push_back(lookup_meta_repository(target.locator, fetcher, options.registry));
  }

  if (!target.external_score.empty()) {
    EvidenceSet external;
    Rational percent = Rational::parse_or_throw(target.external_score);
    if (percent.is_negative() || percent > Rational{100}) {
      throw InputError("external score outside [0,100]: " + target.external_score);
    }
    external.add("external_score_percent", target.external_score,
                 {"cli", "--external-score", ""});
    parts.push_back(std::move(external));
  }

  EvidenceSet evidence = EvidenceSet::merged(std::move(parts));
  evidence.target = target.locator;

  ManualAnswers answers;
  if (!target.answers_path.empty()) {
    answers = ManualAnswers::load_file(target.answers_path);
  }

  auto verdicts = derive_verdicts(rubric, evidence, answers, CheckRegistry::builtin(),
                                  options.checks);

  TargetDescriptor descriptor;
  descriptor.identifier = target.locator;
  descriptor.kind = rubric.id == "pocme" ? "data"
                    : rubric.id == "fairst" ? "software"
                    : (kind == "repo" ? "software" : "data");
  descriptor.rubric_id = rubric.id;
  descriptor.label = target.label.empty() ? target.locator : target.label;
  descriptor.timestamp = options.timestamp;

  AssessOutcome outcome;
  outcome.assessment = score_assessment(rubric, std::move(descriptor), verdicts, weights,
                                        options.overall_mode);
  outcome.collector_failure = !options.offline && !evidence.failures.empty();
  outcome.evidence = std::move(evidence);
  return outcome;
}

}  // namespace qind
