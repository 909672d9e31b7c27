#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "qind/commands.hpp"
#include "qind/report.hpp"

namespace {

void add_shared_options(CLI::App* cmd, qind::RunConfig& config) {
  cmd->add_option("--rubric", config.rubric_ref,
                  "Rubric: builtin id (pocme|fairst) or rubric file path")
      ->default_str("fairst");
  cmd->add_option("--weights", config.weights_path,
                  "Weights file (attribute weights, dimension minimums)");
  cmd->add_flag("--offline", config.offline,
                "Never touch the network; cached responses only");
  cmd->add_option("--cache-dir", config.cache_dir, "Directory for cached remote responses");
  cmd->add_option("--overall", config.overall_mode,
                  "Overall indicator mode: none|threshold|weighted")
      ->default_str("none");
  cmd->add_flag("--strict-threshold", config.strict_minimum,
                "Require scores strictly above the dimension minimums");
  cmd->add_option("--datacite-base", config.datacite_base, "Metadata API base URL override");
  cmd->add_option("--registry-base", config.registry_base, "Registry API base URL override");
  cmd->add_option("--timestamp", config.timestamp,
                  "Timestamp to record in the report (omitted by default so "
                  "identical runs stay byte-identical)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qind - multi-dimensional maturity assessment for research data "
               "and software publications"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qind ") + qind::tool_version());

  qind::RunConfig config;
  qind::apply_environment(config);

  // assess: one target, full pipeline, optional artifacts.
  auto* assess = app.add_subcommand("assess", "Assess a single repository, PID, or URL");
  std::string positional_target;
  assess->add_option("target", positional_target, "Path, DOI/handle, or URL (kind inferred)");
  std::string repo_target, pid_target, url_target;
  assess->add_option("--repo", repo_target, "Local repository path to scan");
  assess->add_option("--pid", pid_target, "Persistent identifier (DOI or handle)");
  assess->add_option("--url", url_target, "Repository/landing URL");
  assess->add_option("--kind", config.kind, "Force target kind: repo|pid|url");
  assess->add_option("--answers", config.answers_path, "Manual answers JSON file");
  assess->add_option("--json", config.json_out, "Write the JSON report here");
  assess->add_option("--md", config.md_out, "Write the Markdown report here");
  assess->add_option("--svg", config.svg_out, "Write the radar SVG here");
  assess->add_option("--label", config.label, "Display label for reports and plots");
  assess->add_option("--external-score", config.external_score,
                     "Percentage from a domain-specific assessment tool (0-100)");
  add_shared_options(assess, config);

  // batch: manifest of targets, per-target artifacts plus a summary.
  auto* batch = app.add_subcommand("batch", "Assess every target in a JSON manifest");
  std::string manifest_path;
  batch->add_option("manifest", manifest_path, "JSON list [{kind, locator, answers?, label?}]")
      ->required();
  batch->add_option("--out-dir", config.out_dir, "Directory for per-target artifacts")
      ->default_str(".");
  batch->add_option("--jobs", config.jobs, "Concurrent targets (default: small)");
  add_shared_options(batch, config);

  // rubric: inspect or validate rubric definitions.
  auto* rubric = app.add_subcommand("rubric", "Show or validate a rubric");
  std::string rubric_action, rubric_ref;
  rubric->add_option("action", rubric_action, "show|validate")->required();
  rubric->add_option("ref", rubric_ref, "Builtin id or rubric file path")->required();

  // render: re-render the radar from saved JSON reports.
  auto* render = app.add_subcommand("render", "Render a radar SVG from saved JSON reports");
  std::vector<std::string> report_paths;
  render->add_option("reports", report_paths, "Assessment report JSON file(s)")->required();
  render->add_option("--svg", config.svg_out, "Output SVG path")->required();
  render->add_option("--rubric", config.rubric_ref,
                     "Rubric override when the report's rubric is not built in");

  CLI11_PARSE(app, argc, argv);

  try {
    if (assess->parsed()) {
      int target_flags = 0;
      if (!positional_target.empty()) {
        config.target = positional_target;
        ++target_flags;
      }
      if (!repo_target.empty()) {
        config.target = repo_target;
        config.kind = "repo";
        ++target_flags;
      }
      if (!pid_target.empty()) {
        config.target = pid_target;
        config.kind = "pid";
        ++target_flags;
      }
      if (!url_target.empty()) {
        config.target = url_target;
        config.kind = "url";
        ++target_flags;
      }
      if (target_flags != 1) {
        std::cerr << "error: assess needs exactly one target "
                     "(positional, --repo, --pid, or --url)\n";
        return qind::kExitInputError;
      }
      return qind::cmd_assess(config, std::cout, std::cerr);
    }
    if (batch->parsed()) {
      return qind::cmd_batch(manifest_path, config, std::cout, std::cerr);
    }
    if (rubric->parsed()) {
      return qind::cmd_rubric(rubric_action, rubric_ref, std::cout, std::cerr);
    }
    if (render->parsed()) {
      return qind::cmd_render(report_paths, config, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;  // EX_SOFTWARE
  }
  return qind::kExitInputError;
}
