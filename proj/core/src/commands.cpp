#include "qind/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "qind/errors.hpp"
#include "qind/radar.hpp"
#include "qind/report.hpp"
#include "qind/rubric_io.hpp"
#include "qind/summary.hpp"

namespace qind {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.empty()) return;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "'");
}

std::string read_file(const fs::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string(what) + ": cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool env_truthy(const char* name) {
  const char* value = std::getenv(name);
  if (!value) return false;
  const std::string v(value);
  return !v.empty() && v != "0" && v != "false" && v != "no";
}

Rational weight_value(const json& node, const std::string& path) {
  std::optional<Rational> value;
  if (node.is_number_integer()) {
    value = Rational{node.get<std::int64_t>()};
  } else if (node.is_number()) {
    value = Rational::parse(node.dump());
  } else if (node.is_string()) {
    value = Rational::parse(node.get<std::string>());
  }
  if (!value) throw InputError("weights: not a rational at " + path);
  return *value;
}

// Resolves builtin id or file path and additionally rejects rubrics whose
// bindings name checks the registry cannot evaluate.
Rubric load_validated_rubric(const std::string& ref) {
  Rubric rubric = resolve_rubric(ref.empty() ? "fairst" : ref);
  const auto& registry = CheckRegistry::builtin();
  ValidationReport report = validate_rubric(
      rubric, [&](const std::string& id) { return registry.contains(id); });
  if (report.has_errors()) {
    std::ostringstream oss;
    oss << "rubric '" << ref << "' failed validation:";
    for (const auto& finding : report.findings) {
      if (finding.severity == Severity::Error) {
        oss << "\n  " << finding.path << ": " << finding.message;
      }
    }
    throw InputError(oss.str());
  }
  return rubric;
}

PipelineOptions make_pipeline_options(const RunConfig& config, HttpClient* client) {
  PipelineOptions options;
  options.offline = config.offline;
  options.cache_dir = config.cache_dir;
  auto mode = overall_mode_from_string(config.overall_mode);
  if (!mode) {
    throw InputError("unknown overall mode '" + config.overall_mode +
                     "' (none|threshold|weighted)");
  }
  options.overall_mode = *mode;
  if (!config.datacite_base.empty()) options.pid.datacite_base = config.datacite_base;
  if (!config.registry_base.empty()) options.registry.registry_base = config.registry_base;
  options.client = config.offline ? nullptr : client;
  options.timestamp = config.timestamp;
  return options;
}

void print_assessment(const Assessment& assessment, const Rubric& rubric,
                      const WeightScheme& weights, std::ostream& out) {
  out << assessment.target.label << " [" << rubric.id << "]\n";
  for (const auto& score : assessment.dimension_scores) {
    const Dimension* dim = rubric.find_dimension(score.dimension_id);
    out << "  " << std::left << std::setw(22) << (dim ? dim->title : score.dimension_id)
        << std::right << " " << score.score.to_decimal(2) << "/" << rubric.max_level
        << "  min " << weights.minimum_for(score.dimension_id).to_decimal(2) << "  "
        << (score.meets_minimum ? "met" : "NOT met") << "\n";
  }
  if (assessment.overall) {
    out << "  overall: " << assessment.overall->to_decimal(2) << "\n";
  }
  out << "passes all minimums: " << (assessment.passes_all_minimums ? "yes" : "no") << "\n";
}

struct Artifacts {
  std::string report_json;
  std::string report_md;
  std::string svg;
};

Artifacts make_artifacts(const AssessOutcome& outcome, const Rubric& rubric,
                         const WeightScheme& weights, bool want_svg,
                         std::vector<std::string>* warnings) {
  Artifacts artifacts;
  artifacts.report_json =
      emit_report_json(outcome.assessment, rubric, weights, &outcome.evidence);
  artifacts.report_md = emit_report_markdown(outcome.assessment, rubric, weights);
  if (want_svg) {
    RenderResult render = render_radar(rubric, {outcome.assessment}, weights);
    artifacts.svg = std::move(render.svg);
    if (warnings) {
      warnings->insert(warnings->end(), render.warnings.begin(), render.warnings.end());
    }
  }
  return artifacts;
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') {
      out += c;
    } else {
      out += '-';
    }
  }
  return out.empty() ? "target" : out;
}

struct ManifestEntry {
  TargetSpec spec;
};

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("manifest: expected a JSON array of targets");

  std::vector<ManifestEntry> entries;
  for (size_t i = 0; i < doc.size(); ++i) {
    const json& node = doc[i];
    const std::string path = "manifest[" + std::to_string(i) + "]";
    if (!node.is_object()) throw InputError(path + ": expected an object");
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.key() != "kind" && it.key() != "locator" && it.key() != "answers" &&
          it.key() != "label" && it.key() != "external_score") {
        throw InputError(path + ": unknown key '" + it.key() + "'");
      }
    }
    ManifestEntry entry;
    if (!node.contains("locator") || !node["locator"].is_string()) {
      throw InputError(path + ": 'locator' (string) is required");
    }
    entry.spec.locator = node["locator"].get<std::string>();
    entry.spec.kind = node.value("kind", "");
    entry.spec.answers_path = node.value("answers", "");
    entry.spec.label = node.value("label", "");
    if (node.contains("external_score")) {
      const json& es = node["external_score"];
      entry.spec.external_score = es.is_string() ? es.get<std::string>() : es.dump();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

void apply_environment(RunConfig& config) {
  if (const char* v = std::getenv("QIND_CACHE_DIR")) config.cache_dir = v;
  if (env_truthy("QIND_OFFLINE")) config.offline = true;
  if (const char* v = std::getenv("QIND_DATACITE_BASE")) config.datacite_base = v;
  if (const char* v = std::getenv("QIND_REGISTRY_BASE")) config.registry_base = v;
}

WeightScheme load_weights_file(const std::string& path, const Rubric& rubric) {
  WeightScheme scheme;
  json doc;
  try {
    doc = json::parse(read_file(path, "weights"));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("weights: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("weights: document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "attribute_weights" && it.key() != "dimension_minimums" &&
        it.key() != "dimension_weights") {
      throw InputError("weights: unknown key '" + it.key() + "'");
    }
  }

  if (auto it = doc.find("attribute_weights"); it != doc.end()) {
    for (auto w = it->begin(); w != it->end(); ++w) {
      if (!rubric.find_attribute(w.key())) {
        throw InputError("weights: unknown attribute '" + w.key() + "'");
      }
      scheme.attribute_weights[w.key()] =
          weight_value(w.value(), "attribute_weights." + w.key());
    }
  }
  if (auto it = doc.find("dimension_minimums"); it != doc.end()) {
    for (auto m = it->begin(); m != it->end(); ++m) {
      if (!rubric.find_dimension(m.key())) {
        throw InputError("weights: unknown dimension '" + m.key() + "'");
      }
      scheme.dimension_minimums[m.key()] =
          weight_value(m.value(), "dimension_minimums." + m.key());
    }
  }
  if (auto it = doc.find("dimension_weights"); it != doc.end()) {
    for (auto w = it->begin(); w != it->end(); ++w) {
      if (!rubric.find_dimension(w.key())) {
        throw InputError("weights: unknown dimension '" + w.key() + "'");
      }
      scheme.dimension_weights[w.key()] =
          weight_value(w.value(), "dimension_weights." + w.key());
    }
  }
  scheme.fill_defaults(rubric);
  return scheme;
}

int cmd_assess(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::unique_ptr<HttpClient> client;
  try {
    if (config.target.empty()) throw InputError("assess: no target given");

    const Rubric rubric = load_validated_rubric(config.rubric_ref);
    WeightScheme weights = config.weights_path.empty()
                               ? WeightScheme::defaults_for(rubric)
                               : load_weights_file(config.weights_path, rubric);
    weights.strict_minimum = config.strict_minimum;

    if (!config.offline) client = make_real_http_client();
    PipelineOptions options = make_pipeline_options(config, client.get());

    TargetSpec spec;
    spec.locator = config.target;
    spec.kind = config.kind;
    spec.answers_path = config.answers_path;
    spec.label = config.label;
    spec.external_score = config.external_score;

    AssessOutcome outcome = assess_target(spec, rubric, weights, options);

    std::vector<std::string> warnings;
    Artifacts artifacts =
        make_artifacts(outcome, rubric, weights, !config.svg_out.empty(), &warnings);
    for (const auto& warning : warnings) err << "warning: " << warning << "\n";
    for (const auto& failure : outcome.evidence.failures) {
      err << "collector " << failure.collector << ": " << failure.reason << "\n";
    }

    if (!config.json_out.empty()) write_file_atomic(config.json_out, artifacts.report_json);
    if (!config.md_out.empty()) write_file_atomic(config.md_out, artifacts.report_md);
    if (!config.svg_out.empty()) write_file_atomic(config.svg_out, artifacts.svg);

    print_assessment(outcome.assessment, rubric, weights, out);

    if (outcome.collector_failure) return kExitCollectorFailure;
    return outcome.assessment.passes_all_minimums ? kExitOk : kExitBelowMinimum;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCollectorFailure;
  }
}

int cmd_batch(const std::string& manifest_path, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  std::unique_ptr<HttpClient> client;
  try {
    const Rubric rubric = load_validated_rubric(config.rubric_ref);
    WeightScheme weights = config.weights_path.empty()
                               ? WeightScheme::defaults_for(rubric)
                               : load_weights_file(config.weights_path, rubric);
    weights.strict_minimum = config.strict_minimum;

    std::vector<ManifestEntry> entries = parse_manifest(read_file(manifest_path, "manifest"));

    if (!config.offline) client = make_real_http_client();
    PipelineOptions options = make_pipeline_options(config, client.get());

    const fs::path out_dir = config.out_dir.empty() ? fs::path(".") : fs::path(config.out_dir);

    // Fan out per target; slots keep manifest order for every artifact.
    struct Slot {
      AssessOutcome outcome;
      std::string error;
      bool input_error = false;
    };
    std::vector<Slot> slots(entries.size());

    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                    : std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min<unsigned>(jobs, std::max<size_t>(entries.size(), 1));

    std::mutex next_mutex;
    size_t next = 0;
    auto worker = [&]() {
      while (true) {
        size_t index;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= entries.size()) return;
          index = next++;
        }
        try {
          slots[index].outcome =
              assess_target(entries[index].spec, rubric, weights, options);
        } catch (const InputError& e) {
          slots[index].error = e.what();
          slots[index].input_error = true;
        } catch (const std::exception& e) {
          slots[index].error = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<Assessment> assessments;
    bool collector_failure = false;
    for (size_t i = 0; i < entries.size(); ++i) {
      Slot& slot = slots[i];
      if (!slot.error.empty()) {
        err << "error: target " << entries[i].spec.locator << ": " << slot.error << "\n";
        return slot.input_error ? kExitInputError : kExitCollectorFailure;
      }
      collector_failure |= slot.outcome.collector_failure;

      const std::string base =
          sanitize_label(entries[i].spec.label.empty()
                             ? std::to_string(i + 1)
                             : std::to_string(i + 1) + "-" + entries[i].spec.label);
      Artifacts artifacts = make_artifacts(slot.outcome, rubric, weights,
                                           rubric.dimensions.size() >= 3, nullptr);
      write_file_atomic(out_dir / (base + ".report.json"), artifacts.report_json);
      write_file_atomic(out_dir / (base + ".report.md"), artifacts.report_md);
      if (!artifacts.svg.empty()) write_file_atomic(out_dir / (base + ".svg"), artifacts.svg);
      assessments.push_back(slot.outcome.assessment);
    }

    BatchSummary summary = batch_summary(rubric, assessments, weights);
    write_file_atomic(out_dir / "summary.json", emit_summary_json(summary));
    write_file_atomic(out_dir / "summary.md", emit_summary_markdown(summary));

    out << "assessed " << summary.counts.total << " target(s); " << summary.counts.passing
        << " meet every dimension minimum\n";
    for (const auto& failing : summary.failing) {
      out << "  below minimum: " << failing.label << " (";
      for (size_t i = 0; i < failing.failing_dimensions.size(); ++i) {
        if (i > 0) out << ", ";
        out << failing.failing_dimensions[i];
      }
      out << ")\n";
    }
    if (collector_failure) return kExitCollectorFailure;
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCollectorFailure;
  }
}

int cmd_rubric(const std::string& action, const std::string& ref, std::ostream& out,
               std::ostream& err) {
  if (action != "show" && action != "validate") {
    err << "error: unknown rubric action '" << action << "' (show|validate)\n";
    return kExitInputError;
  }

  if (action == "validate") {
    Rubric rubric;
    try {
      rubric = resolve_rubric(ref);
    } catch (const InputError& e) {
      const std::string message = e.what();
      err << "error: " << message << "\n";
      return message.rfind("rubric-not-found", 0) == 0 ? kExitInputError : kExitBelowMinimum;
    }
    const auto& registry = CheckRegistry::builtin();
    ValidationReport report = validate_rubric(
        rubric, [&](const std::string& id) { return registry.contains(id); });
    for (const auto& finding : report.findings) {
      out << (finding.severity == Severity::Error ? "error" : "warning") << " at "
          << finding.path << ": " << finding.message << "\n";
    }
    out << (report.has_errors() ? "invalid" : "valid") << ": " << ref << " ("
        << report.findings.size() << " finding(s))\n";
    return report.has_errors() ? kExitBelowMinimum : kExitOk;
  }

  try {
    const Rubric rubric = resolve_rubric(ref);
    out << rubric.title << " (" << rubric.id << ")\n";
    out << "Maturity scale:\n";
    for (const auto& line : maturity_scale_lines(rubric)) {
      out << "  " << line << "\n";
    }
    for (const auto& dim : rubric.dimensions) {
      out << "\n== " << dim.title << " ==\n";
      if (!dim.description.empty()) out << dim.description << "\n";
      for (const auto& attr : dim.attributes) {
        out << "\n-- " << attr.title << " [" << attr.id << ", weight "
            << attr.default_weight.to_string() << "]\n";
        for (const auto& stmt : attr.levels) {
          const std::string& binding = attr.binding_at(stmt.level);
          out << "  (" << stmt.level << ") " << stmt.text << "  [" << binding << "]\n";
        }
      }
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_render(const std::vector<std::string>& report_paths, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  try {
    if (report_paths.empty()) throw InputError("render: no report files given");
    if (config.svg_out.empty()) throw InputError("render: --svg output path required");

    std::vector<Assessment> assessments;
    std::string rubric_id;
    WeightScheme weights;
    for (const auto& path : report_paths) {
      ParsedReport parsed = parse_report(read_file(path, "report"));
      if (rubric_id.empty()) {
        rubric_id = parsed.rubric_id;
        weights.dimension_minimums = parsed.minimums;
      } else if (rubric_id != parsed.rubric_id) {
        throw InputError("render: reports mix rubrics '" + rubric_id + "' and '" +
                         parsed.rubric_id + "'");
      }
      assessments.push_back(std::move(parsed.assessment));
    }

    const Rubric rubric = load_validated_rubric(
        config.rubric_ref.empty() ? rubric_id : config.rubric_ref);
    RenderResult render = render_radar(rubric, assessments, weights);
    for (const auto& warning : render.warnings) err << "warning: " << warning << "\n";
    write_file_atomic(config.svg_out, render.svg);
    out << "wrote " << config.svg_out << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCollectorFailure;
  }
}

}  // namespace qind
