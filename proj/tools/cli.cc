// Copyright 2026 The moometrics Authors.
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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "moometrics/checklist.h"
#include "moometrics/coverage_metrics.h"
#include "moometrics/design_metrics.h"
#include "moometrics/errors.h"
#include "moometrics/ingest.h"
#include "moometrics/lower.h"
#include "moometrics/render.h"
#include "moometrics/report.h"
#include "moometrics/req_metrics.h"
#include "moometrics/syntax.h"
#include "moometrics/threshold_config.h"

namespace moometrics {
namespace {

namespace fs = std::filesystem;

// Raised for bad invocations and unreadable inputs; printed as-is.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> traces;
  std::string ucm;
  std::string format = "json";
  std::string config;
  std::string out;
  std::string symbols;
  std::string wmc_weight = "cyclomatic";
  bool cbo_fan_in = false;
  bool strict = false;
  std::string min_comment_density;
  std::string max_package_fraction;
};

// Positional inputs sorted by kind. Directories contribute their *.moo
// files, recursively, in lexicographic order.
struct Inputs {
  std::vector<std::string> sources;
  std::vector<std::string> requirements;
  std::vector<std::string> use_cases;
  std::vector<std::string> traces;
  std::vector<std::string> facts;
};

Inputs Classify(const Options& options) {
  Inputs inputs;
  for (const auto& input : options.inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::recursive_directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".moo") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      inputs.sources.insert(inputs.sources.end(), found.begin(), found.end());
      continue;
    }
    const std::string extension = path.extension().string();
    if (extension == ".moo") {
      inputs.sources.push_back(input);
    } else if (extension == ".req") {
      inputs.requirements.push_back(input);
    } else if (extension == ".ucm") {
      inputs.use_cases.push_back(input);
    } else if (extension == ".trc") {
      inputs.traces.push_back(input);
    } else if (extension == ".chk") {
      inputs.facts.push_back(input);
    } else {
      throw UsageError("unrecognized input " + input +
                       " (expected a directory or .moo/.req/.ucm/.trc/.chk)");
    }
  }
  if (!options.ucm.empty()) inputs.use_cases.push_back(options.ucm);
  inputs.traces.insert(inputs.traces.end(), options.traces.begin(),
                       options.traces.end());
  if (inputs.requirements.size() > 1 || inputs.use_cases.size() > 1 ||
      inputs.facts.size() > 1) {
    throw UsageError("at most one .req, .ucm, and .chk input is allowed");
  }
  return inputs;
}

// Parses and lowers every source; nullopt after printing diagnostics.
std::optional<DesignModel> BuildModel(const std::vector<std::string>& sources,
                                      std::ostream& err) {
  std::vector<SourceUnit> units;
  bool failed = false;
  for (const auto& path : sources) {
    ParseResult parsed = ParseUnit(ReadFile(path), path);
    for (const auto& diagnostic : parsed.diagnostics) {
      err << FormatDiagnostic(diagnostic) << "\n";
    }
    if (parsed.ok()) {
      units.push_back(std::move(*parsed.unit));
    } else {
      failed = true;
    }
  }
  if (failed) return std::nullopt;
  LowerResult lowered = Lower(units);
  for (const auto& diagnostic : lowered.errors) {
    err << FormatDiagnostic(diagnostic) << "\n";
  }
  return std::move(lowered.model);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw FileError("cannot write " + path);
}

Rational ParseFlagRational(const std::string& flag, const std::string& text) {
  const std::optional<Rational> value = ParseRational(text);
  if (!value || *value < 0 || *value > 1) {
    throw UsageError(flag + " must be a number in [0, 1]");
  }
  return *value;
}

enum class Command { kAnalyze, kRequirements, kCoverage, kCheck };

int Execute(Command command, const Options& options, std::ostream& out,
            std::ostream& err) {
  const Inputs inputs = Classify(options);
  const std::optional<ReportFormat> format = ParseReportFormat(options.format);
  if (!format) throw UsageError("unknown format " + options.format);

  const bool wants_design = command != Command::kRequirements;
  const bool wants_requirements =
      command == Command::kRequirements || command == Command::kCheck;
  if (wants_design && inputs.sources.empty()) {
    throw UsageError("no .moo sources given");
  }
  if (command == Command::kRequirements && inputs.requirements.empty()) {
    throw UsageError("no .req input given");
  }
  if (command == Command::kCoverage && inputs.traces.empty()) {
    throw UsageError("coverage needs at least one --trace");
  }
  if (!wants_requirements &&
      (!inputs.requirements.empty() || !inputs.use_cases.empty())) {
    throw UsageError(".req/.ucm inputs are only used by requirements/check");
  }
  if (command == Command::kRequirements &&
      (!inputs.sources.empty() || !inputs.traces.empty() ||
       !inputs.facts.empty())) {
    throw UsageError("requirements takes only .req and .ucm inputs");
  }
  if (command == Command::kAnalyze && !inputs.traces.empty()) {
    throw UsageError("traces are only used by coverage/check");
  }
  if (command == Command::kCheck && options.config.empty()) {
    throw UsageError("check requires --config");
  }

  ThresholdConfig config;
  if (!options.config.empty()) config = ReadThresholdConfig(options.config);
  EvaluateOptions evaluate;
  evaluate.strict = options.strict;
  evaluate.wmc_weighting = options.wmc_weight == "unit"
                               ? WmcWeighting::kUnit
                               : WmcWeighting::kCyclomatic;

  std::vector<MetricValue> rows;
  if (wants_requirements && !inputs.requirements.empty()) {
    const RequirementSet reqs = ReadRequirements(inputs.requirements.front());
    std::optional<UseCaseModel> use_cases;
    if (!inputs.use_cases.empty()) {
      use_cases = ReadUseCases(inputs.use_cases.front());
    }
    const RequirementMetrics metrics =
        ComputeRequirementMetrics(reqs, use_cases ? &*use_cases : nullptr);
    for (auto& row : RequirementRows(metrics)) rows.push_back(std::move(row));
  }

  std::optional<DesignModel> model;
  if (wants_design) {
    model = BuildModel(inputs.sources, err);
    if (!model) return kExitInputError;

    std::string symbols_path = options.symbols;
    if (symbols_path.empty() && !options.out.empty()) {
      symbols_path = options.out + ".symbols";
    }
    if (!symbols_path.empty()) {
      WriteText(symbols_path, WriteSymbolListing(*model));
    }

    if (command != Command::kCoverage) {
      const DesignAnalysis analysis(*model);
      for (auto& row : DesignRows(analysis, options.cbo_fan_in)) {
        rows.push_back(std::move(row));
      }
    }
    if (!inputs.traces.empty()) {
      std::vector<CoverageTrace> traces;
      for (const auto& path : inputs.traces) traces.push_back(ReadTrace(path));
      const CoverageAnalysis coverage(*model, traces);
      for (const auto& method : coverage.MethodsHitWithoutEntry()) {
        err << "warning: points of " << method
            << " executed without a method entry event\n";
      }
      for (auto& row : CoverageRows(coverage, *model)) {
        rows.push_back(std::move(row));
      }
    }
    if (!inputs.facts.empty()) {
      ChecklistOptions checklist_options;
      if (!options.min_comment_density.empty()) {
        checklist_options.min_comment_density = ParseFlagRational(
            "--min-comment-density", options.min_comment_density);
      }
      if (!options.max_package_fraction.empty()) {
        checklist_options.max_package_fraction = ParseFlagRational(
            "--max-package-fraction", options.max_package_fraction);
      }
      const ChecklistResult checklist = EvaluateChecklist(
          *model, ReadChecklistFacts(inputs.facts.front()), checklist_options);
      for (auto& row : ChecklistRows(checklist)) rows.push_back(std::move(row));
    }
  }

  const MetricsReport report = Evaluate(std::move(rows), config, evaluate);
  const std::string rendered = Render(report, *format);
  if (options.out.empty()) {
    out << rendered;
  } else {
    WriteText(options.out, rendered);
  }
  for (const auto& violation : report.violations) {
    err << "violation: " << violation.metric << " " << violation.scope << " "
        << FormatMetricData(violation.observed) << " (bound "
        << FormatMetricData(violation.bound) << ")\n";
  }
  return report.pass ? kExitPass : kExitViolations;
}

void AddReportOptions(CLI::App* sub, Options* options) {
  sub->add_option("--format", options->format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  sub->add_option("--config", options->config, "threshold config (.cfg)");
  sub->add_option("--out", options->out, "write the report here");
  sub->add_flag("--strict", options->strict,
                "a not-applicable metric with a bound fails the gate");
}

void AddDesignOptions(CLI::App* sub, Options* options) {
  sub->add_option("--symbols", options->symbols, "write the symbol listing");
  sub->add_option("--wmc-weight", options->wmc_weight,
                  "WMC weighting gated by max_wmc")
      ->check(CLI::IsMember({"cyclomatic", "unit"}));
  sub->add_flag("--cbo-fan-in", options->cbo_fan_in,
                "count classes coupled to a class in its CBO");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Requirement, design, and coverage metrics for MiniOO code",
               "moometrics"};
  app.require_subcommand(1);
  Options options;

  CLI::App* analyze = app.add_subcommand("analyze", "design metrics");
  analyze->add_option("inputs", options.inputs, "source dirs or .moo files")
      ->required();
  AddReportOptions(analyze, &options);
  AddDesignOptions(analyze, &options);

  CLI::App* requirements =
      app.add_subcommand("requirements", "requirement metrics");
  requirements->add_option("inputs", options.inputs, ".req file")->required();
  requirements->add_option("--ucm", options.ucm, "use case model (.ucm)");
  AddReportOptions(requirements, &options);

  CLI::App* coverage = app.add_subcommand("coverage", "trace coverage");
  coverage->add_option("inputs", options.inputs, "source dirs or .moo files")
      ->required();
  coverage->add_option("--trace", options.traces, "trace file (.trc)");
  coverage->add_option("--symbols", options.symbols,
                       "write the symbol listing");
  AddReportOptions(coverage, &options);

  CLI::App* check = app.add_subcommand("check", "all metrics plus gates");
  check->add_option("inputs", options.inputs,
                    "source dirs, .moo, .req, .ucm, .trc, .chk files")
      ->required();
  check->add_option("--ucm", options.ucm, "use case model (.ucm)");
  check->add_option("--trace", options.traces, "trace file (.trc)");
  check->add_option("--min-comment-density", options.min_comment_density,
                    "threshold of supportable.comment_density (default 0.1)");
  check->add_option("--max-package-fraction", options.max_package_fraction,
                    "threshold of maintainable.modularity (default 0.5)");
  AddReportOptions(check, &options);
  AddDesignOptions(check, &options);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Command command = Command::kAnalyze;
  if (requirements->parsed()) command = Command::kRequirements;
  if (coverage->parsed()) command = Command::kCoverage;
  if (check->parsed()) command = Command::kCheck;

  try {
    return Execute(command, options, out, err);
  } catch (const MissingFactsError& e) {
    err << "error: missing checklist facts:";
    for (const auto& id : e.ids()) err << " " << id;
    err << "\n";
  } catch (const std::exception& e) {
    // IngestError, ConfigError, TraceReferenceError, FileError, and usage
    // problems all carry their own position or context.
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace moometrics
