// Copyright 2026 The cicy-invariants Authors
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

#include "cicy/cli.hpp"

#include "cicy/check.hpp"
#include "cicy/dataset.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace cicy::cli
{
namespace
{
struct RunConfig
{
  std::string input;
  std::string input_format = "auto";
  std::string hodge;
  std::string output;
  std::string format = "csv";
  unsigned workers = 1;
  std::string convention = "literal";
  std::string frame = "12x15";
};

unsigned default_workers()
{
  if (const char * env = std::getenv("CICY_WORKERS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) {
        return static_cast<unsigned>(value);
      }
    } catch (const std::exception &) {
    }
  }
  return 1;
}

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct LoadedCorpus
{
  std::vector<DatasetRecord> records;
  bool hard_error = false;
};

void report_diagnostics(
  const std::vector<Diagnostic> & diagnostics, std::string_view prefix, std::ostream & err)
{
  for (const auto & d : diagnostics) {
    err << prefix << ": " << to_string(d) << '\n';
  }
}

LoadedCorpus load(const RunConfig & config, std::ostream & err)
{
  std::ifstream in(config.input, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read input '" + config.input + "'");
  }
  InputFormat format = infer_input_format(config.input);
  if (config.input_format == "json") {
    format = InputFormat::kCanonicalJson;
  } else if (config.input_format == "text") {
    format = InputFormat::kCicyText;
  }

  LoadedCorpus corpus;
  RecordList parsed = parse_records(in, format);
  report_diagnostics(parsed.diagnostics, "parse error", err);
  corpus.hard_error = !parsed.diagnostics.empty();
  corpus.records = std::move(parsed.records);

  HodgeTable table;
  if (!config.hodge.empty()) {
    std::ifstream hodge(config.hodge, std::ios::binary);
    if (!hodge) {
      throw UsageError("cannot read Hodge table '" + config.hodge + "'");
    }
    try {
      HodgeTableParse parsed_table = parse_hodge_table(hodge);
      report_diagnostics(parsed_table.diagnostics, "hodge table", err);
      corpus.hard_error = corpus.hard_error || !parsed_table.diagnostics.empty();
      table = std::move(parsed_table.table);
    } catch (const DuplicateId & e) {
      err << "hodge table: " << e.what() << '\n';
      corpus.hard_error = true;
    }
  }
  const JoinReport join = join_hodge(corpus.records, table);
  if (!config.hodge.empty()) {
    report_diagnostics(join.unmatched, "warning", err);
  }
  return corpus;
}

RangeConvention convention_of(const RunConfig & config)
{
  return parse_range_convention(config.convention).value_or(RangeConvention::kLiteral);
}

ComputeReport compute(std::vector<DatasetRecord> & records, const RunConfig & config, std::ostream & err)
{
  ComputeReport report = compute_all(records, ComputeOptions{config.workers, convention_of(config)});
  report_diagnostics(report.errors, "error", err);
  return report;
}

struct Buckets
{
  Classification classification;
  std::vector<Diagnostic> missing;
};

Buckets bucket(const std::vector<DatasetRecord> & records)
{
  Buckets out;
  std::vector<InvariantTuple> keys;
  for (const auto & record : records) {
    if (!record.computed) {
      continue;
    }
    try {
      keys.push_back(topological_key(record));
    } catch (const MissingHodge & e) {
      out.missing.push_back({0, record.id, e.what()});
    }
  }
  out.classification = classify(keys);
  return out;
}

std::size_t count_favorable(const std::vector<DatasetRecord> & records)
{
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto & r) {
    return r.favorable.value_or(false);
  }));
}

int cmd_compute(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  LoadedCorpus corpus = load(config, err);
  const ComputeReport report = compute(corpus.records, config, err);
  if (!config.output.empty()) {
    export_records(
      corpus.records, config.format == "json" ? ExportFormat::kJson : ExportFormat::kCsv,
      config.output);
  }
  const Buckets buckets = bucket(corpus.records);
  out << "records=" << corpus.records.size() << '\n'
      << "favorable=" << count_favorable(corpus.records) << '\n'
      << "computed=" << report.computed << '\n'
      << "skipped=" << report.skipped << '\n'
      << "errors=" << report.errors.size() << '\n'
      << "buckets=" << buckets.classification.bucket_count() << '\n'
      << "seconds=" << std::fixed << std::setprecision(6) << report.seconds << '\n';
  return corpus.hard_error || !report.errors.empty() ? kExitRecordError : kExitOk;
}

int cmd_features(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  const auto frame = parse_frame(config.frame);
  LoadedCorpus corpus = load(config, err);
  const ComputeReport report = compute(corpus.records, config, err);
  const FeatureExportReport features =
    export_features(corpus.records, *frame, convention_of(config), config.output);
  report_diagnostics(features.errors, "error", err);
  report_diagnostics(features.skipped, "skipped", err);
  const auto paths = feature_paths(config.output);
  out << "records=" << corpus.records.size() << '\n'
      << "written=" << features.written << '\n'
      << "skipped=" << features.skipped.size() << '\n'
      << "errors=" << features.errors.size() + report.errors.size() << '\n'
      << "features=" << paths.features.string() << '\n'
      << "labels=" << paths.labels.string() << '\n'
      << "manifest=" << paths.manifest.string() << '\n';
  const bool failed = corpus.hard_error || !report.errors.empty() || !features.errors.empty();
  return failed ? kExitRecordError : kExitOk;
}

int cmd_classify(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  LoadedCorpus corpus = load(config, err);
  const ComputeReport report = compute(corpus.records, config, err);
  const Buckets buckets = bucket(corpus.records);
  report_diagnostics(buckets.missing, "error", err);
  const auto histogram = buckets.classification.size_histogram();

  std::size_t classified = 0;
  for (const auto & b : buckets.classification.buckets) {
    classified += b.size();
  }
  out << "records=" << corpus.records.size() << '\n'
      << "classified=" << classified << '\n'
      << "buckets=" << buckets.classification.bucket_count() << '\n';
  for (const auto & [size, count] : histogram) {
    out << "bucket_size=" << size << " count=" << count << '\n';
  }
  if (!config.output.empty()) {
    std::ofstream csv(config.output, std::ios::binary | std::ios::trunc);
    if (!csv) {
      throw std::runtime_error("cannot open '" + config.output + "' for writing");
    }
    csv << "bucket_size,count\n";
    for (const auto & [size, count] : histogram) {
      csv << size << ',' << count << '\n';
    }
  }
  const bool failed = corpus.hard_error || !report.errors.empty() || !buckets.missing.empty();
  return failed ? kExitRecordError : kExitOk;
}

int cmd_check(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  LoadedCorpus corpus = load(config, err);
  CheckOptions options;
  options.convention = convention_of(config);
  const CheckReport report = run_invariant_battery(corpus.records, options);
  report_diagnostics(report.violations, "violation", err);
  out << "records=" << report.records << '\n'
      << "checks=" << report.checks << '\n'
      << "violations=" << report.violations.size() << '\n';
  return corpus.hard_error || !report.violations.empty() ? kExitRecordError : kExitOk;
}

void add_common_flags(CLI::App & sub, RunConfig & config, bool output_required)
{
  sub.add_option("--in", config.input, "Configuration list (.json/.jsonl or cicy-text)")
    ->required();
  sub.add_option("--in-format", config.input_format, "Input format override")
    ->check(CLI::IsMember({"auto", "json", "text"}));
  sub.add_option("--hodge", config.hodge, "Hodge table CSV (id,h11,h21)");
  auto * out = sub.add_option("--out", config.output, "Output path");
  if (output_required) {
    out->required();
  }
  sub.add_option("--workers", config.workers, "Worker threads")
    ->check(CLI::PositiveNumber);
  sub.add_option("--convention", config.convention, "Index ranges for d2/d3")
    ->check(CLI::IsMember({"literal", "cubic-form"}));
}
}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  RunConfig config;
  config.workers = default_workers();

  CLI::App app{"Topological invariants of complete intersection Calabi-Yau threefolds", "cicy"};
  app.require_subcommand(1);

  auto * compute_cmd = app.add_subcommand("compute", "Compute invariants and export records");
  add_common_flags(*compute_cmd, config, false);
  compute_cmd->add_option("--format", config.format, "Export format")
    ->check(CLI::IsMember({"csv", "json"}));

  auto * features_cmd = app.add_subcommand("features", "Export padded feature and label files");
  add_common_flags(*features_cmd, config, true);
  features_cmd->add_option("--frame", config.frame, "Feature frame RxC")
    ->check(CLI::Validator(
      [](std::string & s) { return parse_frame(s) ? std::string() : "expected RxC, e.g. 12x15"; },
      "RxC"));

  auto * classify_cmd = app.add_subcommand("classify", "Group records by invariant tuple");
  add_common_flags(*classify_cmd, config, false);

  auto * check_cmd = app.add_subcommand("check", "Run the invariant battery");
  add_common_flags(*check_cmd, config, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp & e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp & e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError & e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) {
      return cmd_compute(config, out, err);
    }
    if (features_cmd->parsed()) {
      return cmd_features(config, out, err);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(config, out, err);
    }
    return cmd_check(config, out, err);
  } catch (const UsageError & e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception & e) {
    err << "error: " << e.what() << '\n';
    return kExitRecordError;
  }
}

}  // namespace cicy::cli
