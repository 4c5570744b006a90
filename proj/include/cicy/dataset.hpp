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

#ifndef CICY_DATASET_HPP_
#define CICY_DATASET_HPP_

#include "cicy/chern.hpp"
#include "cicy/config.hpp"
#include "cicy/invariants.hpp"
#include "cicy/symmetric_tensor.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cicy
{
/// Problem attached to one input record or line. Line 0 means "not tied to a
/// line".
struct Diagnostic
{
  std::size_t line = 0;
  std::string id;
  std::string message;
};

std::string to_string(const Diagnostic & diagnostic);

/// Everything derived from a favorable configuration.
struct ComputedInvariants
{
  IntersectionTensor tensor;
  ChernData chern;
  GcdInvariants gcds;
  RangeConvention convention = RangeConvention::kLiteral;

  friend bool operator==(const ComputedInvariants &, const ComputedInvariants &) = default;
};

struct DatasetRecord
{
  std::string id;
  ConfigurationMatrix config;
  std::optional<HodgeNumbers> hodge;
  /// Known only once Hodge numbers are attached: h11 == m (after reduction).
  std::optional<bool> favorable;
  std::optional<ComputedInvariants> computed;
  /// Why `computed` is empty after compute_all, if it is.
  std::string skip_reason;
  /// Wall-clock compute time; never serialized.
  double compute_seconds = 0.0;

  /// Compares everything except timing.
  friend bool operator==(const DatasetRecord & a, const DatasetRecord & b)
  {
    return a.id == b.id && a.config == b.config && a.hodge == b.hodge &&
           a.favorable == b.favorable && a.computed == b.computed;
  }
};

/// Throws MissingHodge, or std::logic_error if the record was not computed.
InvariantTuple topological_key(const DatasetRecord & record);

// ---------------------------------------------------------------------------
// Parsing

enum class InputFormat { kCanonicalJson, kCicyText };

struct ConfigList
{
  std::vector<ConfigurationMatrix> configs;
  std::vector<Diagnostic> diagnostics;
};

struct RecordList
{
  std::vector<DatasetRecord> records;
  std::vector<Diagnostic> diagnostics;
};

/// Canonical JSON is either a top-level array of record objects or one object
/// per line:
///
///   {"id":"quintic","ambient":[4],"degrees":[[5]]}
///
/// Records may also carry "h11"/"h21" and every field written by export_json.
///
/// cicy-text is a sequence of blocks separated by blank lines; '#' starts a
/// comment:
///
///   id quintic        (optional; defaults to the 1-based block ordinal)
///   1 1               (m k)
///   4                 (n_1 .. n_m)
///   5                 (m rows of k degrees)
///
/// Malformed records produce a diagnostic and are skipped.
ConfigList parse_config_list(std::istream & in, InputFormat format);
RecordList parse_records(std::istream & in, InputFormat format);

/// Chooses by extension: .json / .jsonl are canonical JSON, everything else
/// cicy-text.
InputFormat infer_input_format(const std::filesystem::path & path);

class DuplicateId : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using HodgeTable = std::map<std::string, HodgeNumbers, std::less<>>;

struct HodgeTableParse
{
  HodgeTable table;
  std::vector<Diagnostic> diagnostics;
};

/// CSV with header "id,h11,h21". Throws DuplicateId on a repeated id.
HodgeTableParse parse_hodge_table(std::istream & in);

struct JoinReport
{
  /// Records without a table entry (and without inline Hodge numbers).
  std::vector<Diagnostic> unmatched;
};

/// Attaches Hodge numbers by id and sets `favorable`. Records keep inline
/// Hodge numbers when the table has no entry for them.
JoinReport join_hodge(std::vector<DatasetRecord> & records, const HodgeTable & table);

/// Recomputes `favorable` from attached Hodge numbers.
void update_favorable(DatasetRecord & record);

// ---------------------------------------------------------------------------
// Computation

struct ComputeOptions
{
  unsigned workers = 1;
  RangeConvention convention = RangeConvention::kLiteral;
};

struct ComputeReport
{
  /// Hard failures: invalid configurations, arithmetic errors, Euler/Hodge
  /// mismatches.
  std::vector<Diagnostic> errors;
  std::size_t computed = 0;
  std::size_t skipped = 0;
  double seconds = 0.0;
};

/// Fills `computed` for every record that validates and is not known to be
/// unfavorable. Output does not depend on the worker count.
ComputeReport compute_all(std::vector<DatasetRecord> & records, const ComputeOptions & options);

/// Computes one record in place; returns a diagnostic message on failure.
std::optional<std::string> compute_record(DatasetRecord & record, RangeConvention convention);

// ---------------------------------------------------------------------------
// Export

enum class ExportFormat { kCsv, kJson };

inline constexpr std::string_view kCsvHeader =
  "id,m,k,h11,h21,favorable,d1,d2,d3,dp,euler,tensor,c2_contracted";

/// Non-zero d_rst over sorted 1-based triples, e.g. "(1 1 2):3;(1 2 2):3".
std::string tensor_string(const IntersectionTensor & tensor);

void export_csv(const std::vector<DatasetRecord> & records, std::ostream & out);
void export_json(const std::vector<DatasetRecord> & records, std::ostream & out);
void export_records(
  const std::vector<DatasetRecord> & records, ExportFormat format,
  const std::filesystem::path & path);

struct FeatureFrame
{
  Index rows = 12;
  Index cols = 15;
};

std::optional<FeatureFrame> parse_frame(std::string_view text);

struct FeatureExportReport
{
  std::size_t written = 0;
  /// FrameOverflow and convention mismatches.
  std::vector<Diagnostic> errors;
  /// Records without computed invariants (unfavorable, invalid).
  std::vector<Diagnostic> skipped;
};

/// One line of rows*cols comma-separated integers per computed record (the
/// zero-padded degree matrix, row-major) and a label line "d1,d2,d3,dp".
FeatureExportReport export_features(
  const std::vector<DatasetRecord> & records, const FeatureFrame & frame,
  RangeConvention convention, std::ostream & features, std::ostream & labels);

void write_feature_manifest(
  const FeatureExportReport & report, const FeatureFrame & frame, RangeConvention convention,
  const std::filesystem::path & features_path, std::ostream & out);

/// Sibling paths of a feature file: "x.csv" -> "x_labels.csv", "x_manifest.json".
struct FeaturePaths
{
  std::filesystem::path features;
  std::filesystem::path labels;
  std::filesystem::path manifest;
};

FeaturePaths feature_paths(const std::filesystem::path & features);

FeatureExportReport export_features(
  const std::vector<DatasetRecord> & records, const FeatureFrame & frame,
  RangeConvention convention, const std::filesystem::path & features_path);

}  // namespace cicy

#endif  // CICY_DATASET_HPP_
