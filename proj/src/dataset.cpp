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

#include "cicy/dataset.hpp"

#include "cicy/intersection.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace cicy
{
using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(const Diagnostic & diagnostic)
{
  std::string out;
  if (diagnostic.line != 0) {
    out += "line " + std::to_string(diagnostic.line) + ": ";
  }
  if (!diagnostic.id.empty()) {
    out += diagnostic.id + ": ";
  }
  return out + diagnostic.message;
}

InvariantTuple topological_key(const DatasetRecord & record)
{
  if (!record.computed) {
    throw std::logic_error("record '" + record.id + "' has no computed invariants");
  }
  return topological_key(record.hodge, record.computed->gcds, record.id);
}

namespace
{
// ---------------------------------------------------------------------------
// JSON

std::vector<int> int_list(const json & node, const char * what)
{
  if (!node.is_array()) {
    throw std::runtime_error(std::string(what) + " must be an array of integers");
  }
  std::vector<int> out;
  for (const auto & v : node) {
    if (!v.is_number_integer()) {
      throw std::runtime_error(std::string(what) + " must contain only integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> int_matrix(
  const json & node, const char * what)
{
  if (!node.is_array()) {
    throw std::runtime_error(std::string(what) + " must be an array of rows");
  }
  const auto rows = static_cast<Index>(node.size());
  Index cols = -1;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> out;
  for (Index i = 0; i < rows; ++i) {
    const auto & row = node[static_cast<std::size_t>(i)];
    if (!row.is_array()) {
      throw std::runtime_error(std::string(what) + " must be an array of rows");
    }
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
      out.resize(rows, cols);
    } else if (static_cast<Index>(row.size()) != cols) {
      throw std::runtime_error(std::string(what) + " is not rectangular");
    }
    for (Index j = 0; j < cols; ++j) {
      const auto & v = row[static_cast<std::size_t>(j)];
      if (!v.is_number_integer()) {
        throw std::runtime_error(std::string(what) + " must contain only integers");
      }
      out(i, j) = v.get<std::int64_t>();
    }
  }
  return out;
}

SymmetricTensor3<std::int64_t> tensor_from_json(const json & node, Index dim, const char * what)
{
  SymmetricTensor3<std::int64_t> out(dim);
  if (!node.is_array()) {
    throw std::runtime_error(std::string(what) + " must be an array of [r,s,t,value]");
  }
  for (const auto & entry : node) {
    if (!entry.is_array() || entry.size() != 4) {
      throw std::runtime_error(std::string(what) + " entries must be [r,s,t,value]");
    }
    const auto r = entry[0].get<Index>();
    const auto s = entry[1].get<Index>();
    const auto t = entry[2].get<Index>();
    if (std::min({r, s, t}) < 1 || std::max({r, s, t}) > dim) {
      throw std::runtime_error(std::string(what) + " index out of range");
    }
    out(r - 1, s - 1, t - 1) = entry[3].get<std::int64_t>();
  }
  return out;
}

ordered_json tensor_to_json(const SymmetricTensor3<std::int64_t> & tensor)
{
  ordered_json out = ordered_json::array();
  tensor.for_each_sorted([&](Index r, Index s, Index t, std::int64_t v) {
    if (v != 0) {
      out.push_back({r + 1, s + 1, t + 1, v});
    }
  });
  return out;
}

DatasetRecord record_from_json(const json & node)
{
  if (!node.is_object()) {
    throw std::runtime_error("record must be a JSON object");
  }
  DatasetRecord record;
  if (!node.contains("id")) {
    throw std::runtime_error("record has no \"id\"");
  }
  const auto & id = node.at("id");
  record.id = id.is_string() ? id.get<std::string>() : id.dump();
  if (!node.contains("ambient") || !node.contains("degrees")) {
    throw std::runtime_error("record needs \"ambient\" and \"degrees\"");
  }

  const std::vector<int> ambient = int_list(node.at("ambient"), "ambient");
  const auto degrees = int_matrix(node.at("degrees"), "degrees");
  if (static_cast<Index>(ambient.size()) != degrees.rows()) {
    throw std::runtime_error(
      "ambient has " + std::to_string(ambient.size()) + " entries but degrees has " +
      std::to_string(degrees.rows()) + " rows");
  }
  record.config.id = record.id;
  record.config.ambient_dims = Eigen::Map<const DimVector>(ambient.data(), ambient.size());
  record.config.degrees = degrees.cast<int>();

  const bool has_h11 = node.contains("h11") && !node.at("h11").is_null();
  const bool has_h21 = node.contains("h21") && !node.at("h21").is_null();
  if (has_h11 != has_h21) {
    throw std::runtime_error("h11 and h21 must be given together");
  }
  if (has_h11) {
    record.hodge = HodgeNumbers{node.at("h11").get<int>(), node.at("h21").get<int>()};
  }
  if (node.contains("favorable") && !node.at("favorable").is_null()) {
    record.favorable = node.at("favorable").get<bool>();
  }

  if (node.contains("computed") && !node.at("computed").is_null()) {
    const auto & c = node.at("computed");
    ComputedInvariants computed;
    const auto & inv = c.at("invariants");
    const auto convention = parse_range_convention(inv.at("convention").get<std::string>());
    if (!convention) {
      throw std::runtime_error("unknown invariant convention");
    }
    computed.convention = *convention;
    computed.gcds = GcdInvariants{
      inv.at("d1").get<std::int64_t>(), inv.at("d2").get<std::int64_t>(),
      inv.at("d3").get<std::int64_t>(), inv.at("dp").get<std::int64_t>()};
    computed.chern.c2_doubled = int_matrix(c.at("c2_doubled"), "c2_doubled");
    const Index dim = computed.chern.c2_doubled.rows();
    if (computed.chern.c2_doubled.cols() != dim) {
      throw std::runtime_error("c2_doubled must be square");
    }
    computed.tensor = tensor_from_json(c.at("tensor"), dim, "tensor");
    computed.chern.c3_tripled = tensor_from_json(c.at("c3_tripled"), dim, "c3_tripled");
    std::vector<std::int64_t> c2t;
    for (const auto & v : c.at("c2_contracted")) {
      c2t.push_back(v.get<std::int64_t>());
    }
    if (static_cast<Index>(c2t.size()) != dim) {
      throw std::runtime_error("c2_contracted has the wrong length");
    }
    computed.chern.c2_contracted = Eigen::Map<const IntVector>(c2t.data(), dim);
    computed.chern.euler = c.at("euler").get<std::int64_t>();
    record.computed = std::move(computed);
  }
  return record;
}

ordered_json record_to_json(const DatasetRecord & record)
{
  ordered_json node;
  node["id"] = record.id;
  node["ambient"] = std::vector<int>(
    record.config.ambient_dims.data(),
    record.config.ambient_dims.data() + record.config.ambient_dims.size());
  ordered_json degrees = ordered_json::array();
  for (Index i = 0; i < record.config.degrees.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < record.config.degrees.cols(); ++j) {
      row.push_back(record.config.degrees(i, j));
    }
    degrees.push_back(std::move(row));
  }
  node["degrees"] = std::move(degrees);
  node["h11"] = record.hodge ? ordered_json(record.hodge->h11) : ordered_json(nullptr);
  node["h21"] = record.hodge ? ordered_json(record.hodge->h21) : ordered_json(nullptr);
  node["favorable"] = record.favorable ? ordered_json(*record.favorable) : ordered_json(nullptr);
  if (!record.computed) {
    node["computed"] = nullptr;
    return node;
  }
  const auto & c = *record.computed;
  ordered_json computed;
  computed["invariants"] = {
    {"convention", std::string(to_string(c.convention))},
    {"d1", c.gcds.d1},
    {"d2", c.gcds.d2},
    {"d3", c.gcds.d3},
    {"dp", c.gcds.dp}};
  computed["tensor"] = tensor_to_json(c.tensor);
  ordered_json c2 = ordered_json::array();
  for (Index r = 0; r < c.chern.c2_doubled.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index s = 0; s < c.chern.c2_doubled.cols(); ++s) {
      row.push_back(c.chern.c2_doubled(r, s));
    }
    c2.push_back(std::move(row));
  }
  computed["c2_doubled"] = std::move(c2);
  computed["c3_tripled"] = tensor_to_json(c.chern.c3_tripled);
  computed["c2_contracted"] = std::vector<std::int64_t>(
    c.chern.c2_contracted.data(), c.chern.c2_contracted.data() + c.chern.c2_contracted.size());
  computed["euler"] = c.chern.euler;
  node["computed"] = std::move(computed);
  return node;
}

std::string record_id_hint(const json & node)
{
  if (node.is_object() && node.contains("id")) {
    const auto & id = node.at("id");
    return id.is_string() ? id.get<std::string>() : id.dump();
  }
  return {};
}

RecordList parse_json_records(std::istream & in)
{
  RecordList out;
  const std::string text(std::istreambuf_iterator<char>(in), {});
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return out;
  }

  if (text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error & e) {
      const auto line = 1 + static_cast<std::size_t>(std::count(
                              text.begin(),
                              text.begin() + static_cast<std::ptrdiff_t>(
                                               std::min(e.byte, text.size())),
                              '\n'));
      out.diagnostics.push_back({line, {}, std::string("malformed JSON: ") + e.what()});
      return out;
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      try {
        out.records.push_back(record_from_json(doc[i]));
      } catch (const std::exception & e) {
        out.diagnostics.push_back(
          {0, record_id_hint(doc[i]), "element " + std::to_string(i + 1) + ": " + e.what()});
      }
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    json node;
    try {
      node = json::parse(line);
    } catch (const json::parse_error & e) {
      out.diagnostics.push_back({number, {}, std::string("malformed JSON: ") + e.what()});
      continue;
    }
    try {
      out.records.push_back(record_from_json(node));
    } catch (const std::exception & e) {
      out.diagnostics.push_back({number, record_id_hint(node), e.what()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// cicy-text

struct TextLine
{
  std::size_t number;
  std::string text;
};

std::vector<long> parse_integers(const std::string & text)
{
  std::vector<long> out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    long value = 0;
    const auto * end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw std::runtime_error("'" + token + "' is not an integer");
    }
    out.push_back(value);
  }
  return out;
}

ConfigurationMatrix parse_text_block(
  const std::vector<TextLine> & block, std::size_t ordinal, std::size_t & error_line)
{
  std::size_t pos = 0;
  ConfigurationMatrix config;
  config.id = std::to_string(ordinal);
  error_line = block[pos].number;
  {
    std::istringstream head(block[pos].text);
    std::string word;
    head >> word;
    if (word == "id") {
      std::string id;
      head >> id;
      if (id.empty()) {
        throw std::runtime_error("'id' line without a name");
      }
      config.id = id;
      ++pos;
    }
  }
  auto next_line = [&](const char * what) -> std::vector<long> {
    if (pos >= block.size()) {
      error_line = block.back().number;
      throw std::runtime_error(std::string("block ends before ") + what);
    }
    error_line = block[pos].number;
    return parse_integers(block[pos++].text);
  };

  const auto shape = next_line("the 'm k' header");
  if (shape.size() != 2 || shape[0] < 1 || shape[1] < 1) {
    throw std::runtime_error("header must be two positive integers 'm k'");
  }
  const auto m = static_cast<Index>(shape[0]);
  const auto k = static_cast<Index>(shape[1]);
  if (m > 64 || k > 64) {
    throw std::runtime_error("header shape is implausibly large");
  }
  const auto dims = next_line("the ambient dimension row");
  if (static_cast<Index>(dims.size()) != m) {
    throw std::runtime_error(
      "ambient row has " + std::to_string(dims.size()) + " entries, expected " +
      std::to_string(m));
  }
  config.ambient_dims.resize(m);
  for (Index i = 0; i < m; ++i) {
    config.ambient_dims(i) = static_cast<int>(dims[static_cast<std::size_t>(i)]);
  }
  config.degrees.resize(m, k);
  for (Index i = 0; i < m; ++i) {
    const auto row = next_line("all degree rows");
    if (static_cast<Index>(row.size()) != k) {
      throw std::runtime_error(
        "degree row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
        " entries, expected " + std::to_string(k));
    }
    for (Index j = 0; j < k; ++j) {
      config.degrees(i, j) = static_cast<int>(row[static_cast<std::size_t>(j)]);
    }
  }
  if (pos != block.size()) {
    error_line = block[pos].number;
    throw std::runtime_error("unexpected extra line in block");
  }
  return config;
}

ConfigList parse_text_configs(std::istream & in)
{
  ConfigList out;
  std::vector<std::vector<TextLine>> blocks(1);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!blocks.back().empty()) {
        blocks.emplace_back();
      }
      continue;
    }
    blocks.back().push_back({number, line});
  }
  std::size_t ordinal = 0;
  for (const auto & block : blocks) {
    if (block.empty()) {
      continue;
    }
    ++ordinal;
    std::size_t error_line = block.front().number;
    try {
      out.configs.push_back(parse_text_block(block, ordinal, error_line));
    } catch (const std::exception & e) {
      out.diagnostics.push_back({error_line, {}, e.what()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV helpers

std::string csv_field(const std::string & value)
{
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    return value;
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + '"';
}

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_simple(const std::string & line)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    out.push_back(trim(field));
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

/// Shape after padding removal, or the raw shape if the config is invalid.
std::pair<Index, Index> effective_shape(const ConfigurationMatrix & config)
{
  try {
    const auto reduced = reduce(config);
    return {reduced.num_factors(), reduced.num_polynomials()};
  } catch (const InvalidConfiguration &) {
    return {config.num_factors(), config.num_polynomials()};
  }
}

std::ofstream open_output(const std::filesystem::path & path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

ConfigList parse_config_list(std::istream & in, InputFormat format)
{
  if (format == InputFormat::kCicyText) {
    return parse_text_configs(in);
  }
  RecordList records = parse_json_records(in);
  ConfigList out;
  out.diagnostics = std::move(records.diagnostics);
  for (auto & r : records.records) {
    out.configs.push_back(std::move(r.config));
  }
  return out;
}

RecordList parse_records(std::istream & in, InputFormat format)
{
  if (format == InputFormat::kCanonicalJson) {
    return parse_json_records(in);
  }
  ConfigList configs = parse_text_configs(in);
  RecordList out;
  out.diagnostics = std::move(configs.diagnostics);
  for (auto & c : configs.configs) {
    DatasetRecord r;
    r.id = c.id;
    r.config = std::move(c);
    out.records.push_back(std::move(r));
  }
  return out;
}

InputFormat infer_input_format(const std::filesystem::path & path)
{
  const auto ext = path.extension().string();
  return (ext == ".json" || ext == ".jsonl") ? InputFormat::kCanonicalJson
                                             : InputFormat::kCicyText;
}

HodgeTableParse parse_hodge_table(std::istream & in)
{
  HodgeTableParse out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    const auto fields = split_csv_simple(stripped);
    if (number == 1 && !fields.empty() && fields[0] == "id") {
      continue;
    }
    if (fields.size() != 3) {
      out.diagnostics.push_back({number, {}, "expected 3 fields 'id,h11,h21'"});
      continue;
    }
    HodgeNumbers h;
    const auto parse = [](const std::string & s, int & v) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      return ec == std::errc() && ptr == s.data() + s.size() && v >= 0;
    };
    if (!parse(fields[1], h.h11) || !parse(fields[2], h.h21)) {
      out.diagnostics.push_back({number, fields[0], "Hodge numbers must be non-negative integers"});
      continue;
    }
    if (!out.table.emplace(fields[0], h).second) {
      throw DuplicateId(
        "Hodge table line " + std::to_string(number) + ": duplicate id '" + fields[0] + "'");
    }
  }
  return out;
}

void update_favorable(DatasetRecord & record)
{
  if (!record.hodge) {
    record.favorable.reset();
    return;
  }
  record.favorable = record.hodge->h11 == effective_shape(record.config).first;
}

JoinReport join_hodge(std::vector<DatasetRecord> & records, const HodgeTable & table)
{
  JoinReport report;
  for (auto & record : records) {
    if (auto it = table.find(record.id); it != table.end()) {
      record.hodge = it->second;
    } else if (!record.hodge) {
      report.unmatched.push_back({0, record.id, "no Hodge numbers for this id"});
    }
    update_favorable(record);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Computation

std::optional<std::string> compute_record(DatasetRecord & record, RangeConvention convention)
{
  record.computed.reset();
  record.skip_reason.clear();
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::string> error;
  try {
    const ReducedConfiguration reduced = reduce(record.config);
    update_favorable(record);
    if (record.favorable == false) {
      record.skip_reason = "unfavorable description";
    } else {
      ComputedInvariants computed;
      computed.tensor = intersection_tensor(reduced);
      computed.chern = chern_data(reduced, computed.tensor);
      computed.gcds = gcd_invariants(computed.tensor, computed.chern.c2_contracted, convention);
      computed.convention = convention;
      if (record.hodge) {
        const std::int64_t expected = 2 * (record.hodge->h11 - record.hodge->h21);
        if (computed.chern.euler != expected) {
          error = "Euler characteristic " + std::to_string(computed.chern.euler) +
                  " != 2(h11 - h21) = " + std::to_string(expected);
        }
      }
      record.computed = std::move(computed);
    }
  } catch (const InvalidConfiguration & e) {
    record.skip_reason = "invalid configuration";
    error = e.what();
  } catch (const InexactDivision & e) {
    record.skip_reason = "inexact division";
    error = e.what();
  } catch (const std::exception & e) {
    record.skip_reason = "computation failed";
    error = e.what();
  }
  record.compute_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return error;
}

ComputeReport compute_all(std::vector<DatasetRecord> & records, const ComputeOptions & options)
{
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<std::string>> errors(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      errors[i] = compute_record(records[i], options.convention);
    }
  };

  const unsigned workers =
    std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(records.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }

  ComputeReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (errors[i]) {
      report.errors.push_back({0, records[i].id, *errors[i]});
    }
    if (records[i].computed) {
      ++report.computed;
    } else {
      ++report.skipped;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Export

std::string tensor_string(const IntersectionTensor & tensor)
{
  std::string out;
  tensor.for_each_sorted([&](Index r, Index s, Index t, std::int64_t v) {
    if (v == 0) {
      return;
    }
    if (!out.empty()) {
      out += ';';
    }
    out += '(' + std::to_string(r + 1) + ' ' + std::to_string(s + 1) + ' ' +
           std::to_string(t + 1) + "):" + std::to_string(v);
  });
  return out;
}

void export_csv(const std::vector<DatasetRecord> & records, std::ostream & out)
{
  out << kCsvHeader << '\n';
  for (const auto & record : records) {
    const auto [m, k] = effective_shape(record.config);
    out << csv_field(record.id) << ',' << m << ',' << k << ',';
    if (record.hodge) {
      out << record.hodge->h11 << ',' << record.hodge->h21;
    } else {
      out << ',';
    }
    out << ',';
    if (record.favorable) {
      out << (*record.favorable ? "true" : "false");
    }
    if (!record.computed) {
      out << ",,,,,,,\n";
      continue;
    }
    const auto & c = *record.computed;
    std::string c2;
    for (Index t = 0; t < c.chern.c2_contracted.size(); ++t) {
      if (t != 0) {
        c2 += ';';
      }
      c2 += std::to_string(c.chern.c2_contracted(t));
    }
    out << ',' << c.gcds.d1 << ',' << c.gcds.d2 << ',' << c.gcds.d3 << ',' << c.gcds.dp << ','
        << c.chern.euler << ',' << csv_field(tensor_string(c.tensor)) << ',' << csv_field(c2)
        << '\n';
  }
}

void export_json(const std::vector<DatasetRecord> & records, std::ostream & out)
{
  // One record per line keeps diffs readable; the whole file is still one
  // JSON array.
  out << '[';
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << (i == 0 ? "\n  " : ",\n  ") << record_to_json(records[i]).dump();
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

void export_records(
  const std::vector<DatasetRecord> & records, ExportFormat format,
  const std::filesystem::path & path)
{
  auto out = open_output(path);
  if (format == ExportFormat::kJson) {
    export_json(records, out);
  } else {
    export_csv(records, out);
  }
  if (!out) {
    throw std::runtime_error("write to '" + path.string() + "' failed");
  }
}

std::optional<FeatureFrame> parse_frame(std::string_view text)
{
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) {
    return std::nullopt;
  }
  FeatureFrame frame;
  const auto rows = text.substr(0, x);
  const auto cols = text.substr(x + 1);
  auto [p1, e1] = std::from_chars(rows.data(), rows.data() + rows.size(), frame.rows);
  auto [p2, e2] = std::from_chars(cols.data(), cols.data() + cols.size(), frame.cols);
  if (e1 != std::errc() || e2 != std::errc() || p1 != rows.data() + rows.size() ||
      p2 != cols.data() + cols.size() || frame.rows < 1 || frame.cols < 1) {
    return std::nullopt;
  }
  return frame;
}

FeatureExportReport export_features(
  const std::vector<DatasetRecord> & records, const FeatureFrame & frame,
  RangeConvention convention, std::ostream & features, std::ostream & labels)
{
  FeatureExportReport report;
  for (const auto & record : records) {
    if (!record.computed) {
      report.skipped.push_back(
        {0, record.id,
         "no computed invariants" +
           (record.skip_reason.empty() ? std::string() : " (" + record.skip_reason + ")")});
      continue;
    }
    if (record.computed->convention != convention) {
      report.errors.push_back({0, record.id, "labels were computed with another convention"});
      continue;
    }
    const ReducedConfiguration reduced = reduce(record.config);
    const Index m = reduced.num_factors();
    const Index k = reduced.num_polynomials();
    if (m > frame.rows || k > frame.cols) {
      report.errors.push_back(
        {0, record.id,
         "FrameOverflow: " + std::to_string(m) + "x" + std::to_string(k) + " does not fit " +
           std::to_string(frame.rows) + "x" + std::to_string(frame.cols)});
      continue;
    }
    DegreeMatrix padded = DegreeMatrix::Zero(frame.rows, frame.cols);
    padded.topLeftCorner(m, k) = reduced.degrees();
    for (Index i = 0; i < frame.rows; ++i) {
      for (Index j = 0; j < frame.cols; ++j) {
        if (i != 0 || j != 0) {
          features << ',';
        }
        features << padded(i, j);
      }
    }
    features << '\n';
    const auto & g = record.computed->gcds;
    labels << g.d1 << ',' << g.d2 << ',' << g.d3 << ',' << g.dp << '\n';
    ++report.written;
  }
  return report;
}

FeaturePaths feature_paths(const std::filesystem::path & features)
{
  FeaturePaths out;
  out.features = features;
  const auto stem = features.stem().string();
  const auto ext = features.has_extension() ? features.extension().string() : std::string(".csv");
  out.labels = features.parent_path() / (stem + "_labels" + ext);
  out.manifest = features.parent_path() / (stem + "_manifest.json");
  return out;
}

void write_feature_manifest(
  const FeatureExportReport & report, const FeatureFrame & frame, RangeConvention convention,
  const std::filesystem::path & features_path, std::ostream & out)
{
  const auto paths = feature_paths(features_path);
  ordered_json manifest;
  manifest["features"] = paths.features.filename().string();
  manifest["labels"] = paths.labels.filename().string();
  manifest["records"] = report.written;
  manifest["frame"] = {{"rows", frame.rows}, {"cols", frame.cols}};
  manifest["feature_layout"] = "zero-padded degree matrix, row-major, rows=factors, cols=polynomials";
  manifest["label_columns"] = {"d1", "d2", "d3", "dp"};
  manifest["convention"] = std::string(to_string(convention));
  out << manifest.dump(2) << '\n';
}

FeatureExportReport export_features(
  const std::vector<DatasetRecord> & records, const FeatureFrame & frame,
  RangeConvention convention, const std::filesystem::path & features_path)
{
  const auto paths = feature_paths(features_path);
  auto features = open_output(paths.features);
  auto labels = open_output(paths.labels);
  FeatureExportReport report = export_features(records, frame, convention, features, labels);
  auto manifest = open_output(paths.manifest);
  write_feature_manifest(report, frame, convention, features_path, manifest);
  if (!features || !labels || !manifest) {
    throw std::runtime_error("writing feature files failed");
  }
  return report;
}

}  // namespace cicy
