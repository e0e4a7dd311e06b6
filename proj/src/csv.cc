// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "labeldp/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "labeldp/status.h"

namespace labeldp {

namespace {

absl::StatusOr<double> ParseNumber(absl::string_view text) {
  absl::string_view trimmed = absl::StripAsciiWhitespace(text);
  double value = 0.0;
  auto [end, ec] =
      std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (ec != std::errc() || end != trimmed.data() + trimmed.size() ||
      trimmed.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("not a number: '", text, "'"));
  }
  if (!std::isfinite(value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("not a finite number: '", text, "'"));
  }
  return value;
}

void AppendRecord(std::string& out, const std::vector<std::string>& fields,
                  absl::string_view terminator) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += fields[i];
  }
  out.append(terminator.data(), terminator.size());
}

}  // namespace

absl::StatusOr<size_t> CsvTable::ColumnIndex(absl::string_view name) const {
  for (size_t i = 0; i < header.values.size(); ++i) {
    if (header.values[i] == name) return i;
  }
  return absl::NotFoundError(absl::StrCat("no column named '", name, "'"));
}

absl::StatusOr<CsvTable> ParseCsv(absl::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string raw;
  std::string value;
  bool quoted = false;
  bool in_quotes = false;
  bool field_started = false;
  size_t line = 1;

  auto finish_field = [&] {
    current.raw.push_back(std::move(raw));
    current.values.push_back(std::move(value));
    raw.clear();
    value.clear();
    quoted = false;
    field_started = false;
  };
  auto finish_record = [&](std::string terminator) {
    finish_field();
    current.terminator = std::move(terminator);
    records.push_back(std::move(current));
    current = CsvRecord();
  };

  for (size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (in_quotes) {
      raw.push_back(c);
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          raw.push_back('"');
          value.push_back('"');
          ++pos;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        value.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      finish_field();
    } else if (c == '\n') {
      finish_record("\n");
      ++line;
    } else if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
      finish_record("\r\n");
      ++pos;
      ++line;
    } else if (c == '"') {
      if (field_started) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line, ": quote inside an unquoted field"));
      }
      raw.push_back(c);
      quoted = true;
      in_quotes = true;
      field_started = true;
    } else {
      if (quoted) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line, ": characters after a closing quote"));
      }
      raw.push_back(c);
      value.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    return absl::InvalidArgumentError("unterminated quoted field");
  }
  if (field_started || !current.raw.empty()) finish_record("");

  if (records.empty()) return absl::InvalidArgumentError("empty CSV input");
  CsvTable table;
  table.header = std::move(records.front());
  const size_t width = table.header.raw.size();
  for (size_t r = 1; r < records.size(); ++r) {
    if (records[r].raw.size() != width) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", r, " has ", records[r].raw.size(),
                       " fields; header has ", width));
    }
    table.records.push_back(std::move(records[r]));
  }
  return table;
}

absl::StatusOr<CsvTable> ReadCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto table = ParseCsv(buffer.str());
  if (!table.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", table.status().message()));
  }
  return table;
}

absl::StatusOr<LabeledDataset> DatasetFromCsv(const CsvTable& table,
                                              size_t label_column) {
  if (label_column >= table.header.raw.size()) {
    return absl::OutOfRangeError("label column out of range");
  }
  LabeledDataset dataset;
  dataset.rows.reserve(table.records.size());
  for (size_t r = 0; r < table.records.size(); ++r) {
    const CsvRecord& record = table.records[r];
    auto label = ParseNumber(record.values[label_column]);
    if (!label.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", r + 1, ": ", label.status().message()));
    }
    std::string features;
    bool first = true;
    for (size_t c = 0; c < record.raw.size(); ++c) {
      if (c == label_column) continue;
      if (!first) features.push_back(',');
      features += record.raw[c];
      first = false;
    }
    dataset.rows.push_back(LabeledRow{std::move(features), *label});
  }
  return dataset;
}

absl::StatusOr<std::vector<std::vector<double>>> NumericFeaturesFromCsv(
    const CsvTable& table, size_t label_column) {
  std::vector<std::vector<double>> features;
  features.reserve(table.records.size());
  for (size_t r = 0; r < table.records.size(); ++r) {
    const CsvRecord& record = table.records[r];
    std::vector<double> row;
    for (size_t c = 0; c < record.values.size(); ++c) {
      if (c == label_column) continue;
      auto value = ParseNumber(record.values[c]);
      if (!value.ok()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record ", r + 1, ", column '", table.header.values[c],
            "': ", value.status().message()));
      }
      row.push_back(*value);
    }
    features.push_back(std::move(row));
  }
  return features;
}

absl::StatusOr<std::string> RenderCsvWithLabels(const CsvTable& table,
                                                size_t label_column,
                                                std::span<const double> labels,
                                                bool keep_original) {
  if (label_column >= table.header.raw.size()) {
    return absl::OutOfRangeError("label column out of range");
  }
  if (labels.size() != table.records.size()) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kLengthMismatch, labels.size(),
                       " labels for ", table.records.size(), " records");
  }
  std::string out;
  std::vector<std::string> header = table.header.raw;
  if (keep_original) {
    header.push_back(
        QuoteCsvField(table.header.values[label_column] + "_original"));
  }
  // Every record needs a terminator once another follows it.
  auto terminator_for = [&](const CsvRecord& record, bool last) {
    if (!record.terminator.empty() || last) return record.terminator;
    return std::string("\n");
  };
  AppendRecord(out, header, terminator_for(table.header,
                                           table.records.empty()));
  for (size_t r = 0; r < table.records.size(); ++r) {
    const CsvRecord& record = table.records[r];
    std::vector<std::string> fields = record.raw;
    fields[label_column] = FormatDouble(labels[r]);
    if (keep_original) fields.push_back(record.raw[label_column]);
    AppendRecord(out, fields,
                 terminator_for(record, r + 1 == table.records.size()));
  }
  return out;
}

std::string QuoteCsvField(absl::string_view value) {
  if (value.find_first_of(",\"\r\n") == absl::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

absl::Status WriteTextFile(const std::string& path, absl::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace labeldp
