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

// RFC 4180 CSV that remembers the raw bytes of every field, so a table can be
// written back with one column replaced and everything else byte-identical.

#ifndef LABELDP_CSV_H_
#define LABELDP_CSV_H_

#include <cstddef>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "labeldp/pipeline.h"

namespace labeldp {

struct CsvRecord {
  // Field text exactly as it appeared, including any quotes.
  std::vector<std::string> raw;
  // Field contents with quoting removed.
  std::vector<std::string> values;
  // "\r\n", "\n" or "" (last record without a newline).
  std::string terminator;
};

struct CsvTable {
  CsvRecord header;
  std::vector<CsvRecord> records;

  // Column index of `name` in the header, or NotFound.
  absl::StatusOr<size_t> ColumnIndex(absl::string_view name) const;
};

absl::StatusOr<CsvTable> ParseCsv(absl::string_view text);
absl::StatusOr<CsvTable> ReadCsvFile(const std::string& path);

// Numeric label column as a dataset; the remaining raw fields of each record
// become its opaque feature payload.
absl::StatusOr<LabeledDataset> DatasetFromCsv(const CsvTable& table,
                                              size_t label_column);

// All columns except `label_column` parsed as numbers, row-major.
absl::StatusOr<std::vector<std::vector<double>>> NumericFeaturesFromCsv(
    const CsvTable& table, size_t label_column);

// The table with `label_column` replaced by `labels`. With `keep_original`
// the previous column is appended as "<name>_original".
absl::StatusOr<std::string> RenderCsvWithLabels(const CsvTable& table,
                                                size_t label_column,
                                                std::span<const double> labels,
                                                bool keep_original);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string QuoteCsvField(absl::string_view value);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

absl::Status WriteTextFile(const std::string& path, absl::string_view text);

}  // namespace labeldp

#endif  // LABELDP_CSV_H_
