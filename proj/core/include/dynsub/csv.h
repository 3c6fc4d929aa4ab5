// Copyright 2026 The Authors.
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

// CSV and manifest output. Numbers are printed with a fixed printf format so
// identical runs give identical bytes.

#ifndef DYNSUB_CSV_H_
#define DYNSUB_CSV_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dynsub/experiment.h"

namespace dynsub {

// "%.10g".
std::string FormatNumber(double value);

// k,f,stddev
void WriteSummaryF(const std::string& path, std::span<const CellSummary> cells);
// k,OC,stddev
void WriteSummaryOC(const std::string& path, std::span<const CellSummary> cells);
// t,f with t = 1..blocks
void WriteBlocksF(const std::string& path, const BlockSeries& series);
// t,OC
void WriteBlocksOC(const std::string& path, const BlockSeries& series);
void WriteRecords(const std::string& path, std::span<const MetricsRecord> records);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
// Plain comma-separated reader for the files above (no quoting).
CsvTable ReadCsv(const std::string& path);

// key=value lines, keys in sorted order.
void WriteManifest(const std::string& path, const std::map<std::string, std::string>& entries);
std::map<std::string, std::string> ReadManifest(const std::string& path);

}  // namespace dynsub

#endif  // DYNSUB_CSV_H_
