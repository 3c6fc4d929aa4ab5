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

#include "dynsub/csv.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dynsub {
namespace {

class Output {
 public:
  explicit Output(const std::string& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error(path + ": cannot open for writing");
  }
  std::ofstream& stream() { return out_; }
  void Close() {
    out_.flush();
    if (!out_) throw std::runtime_error(path_ + ": write failed");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

void WriteSummary(const std::string& path, const char* column,
                  std::span<const CellSummary> cells, bool calls) {
  Output out(path);
  out.stream() << "k," << column << ",stddev\n";
  for (const CellSummary& cell : cells) {
    out.stream() << cell.k << ',' << FormatNumber(calls ? cell.mean_calls : cell.mean_f) << ','
                 << FormatNumber(calls ? cell.stddev_calls : cell.stddev_f) << '\n';
  }
  out.Close();
}

void WriteSeries(const std::string& path, const char* column, const std::vector<double>& ys) {
  Output out(path);
  out.stream() << "t," << column << '\n';
  for (std::size_t t = 0; t < ys.size(); ++t) {
    out.stream() << t + 1 << ',' << FormatNumber(ys[t]) << '\n';
  }
  out.Close();
}

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string FormatNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

void WriteSummaryF(const std::string& path, std::span<const CellSummary> cells) {
  WriteSummary(path, "f", cells, false);
}

void WriteSummaryOC(const std::string& path, std::span<const CellSummary> cells) {
  WriteSummary(path, "OC", cells, true);
}

void WriteBlocksF(const std::string& path, const BlockSeries& series) {
  WriteSeries(path, "f", series.f);
}

void WriteBlocksOC(const std::string& path, const BlockSeries& series) {
  WriteSeries(path, "OC", series.calls);
}

void WriteRecords(const std::string& path, std::span<const MetricsRecord> records) {
  Output out(path);
  out.stream() << "algo,k,eps,repeat,seed,op,kind,element,oracle_calls,query_calls,"
                  "cumulative_calls,f,size\n";
  for (const MetricsRecord& r : records) {
    out.stream() << r.algo << ',' << r.k << ',' << FormatNumber(r.eps) << ',' << r.repeat << ','
                 << r.seed << ',' << r.op_index << ','
                 << (r.kind == EventKind::kInsert ? "ins" : "del") << ',' << r.element << ','
                 << r.oracle_calls << ',' << r.query_calls << ',' << r.cumulative_calls << ','
                 << FormatNumber(r.solution_value) << ',' << r.solution_size << '\n';
  }
  out.Close();
}

CsvTable ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      table.header = Split(line);
      first = false;
    } else {
      table.rows.push_back(Split(line));
    }
  }
  return table;
}

void WriteManifest(const std::string& path, const std::map<std::string, std::string>& entries) {
  Output out(path);
  for (const auto& [key, value] : entries) out.stream() << key << '=' << value << '\n';
  out.Close();
}

std::map<std::string, std::string> ReadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

}  // namespace dynsub
