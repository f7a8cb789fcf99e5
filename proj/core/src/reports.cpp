// Copyright 2026 The Ergolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergolab/reports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef ERGOLAB_VERSION_STRING
#define ERGOLAB_VERSION_STRING "0.0.0"
#endif

namespace ergolab {

std::string version_string() { return ERGOLAB_VERSION_STRING; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvReport& CsvReport::config(const std::string& key, const std::string& value) {
  config_.emplace_back(key, value);
  return *this;
}

CsvReport& CsvReport::tolerance(double tol) {
  tol_ = tol;
  has_tol_ = true;
  return *this;
}

CsvReport& CsvReport::operations(const std::vector<std::string>& ops) {
  operations_ = ops;
  return *this;
}

CsvReport& CsvReport::columns(const std::vector<std::string>& names) {
  columns_ = names;
  return *this;
}

CsvReport& CsvReport::row(const std::vector<std::string>& cells) {
  rows_.push_back(cells);
  return *this;
}

std::string CsvReport::str() const {
  std::ostringstream out;
  out << "# ergolab " << version_string() << "\n";
  for (const auto& [k, v] : config_) out << "# " << k << "=" << v << "\n";
  if (has_tol_) out << "# tol=" << format_double(tol_) << "\n";
  if (!operations_.empty()) {
    out << "# operations=";
    for (std::size_t i = 0; i < operations_.size(); ++i)
      out << (i ? "," : "") << operations_[i];
    out << "\n";
  }
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i];
  out << "\n";
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "\n";
  }
  return out.str();
}

void CsvReport::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report '" + path + "'");
  out << str();
}

std::string certificate_to_json(const Certificate& cert, double epsilon,
                                const std::string& kind) {
  nlohmann::json out;
  out["tool"] = "ergolab " + version_string();
  out["kind"] = kind;
  out["epsilon"] = epsilon;
  out["projection_rank"] = cert.projection_rank;
  out["h_complement"] = cert.h_complement;
  out["trivial_projection"] = cert.trivial_projection;
  out["tails"] = cert.tails;
  out["note"] = cert.note;
  return out.dump(2);
}

}  // namespace ergolab
