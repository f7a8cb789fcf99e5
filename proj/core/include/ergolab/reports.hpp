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

#ifndef ERGOLAB_REPORTS_HPP
#define ERGOLAB_REPORTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ergolab/certificates.hpp"

namespace ergolab {

/// Version string of the library.
std::string version_string();

/// Shortest round-trip decimal formatting; deterministic across runs.
std::string format_double(double v);

/// Self-describing CSV: '#'-prefixed header block (tool version, config
/// echo, tolerance, exercised operations), then a column row and data rows.
class CsvReport {
 public:
  CsvReport& config(const std::string& key, const std::string& value);
  CsvReport& tolerance(double tol);
  CsvReport& operations(const std::vector<std::string>& ops);
  CsvReport& columns(const std::vector<std::string>& names);
  CsvReport& row(const std::vector<std::string>& cells);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> config_;
  double tol_ = 0.0;
  bool has_tol_ = false;
  std::vector<std::string> operations_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Certificate JSON: {"epsilon":..., "projection_rank":...,
/// "h_complement":..., "tails": [...], ...}.
std::string certificate_to_json(const Certificate& cert, double epsilon,
                                const std::string& kind);

}  // namespace ergolab

#endif  // ERGOLAB_REPORTS_HPP
