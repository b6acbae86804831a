// Copyright 2026 The qpga authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpga/domain.hpp"
#include "qpga/program.hpp"
#include "qpga/state.hpp"
#include "qpga/wigner.hpp"

namespace qpga::io {

// Line-oriented text fixtures. Blank lines and lines starting with '#' are
// ignored everywhere. Numbers are written with std::to_chars shortest
// round-trip formatting, so every writer/reader pair reconstructs values
// exactly.

/// state file: `dim=N`, `kind=pure|mixed`, then N amplitude lines (pure,
/// one `re,im` per line) or N density rows (mixed, N space-separated
/// `re,im` pairs per line).
QuditState read_state(std::istream& in, double tol = kConstructionTol);
QuditState read_state_file(const std::string& path, double tol = kConstructionTol);
void write_state(std::ostream& out, const QuditState& state);
void write_state_file(const std::string& path, const QuditState& state);

/// operator file: `dim=N`, then `form=matrix` with N rows of N `re,im`
/// pairs, or `form=coeffs` with `q p re im` lines.
OperatorSpec read_operator(std::istream& in);
OperatorSpec read_operator_file(const std::string& path);
void write_operator(std::ostream& out, const OperatorSpec& op);
void write_operator_file(const std::string& path, const OperatorSpec& op);

/// domain file: `dim=N`, `descriptor=<tag>`, then explicit `q p sign` lines.
PhaseDomain read_domain(std::istream& in);
PhaseDomain read_domain_file(const std::string& path);
void write_domain(std::ostream& out, const PhaseDomain& domain);
void write_domain_file(const std::string& path, const PhaseDomain& domain);

/// program file: `dim=N`, `extent=E`, `scale=S`, then `q p c phi` lines.
ProgramState read_program(std::istream& in);
ProgramState read_program_file(const std::string& path);
void write_program(std::ostream& out, const ProgramState& ps);
void write_program_file(const std::string& path, const ProgramState& ps);

/// Wigner grid CSV: header comments carrying the dimension, the project
/// convention string, and the ordering (row-major in q), then 2N rows of
/// 2N values.
void write_wigner_csv(std::ostream& out, const WignerGrid& grid);
void write_wigner_csv_file(const std::string& path, const WignerGrid& grid);
WignerGrid read_wigner_csv(std::istream& in);
WignerGrid read_wigner_csv_file(const std::string& path);

/// FNV-1a 64-bit content digest, rendered as `fnv1a64:<16 hex digits>`.
std::string content_digest(const std::string& bytes);
std::string file_digest(const std::string& path);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double value);
double parse_double(const std::string& token, int line_for_error = 0);

/// One key = value line per field, numeric fields rendered round-trip
/// exactly. Fields under `info.` (timing) are excluded from the
/// reproducibility contract; everything else is bit-stable for a fixed
/// (inputs, seed).
struct RunReport {
  static constexpr int kFormatVersion = 1;

  std::string command;                      // echo of the invocation
  std::vector<std::pair<std::string, std::string>> inputs;   // label -> digest
  std::string mode;                         // exact | sampled | n/a
  bool has_seed = false;
  std::uint64_t seed = 0;
  long shots = 0;
  std::vector<std::pair<std::string, std::string>> results;  // result.* lines, in order
  double duration_ms = 0.0;

  void add_result(const std::string& key, const std::string& value);
  void add_result(const std::string& key, double value);
  void print(std::ostream& out) const;

  /// The report without its `info.` lines — the reproducible part.
  std::string stable_text() const;
};

}  // namespace qpga::io
