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

#include "qpga/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "qpga/errors.hpp"

namespace qpga::io {

namespace {

// Sequential reader that skips blanks/comments and tracks 1-based line
// numbers for error reporting.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      const auto first = raw.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (raw[first] == '#') continue;
      out = raw.substr(first);
      const auto last = out.find_last_not_of(" \t");
      out.erase(last + 1);
      return true;
    }
    return false;
  }

  std::string require(const char* field) {
    std::string value;
    if (!next(value)) throw ParseError(std::string("missing field: ") + field, line_);
    return value;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

// `key=value` header line with a fixed expected key.
std::string header_value(LineReader& reader, const char* key) {
  const std::string line = reader.require(key);
  const auto eq = line.find('=');
  if (eq == std::string::npos || line.substr(0, eq) != key) {
    throw ParseError("expected `" + std::string(key) + "=...`, got `" + line + "`",
                     reader.line());
  }
  return line.substr(eq + 1);
}

int parse_int(const std::string& token, LineReader& reader, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("bad " + std::string(what) + ": `" + token + "`", reader.line());
  }
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

// One `re,im` token.
Complex parse_complex_pair(const std::string& token, int line) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) {
    throw ParseError("expected `re,im`, got `" + token + "`", line);
  }
  return {parse_double(token.substr(0, comma), line),
          parse_double(token.substr(comma + 1), line)};
}

std::string format_complex_pair(Complex value) {
  return format_double(value.real()) + "," + format_double(value.imag());
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

double parse_double(const std::string& token, int line_for_error) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("bad number: `" + token + "`", line_for_error);
  }
  return value;
}

QuditState read_state(std::istream& in, double tol) {
  LineReader reader(in);
  const int dim = parse_int(header_value(reader, "dim"), reader, "dim");
  if (dim < 1) throw ParseError("dim must be >= 1", reader.line());
  const std::string kind = header_value(reader, "kind");
  if (kind == "pure") {
    ComplexVector amps(dim);
    for (int n = 0; n < dim; ++n) {
      amps(n) = parse_complex_pair(reader.require("amplitude row"), reader.line());
    }
    return QuditState::pure(std::move(amps), tol);
  }
  if (kind == "mixed") {
    ComplexMatrix density(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const auto tokens = split_ws(reader.require("density row"));
      if (static_cast<int>(tokens.size()) != dim) {
        throw ParseError("density row needs " + std::to_string(dim) + " entries, got " +
                             std::to_string(tokens.size()),
                         reader.line());
      }
      for (int c = 0; c < dim; ++c) density(r, c) = parse_complex_pair(tokens[c], reader.line());
    }
    return QuditState::mixed(std::move(density), tol);
  }
  throw ParseError("kind must be `pure` or `mixed`, got `" + kind + "`", reader.line());
}

void write_state(std::ostream& out, const QuditState& state) {
  out << "dim=" << state.dim() << "\n";
  if (state.kind() == StateKind::pure) {
    out << "kind=pure\n";
    for (int n = 0; n < state.dim(); ++n) {
      out << format_complex_pair(state.amplitudes()(n)) << "\n";
    }
    return;
  }
  out << "kind=mixed\n";
  const ComplexMatrix density = state.density();
  for (int r = 0; r < state.dim(); ++r) {
    for (int c = 0; c < state.dim(); ++c) {
      out << (c ? " " : "") << format_complex_pair(density(r, c));
    }
    out << "\n";
  }
}

OperatorSpec read_operator(std::istream& in) {
  LineReader reader(in);
  const int dim = parse_int(header_value(reader, "dim"), reader, "dim");
  if (dim < 1) throw ParseError("dim must be >= 1", reader.line());
  const std::string form = header_value(reader, "form");
  if (form == "matrix") {
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const auto tokens = split_ws(reader.require("matrix row"));
      if (static_cast<int>(tokens.size()) != dim) {
        throw ParseError("matrix row needs " + std::to_string(dim) + " entries, got " +
                             std::to_string(tokens.size()),
                         reader.line());
      }
      for (int c = 0; c < dim; ++c) m(r, c) = parse_complex_pair(tokens[c], reader.line());
    }
    return OperatorSpec::from_matrix(std::move(m));
  }
  if (form == "coeffs") {
    CoefficientMap coeffs;
    std::string line;
    while (reader.next(line)) {
      const auto tokens = split_ws(line);
      if (tokens.size() != 4) {
        throw ParseError("coefficient line needs `q p re im`, got `" + line + "`",
                         reader.line());
      }
      const int q = parse_int(tokens[0], reader, "q");
      const int p = parse_int(tokens[1], reader, "p");
      coeffs[{q, p}] = Complex(parse_double(tokens[2], reader.line()),
                               parse_double(tokens[3], reader.line()));
    }
    if (coeffs.empty()) throw ParseError("missing field: coefficient lines", reader.line());
    return OperatorSpec::from_coefficients(dim, std::move(coeffs));
  }
  throw ParseError("form must be `matrix` or `coeffs`, got `" + form + "`", reader.line());
}

void write_operator(std::ostream& out, const OperatorSpec& op) {
  out << "dim=" << op.dim() << "\n";
  if (op.has_coefficients() && !op.has_matrix()) {
    out << "form=coeffs\n# q p re im\n";
    for (const auto& [pt, value] : op.coefficients()) {
      out << pt.first << " " << pt.second << " " << format_double(value.real()) << " "
          << format_double(value.imag()) << "\n";
    }
    return;
  }
  out << "form=matrix\n";
  const ComplexMatrix& m = op.matrix();
  for (int r = 0; r < op.dim(); ++r) {
    for (int c = 0; c < op.dim(); ++c) {
      out << (c ? " " : "") << format_complex_pair(m(r, c));
    }
    out << "\n";
  }
}

PhaseDomain read_domain(std::istream& in) {
  LineReader reader(in);
  const int dim = parse_int(header_value(reader, "dim"), reader, "dim");
  header_value(reader, "descriptor");  // informative tag; points are explicit
  std::map<GridPoint, int> signs;
  std::string line;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 3) {
      throw ParseError("domain line needs `q p sign`, got `" + line + "`", reader.line());
    }
    const int q = parse_int(tokens[0], reader, "q");
    const int p = parse_int(tokens[1], reader, "p");
    const int sign = parse_int(tokens[2], reader, "sign");
    signs[{q, p}] = sign;
  }
  if (signs.empty()) throw ParseError("missing field: domain points", reader.line());
  return PhaseDomain::custom(dim, std::move(signs));
}

void write_domain(std::ostream& out, const PhaseDomain& domain) {
  out << "dim=" << domain.dim() << "\n";
  out << "descriptor=" << domain.descriptor() << "\n";
  out << "# q p sign\n";
  for (const auto& [pt, sign] : domain.signs()) {
    out << pt.first << " " << pt.second << " " << sign << "\n";
  }
}

ProgramState read_program(std::istream& in) {
  LineReader reader(in);
  ProgramState ps;
  ps.dim = parse_int(header_value(reader, "dim"), reader, "dim");
  ps.extent = parse_int(header_value(reader, "extent"), reader, "extent");
  ps.scale = parse_double(header_value(reader, "scale"), reader.line());
  std::string line;
  while (reader.next(line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 4) {
      throw ParseError("program line needs `q p c phi`, got `" + line + "`", reader.line());
    }
    const GridPoint pt{parse_int(tokens[0], reader, "q"), parse_int(tokens[1], reader, "p")};
    ps.amplitude[pt] = parse_double(tokens[2], reader.line());
    ps.sign_bit[pt] = parse_int(tokens[3], reader, "phi");
  }
  if (ps.amplitude.empty()) throw ParseError("missing field: program points", reader.line());
  return ps;
}

void write_program(std::ostream& out, const ProgramState& ps) {
  out << "dim=" << ps.dim << "\n";
  out << "extent=" << ps.extent << "\n";
  out << "scale=" << format_double(ps.scale) << "\n";
  out << "# q p c phi\n";
  for (const auto& [pt, c] : ps.amplitude) {
    out << pt.first << " " << pt.second << " " << format_double(c) << " "
        << ps.sign_bit.at(pt) << "\n";
  }
}

void write_wigner_csv(std::ostream& out, const WignerGrid& grid) {
  out << "# qpga wigner grid v1\n";
  out << "# dim=" << grid.dim << "\n";
  out << "# convention=F[j,k]=exp(+2*pi*i*j*k/N)/sqrt(N); A(q,p)=U^q R V^-p exp(i*pi*p*q/N); "
         "W(q,p)=Tr(A(q,p) rho)/(2N)\n";
  out << "# ordering=row-major in q: row q of 2N lists W(q,p) for p=0..2N-1\n";
  for (int q = 0; q < grid.grid(); ++q) {
    for (int p = 0; p < grid.grid(); ++p) {
      out << (p ? "," : "") << format_double(grid.values(q, p));
    }
    out << "\n";
  }
}

WignerGrid read_wigner_csv(std::istream& in) {
  LineReader reader(in);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (reader.next(line)) {
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto comma = line.find(',', start);
      const std::string token =
          line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      row.push_back(parse_double(token, reader.line()));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.size() % 2 != 0) {
    throw ParseError("wigner grid must have 2N rows", reader.line());
  }
  const int grid = static_cast<int>(rows.size());
  WignerGrid w{grid / 2, Eigen::MatrixXd(grid, grid)};
  for (int q = 0; q < grid; ++q) {
    if (static_cast<int>(rows[q].size()) != grid) {
      throw ParseError("wigner grid rows must have 2N values", 0);
    }
    for (int p = 0; p < grid; ++p) w.values(q, p) = rows[q][p];
  }
  return w;
}

QuditState read_state_file(const std::string& path, double tol) {
  auto in = open_input(path);
  return read_state(in, tol);
}
void write_state_file(const std::string& path, const QuditState& state) {
  auto out = open_output(path);
  write_state(out, state);
}
OperatorSpec read_operator_file(const std::string& path) {
  auto in = open_input(path);
  return read_operator(in);
}
void write_operator_file(const std::string& path, const OperatorSpec& op) {
  auto out = open_output(path);
  write_operator(out, op);
}
PhaseDomain read_domain_file(const std::string& path) {
  auto in = open_input(path);
  return read_domain(in);
}
void write_domain_file(const std::string& path, const PhaseDomain& domain) {
  auto out = open_output(path);
  write_domain(out, domain);
}
ProgramState read_program_file(const std::string& path) {
  auto in = open_input(path);
  return read_program(in);
}
void write_program_file(const std::string& path, const ProgramState& ps) {
  auto out = open_output(path);
  write_program(out, ps);
}
void write_wigner_csv_file(const std::string& path, const WignerGrid& grid) {
  auto out = open_output(path);
  write_wigner_csv(out, grid);
}
WignerGrid read_wigner_csv_file(const std::string& path) {
  auto in = open_input(path);
  return read_wigner_csv(in);
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  for (int i = 15; i >= 0; --i) {
    buffer[i] = "0123456789abcdef"[hash & 0xf];
    hash >>= 4;
  }
  buffer[16] = '\0';
  return std::string("fnv1a64:") + buffer;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  return content_digest(bytes.str());
}

void RunReport::add_result(const std::string& key, const std::string& value) {
  results.emplace_back(key, value);
}

void RunReport::add_result(const std::string& key, double value) {
  results.emplace_back(key, format_double(value));
}

void RunReport::print(std::ostream& out) const {
  out << stable_text();
  out << "info.duration-ms=" << format_double(duration_ms) << "\n";
}

std::string RunReport::stable_text() const {
  std::ostringstream out;
  out << "report-version=" << kFormatVersion << "\n";
  out << "command=" << command << "\n";
  for (const auto& [label, digest] : inputs) out << "input." << label << "=" << digest << "\n";
  out << "mode=" << mode << "\n";
  out << "seed=" << (has_seed ? std::to_string(seed) : std::string("-")) << "\n";
  out << "shots=" << shots << "\n";
  for (const auto& [key, value] : results) out << "result." << key << "=" << value << "\n";
  return out.str();
}

}  // namespace qpga::io
