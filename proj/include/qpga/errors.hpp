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

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched or oversized matrix/register dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input failed a validity check (non-normalized state, non-unitary gate, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Program compilation was asked to encode the zero operator.
class DegenerateProgramError : public Error {
 public:
  using Error::Error;
};

// An eigenvalue could not be matched to the exp(i*pi*c/N) lattice.
class EigenphaseError : public Error {
 public:
  using Error::Error;
};

// A cat map is not exactly covariant; carries the per-point residual map
// over the fundamental cell.
class CovarianceError : public Error {
 public:
  CovarianceError(const std::string& what, Eigen::MatrixXd residuals, double max_residual)
      : Error(what), residuals_(std::move(residuals)), max_residual_(max_residual) {}

  const Eigen::MatrixXd& residuals() const { return residuals_; }
  double max_residual() const { return max_residual_; }

 private:
  Eigen::MatrixXd residuals_;
  double max_residual_;
};

// Text fixture could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qpga
