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

#include "qpga/array.hpp"
#include "qpga/domain.hpp"
#include "qpga/errors.hpp"
#include "qpga/io.hpp"
#include "qpga/linalg.hpp"
#include "qpga/phase_point.hpp"
#include "qpga/program.hpp"
#include "qpga/rng.hpp"
#include "qpga/scattering.hpp"
#include "qpga/state.hpp"
#include "qpga/tolerances.hpp"
#include "qpga/wigner.hpp"
