// Copyright 2026 The spinrsc Authors.
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

#ifndef SPINRSC_IO_UTIL_HPP_
#define SPINRSC_IO_UTIL_HPP_

#include <string>
#include <vector>

#include "spinrsc/analysis.hpp"
#include "spinrsc/creation_map.hpp"

namespace spinrsc {

// Scan CSV. Header depends on the controls variant:
//   phi1,phi2,t,lambda,beta1,beta2
//   phi10,phi11,phi12,phi,t,lambda,beta1,beta2
// Floats are written with 17 significant digits so files round-trip.
void write_scan_csv(const std::string& path,
                    const std::vector<ScanRecord>& records);

// Reads a scan CSV back into records (either header form).
std::vector<ScanRecord> read_scan_csv(const std::string& path);

// Grid CSV: lambda_center,beta1_center,count,S; one row per cell.
void write_density_csv(const std::string& path, const DensityGrid& grid);

// Boundary CSV with the reference-curve comparison columns:
//   lambda,beta1_upper,beta1_lower,analytic_upper,analytic_lower,
//   residual_upper,residual_lower
// analytic_upper predicts beta1_upper (the falling reference curve) and
// analytic_lower predicts beta1_lower (the rising one), both clamped to
// the cell-center range [eps/2, 1 - eps/2]; residuals are
// beta1_* - analytic_*.
void write_boundary_csv(const std::string& path, const BoundaryCurve& curve,
                        double eps_beta1);

// 8-bit binary PGM, one pixel per cell, lambda along x ascending and
// beta1 along y with the top row at beta1 = 1. Intensity scales linearly
// with S clipped at the 99th percentile of the positive cells.
void write_density_pgm(const std::string& path, const DensityGrid& grid);

}  // namespace spinrsc

#endif  // SPINRSC_IO_UTIL_HPP_
