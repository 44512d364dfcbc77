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

#ifndef SPINRSC_ANALYSIS_HPP_
#define SPINRSC_ANALYSIS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "spinrsc/creation_map.hpp"

namespace spinrsc {

// Binned counts over the (lambda, beta1) rectangle [1/2, 1] x [0, 1].
// Cell (i, j) covers (1/2 + i eps_lambda, 1/2 + (i+1) eps_lambda] x
// (j eps_beta1, (j+1) eps_beta1]; the left edge of the first lambda cell
// is closed so that lambda = 1/2 lands in cell 0. Records with beta1
// exactly 0 fall outside every cell and are not counted, but still enter
// n_states, so sum(counts) <= n_states.
struct DensityGrid {
  double eps_lambda = 0.005;
  double eps_beta1 = 0.01;
  int n_lambda = 100;
  int n_beta1 = 100;
  std::vector<std::int64_t> counts;  // row-major, lambda index outer
  std::int64_t n_states = 0;

  std::int64_t count(int i, int j) const { return counts[i * n_beta1 + j]; }
  double S(int i, int j) const {
    return static_cast<double>(count(i, j)) /
           (eps_lambda * eps_beta1 * static_cast<double>(n_states));
  }
  double lambda_center(int i) const { return 0.5 + eps_lambda * (i + 0.5); }
  double beta1_center(int j) const { return eps_beta1 * (j + 0.5); }
};

struct DensityMax {
  double s_max = 0.0;
  double lambda_max = 0.0;
  double beta1_max = 0.0;
};

// Per-column envelopes of the occupied cell set; lambda ascending,
// empty columns skipped.
struct BoundaryCurve {
  struct Sample {
    double lambda;
    double beta1_upper;
    double beta1_lower;
  };
  std::vector<Sample> samples;
};

// Bins the records with eps_beta1 = eps and eps_lambda = eps / 2.
DensityGrid density(const std::vector<ScanRecord>& records, double eps);

// Same binning for bare (lambda, beta1) pairs; n_states = pairs.size().
DensityGrid density_from_points(
    const std::vector<std::pair<double, double>>& points, double eps);

// Maximal S with its cell-center coordinates; ties break toward the
// smallest (i, j) in row-major order.
DensityMax density_max(const DensityGrid& grid);

// For every lambda column with occupied cells: the largest and smallest
// occupied beta1 cell centers.
BoundaryCurve boundary(const DensityGrid& grid);

// Reference boundary curves
//   upper(x) = 0.9914 - 2.0034 (0.9999 - x)^0.28
//   lower(x) = -0.0100 + 2.0369 (1 - x)^0.28
// with power bases clamped at 0 so both curves evaluate up to x = 1.
// The upper curve rises toward lambda = 1 and bounds the occupied region
// from below when the receiver starts in its excited state; the lower
// curve falls and bounds it from above when the receiver starts in its
// ground state.
std::pair<double, double> analytic_boundary(double x);

// Cells with zero count in every grid. Grids must share binning.
std::vector<std::pair<int, int>> absolutely_unavailable(
    const std::vector<DensityGrid>& grids);

// Occupied cells / total cells.
double creatable_area(const DensityGrid& grid);

// z = 10 * floor(10 beta1) + floor(10 beta2), with inputs of exactly 1
// clamped into the ninth decade, so z is in [0, 99].
int combined_z(double beta1, double beta2);

// Step-uniformity probe for a scanned record set: for every beta1 decade
// that occurs with lambda above 1/2, collect the records within 0.05 of
// that decade's largest lambda and report whether all ten beta2 decades
// occur among them.
bool boundary_z_step_complete(const std::vector<ScanRecord>& records);

}  // namespace spinrsc

#endif  // SPINRSC_ANALYSIS_HPP_
