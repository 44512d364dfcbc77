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

#include "spinrsc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinrsc {

namespace {

int lambda_bin(double lambda, double eps_lambda, int n) {
  int i = static_cast<int>(std::ceil((lambda - 0.5) / eps_lambda)) - 1;
  if (i < 0) i = 0;
  if (i >= n) i = n - 1;
  return i;
}

// -1 marks a dropped record (beta1 at or below the open left edge).
int beta1_bin(double beta1, double eps_beta1, int n) {
  int j = static_cast<int>(std::ceil(beta1 / eps_beta1)) - 1;
  if (j < 0) return -1;
  if (j >= n) j = n - 1;
  return j;
}

DensityGrid make_grid(double eps) {
  if (eps <= 0.0 || eps > 1.0) {
    throw std::invalid_argument("density: eps must lie in (0, 1]");
  }
  DensityGrid grid;
  grid.eps_beta1 = eps;
  grid.eps_lambda = eps / 2.0;
  grid.n_lambda = static_cast<int>(std::lround(0.5 / grid.eps_lambda));
  grid.n_beta1 = static_cast<int>(std::lround(1.0 / grid.eps_beta1));
  grid.counts.assign(static_cast<std::size_t>(grid.n_lambda) * grid.n_beta1, 0);
  return grid;
}

void deposit(DensityGrid& grid, double lambda, double beta1) {
  const int j = beta1_bin(beta1, grid.eps_beta1, grid.n_beta1);
  if (j < 0) return;
  const int i = lambda_bin(lambda, grid.eps_lambda, grid.n_lambda);
  ++grid.counts[static_cast<std::size_t>(i) * grid.n_beta1 + j];
}

int decade(double x) { return std::min(static_cast<int>(std::floor(10.0 * x)), 9); }

}  // namespace

DensityGrid density(const std::vector<ScanRecord>& records, double eps) {
  DensityGrid grid = make_grid(eps);
  grid.n_states = static_cast<std::int64_t>(records.size());
  for (const ScanRecord& rec : records) {
    deposit(grid, rec.receiver.lambda, rec.receiver.beta1);
  }
  return grid;
}

DensityGrid density_from_points(
    const std::vector<std::pair<double, double>>& points, double eps) {
  DensityGrid grid = make_grid(eps);
  grid.n_states = static_cast<std::int64_t>(points.size());
  for (const auto& [lambda, beta1] : points) deposit(grid, lambda, beta1);
  return grid;
}

DensityMax density_max(const DensityGrid& grid) {
  DensityMax best;
  best.lambda_max = grid.lambda_center(0);
  best.beta1_max = grid.beta1_center(0);
  for (int i = 0; i < grid.n_lambda; ++i) {
    for (int j = 0; j < grid.n_beta1; ++j) {
      const double s = grid.S(i, j);
      if (s > best.s_max) {
        best.s_max = s;
        best.lambda_max = grid.lambda_center(i);
        best.beta1_max = grid.beta1_center(j);
      }
    }
  }
  return best;
}

BoundaryCurve boundary(const DensityGrid& grid) {
  BoundaryCurve curve;
  for (int i = 0; i < grid.n_lambda; ++i) {
    int lo = -1, hi = -1;
    for (int j = 0; j < grid.n_beta1; ++j) {
      if (grid.count(i, j) > 0) {
        if (lo < 0) lo = j;
        hi = j;
      }
    }
    if (lo < 0) continue;
    curve.samples.push_back({grid.lambda_center(i), grid.beta1_center(hi),
                             grid.beta1_center(lo)});
  }
  return curve;
}

std::pair<double, double> analytic_boundary(double x) {
  const double upper = 0.9914 - 2.0034 * std::pow(std::max(0.9999 - x, 0.0), 0.28);
  const double lower = -0.0100 + 2.0369 * std::pow(std::max(1.0 - x, 0.0), 0.28);
  return {upper, lower};
}

std::vector<std::pair<int, int>> absolutely_unavailable(
    const std::vector<DensityGrid>& grids) {
  if (grids.empty()) {
    throw std::invalid_argument("absolutely_unavailable: need at least one grid");
  }
  const int nl = grids.front().n_lambda;
  const int nb = grids.front().n_beta1;
  for (const DensityGrid& grid : grids) {
    if (grid.n_lambda != nl || grid.n_beta1 != nb) {
      throw std::invalid_argument("absolutely_unavailable: grid shapes differ");
    }
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nb; ++j) {
      bool empty = true;
      for (const DensityGrid& grid : grids) {
        if (grid.count(i, j) > 0) {
          empty = false;
          break;
        }
      }
      if (empty) cells.emplace_back(i, j);
    }
  }
  return cells;
}

double creatable_area(const DensityGrid& grid) {
  std::int64_t occupied = 0;
  for (std::int64_t c : grid.counts) {
    if (c > 0) ++occupied;
  }
  return static_cast<double>(occupied) /
         static_cast<double>(grid.counts.size());
}

int combined_z(double beta1, double beta2) {
  return 10 * decade(beta1) + decade(beta2);
}

bool boundary_z_step_complete(const std::vector<ScanRecord>& records) {
  double max_lambda[10];
  bool seen[10] = {};
  for (const ScanRecord& rec : records) {
    if (rec.receiver.lambda <= 0.5) continue;
    const int d = decade(rec.receiver.beta1);
    if (!seen[d] || rec.receiver.lambda > max_lambda[d]) {
      seen[d] = true;
      max_lambda[d] = rec.receiver.lambda;
    }
  }
  bool covered[10][10] = {};
  for (const ScanRecord& rec : records) {
    if (rec.receiver.lambda <= 0.5) continue;
    const int d = decade(rec.receiver.beta1);
    if (rec.receiver.lambda >= max_lambda[d] - 0.05) {
      covered[d][decade(rec.receiver.beta2)] = true;
    }
  }
  for (int d = 0; d < 10; ++d) {
    if (!seen[d]) continue;
    for (int z = 0; z < 10; ++z) {
      if (!covered[d][z]) return false;
    }
  }
  return true;
}

}  // namespace spinrsc
