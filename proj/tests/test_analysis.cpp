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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinrsc/analysis.hpp"

using namespace spinrsc;

namespace {

using Points = std::vector<std::pair<double, double>>;

ScanRecord record_of(double lambda, double beta1, double beta2 = 0.0) {
  ScanRecord rec;
  rec.controls = OneQubitControls{0.0, 0.0};
  rec.t = 0.0;
  rec.receiver = ReceiverState{lambda, beta1, beta2};
  return rec;
}

}  // namespace

TEST_CASE("default grid geometry") {
  const DensityGrid grid = density_from_points({}, 0.01);
  CHECK(grid.n_lambda == 100);
  CHECK(grid.n_beta1 == 100);
  CHECK(grid.eps_lambda == 0.005);
  CHECK(grid.eps_beta1 == 0.01);
  CHECK(grid.lambda_center(0) == doctest::Approx(0.5025).epsilon(1e-14));
  CHECK(grid.lambda_center(99) == doctest::Approx(0.9975).epsilon(1e-14));
  CHECK(grid.beta1_center(0) == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(grid.beta1_center(99) == doctest::Approx(0.995).epsilon(1e-14));

  const DensityGrid coarse = density_from_points({}, 0.02);
  CHECK(coarse.n_lambda == 50);
  CHECK(coarse.n_beta1 == 50);
  CHECK_THROWS_AS(density_from_points({}, 0.0), std::invalid_argument);
}

TEST_CASE("sample points land in the expected cells") {
  const Points pts{
      {0.5, 0.5},       // the lower lambda edge is closed into column 0
      {0.5051, 0.0101}, // just past the first cell edges
      {1.0, 1.0},       // top corner cell
      {0.9, 0.9},
  };
  const DensityGrid grid = density_from_points(pts, 0.01);
  CHECK(grid.count(0, 49) == 1);
  CHECK(grid.count(1, 1) == 1);
  CHECK(grid.count(99, 99) == 1);
  CHECK(grid.count(79, 89) == 1);
  CHECK(grid.n_states == 4);
}

TEST_CASE("beta1 exactly zero is not counted") {
  const DensityGrid grid = density_from_points({{0.7, 0.0}, {0.7, 0.3}}, 0.01);
  std::int64_t total = 0;
  for (int i = 0; i < grid.n_lambda; ++i) {
    for (int j = 0; j < grid.n_beta1; ++j) total += grid.count(i, j);
  }
  CHECK(total == 1);
  CHECK(grid.n_states == 2);
  CHECK(grid.count(39, 29) == 1);
}

TEST_CASE("record and point binning agree") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> ul(0.5, 1.0);
  std::uniform_real_distribution<double> ub(0.0, 1.0);
  std::vector<ScanRecord> records;
  Points pts;
  for (int k = 0; k < 500; ++k) {
    const double lambda = ul(rng), beta1 = ub(rng);
    records.push_back(record_of(lambda, beta1));
    pts.push_back({lambda, beta1});
  }
  const DensityGrid a = density(records, 0.01);
  const DensityGrid b = density_from_points(pts, 0.01);
  CHECK(a.n_states == b.n_states);
  CHECK(a.counts == b.counts);
}

TEST_CASE("density normalizes to unit mass when nothing is dropped") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> ul(0.5, 1.0);
  std::uniform_real_distribution<double> ub(1e-6, 1.0);
  Points pts;
  for (int k = 0; k < 2000; ++k) pts.push_back({ul(rng), ub(rng)});
  const DensityGrid grid = density_from_points(pts, 0.01);
  double mass = 0.0;
  for (int i = 0; i < grid.n_lambda; ++i) {
    for (int j = 0; j < grid.n_beta1; ++j) {
      mass += grid.S(i, j) * grid.eps_lambda * grid.eps_beta1;
    }
  }
  CHECK(std::abs(mass - 1.0) < 1e-9);
}

TEST_CASE("density value of a concentrated sample") {
  const DensityGrid grid = density_from_points({{0.9975, 0.005}}, 0.01);
  CHECK(grid.S(99, 0) == doctest::Approx(1.0 / (0.005 * 0.01)).epsilon(1e-12));
}

TEST_CASE("density max picks the first of tied cells in row major order") {
  Points pts{{0.6, 0.2}, {0.6, 0.2}, {0.8, 0.7}, {0.8, 0.7}, {0.9, 0.9}};
  const DensityGrid grid = density_from_points(pts, 0.01);
  const DensityMax m = density_max(grid);
  CHECK(m.lambda_max == doctest::Approx(0.5975).epsilon(1e-12));
  CHECK(m.beta1_max == doctest::Approx(0.195).epsilon(1e-12));
  CHECK(m.s_max == doctest::Approx(2.0 / (0.005 * 0.01 * 5.0)).epsilon(1e-12));
}

TEST_CASE("boundary reports per column extremes in ascending lambda") {
  Points pts{
      {0.61, 0.15}, {0.61, 0.85}, {0.61, 0.55},  // one column, spread out
      {0.86, 0.4},                               // single cell column
  };
  const DensityGrid grid = density_from_points(pts, 0.01);
  const BoundaryCurve curve = boundary(grid);
  REQUIRE(curve.samples.size() == 2);
  CHECK(curve.samples[0].lambda == doctest::Approx(0.6075).epsilon(1e-12));
  CHECK(curve.samples[0].beta1_upper == doctest::Approx(0.845).epsilon(1e-12));
  CHECK(curve.samples[0].beta1_lower == doctest::Approx(0.145).epsilon(1e-12));
  CHECK(curve.samples[1].lambda == doctest::Approx(0.8575).epsilon(1e-12));
  CHECK(curve.samples[1].beta1_upper == doctest::Approx(0.395).epsilon(1e-12));
  CHECK(curve.samples[1].beta1_lower == doctest::Approx(0.395).epsilon(1e-12));
  CHECK(curve.samples[0].lambda < curve.samples[1].lambda);
}

TEST_CASE("boundary of a fully occupied grid hugs the cell extremes") {
  std::vector<ScanRecord> records;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      records.push_back(record_of(0.5 + 0.01 * (i + 0.5), 0.02 * (j + 0.5)));
    }
  }
  const DensityGrid grid = density(records, 0.02);
  const BoundaryCurve curve = boundary(grid);
  REQUIRE(curve.samples.size() == 50);
  for (const auto& s : curve.samples) {
    CHECK(s.beta1_upper == doctest::Approx(0.99).epsilon(1e-12));
    CHECK(s.beta1_lower == doctest::Approx(0.01).epsilon(1e-12));
  }
}

TEST_CASE("reference curves evaluate to their frozen values") {
  const auto [u_hi, l_hi] = analytic_boundary(0.9999);
  CHECK(u_hi == doctest::Approx(0.9914).epsilon(1e-12));

  const auto [u_one, l_one] = analytic_boundary(1.0);
  CHECK(u_one == doctest::Approx(0.9914).epsilon(1e-12));
  CHECK(l_one == doctest::Approx(-0.0100).epsilon(1e-12));

  const auto [u_mid, l_mid] = analytic_boundary(0.75);
  CHECK(u_mid == doctest::Approx(-0.367358334900658).epsilon(1e-9));
  CHECK(l_mid == doctest::Approx(1.371633677289081).epsilon(1e-9));

  const auto [u_lo, l_lo] = analytic_boundary(0.55);
  CHECK(u_lo == doctest::Approx(-0.610517506287480).epsilon(1e-9));
  CHECK(l_lo == doctest::Approx(1.618805443333140).epsilon(1e-9));
}

TEST_CASE("reference curves are monotone over the fit window") {
  double prev_u = -10.0, prev_l = 10.0;
  for (double x = 0.55; x <= 0.9999; x += 0.0025) {
    const auto [u, l] = analytic_boundary(x);
    CHECK(u > prev_u);
    CHECK(l < prev_l);
    prev_u = u;
    prev_l = l;
  }
}

TEST_CASE("absolutely unavailable cells are empty in every grid") {
  const DensityGrid a = density_from_points({{0.6, 0.2}}, 0.5);
  const DensityGrid b = density_from_points({{0.9, 0.8}}, 0.5);
  // 0.5 wide beta1 cells give a 2 x 2 grid; a occupies (0, 0), b (1, 1).
  REQUIRE(a.n_lambda == 2);
  const auto cells = absolutely_unavailable({a, b});
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == std::make_pair(0, 1));
  CHECK(cells[1] == std::make_pair(1, 0));

  const auto alone = absolutely_unavailable({a});
  CHECK(alone.size() == 3);
  CHECK(absolutely_unavailable({a, a, b}).size() == 2);
}

TEST_CASE("absolutely unavailable validates its inputs") {
  CHECK_THROWS_AS(absolutely_unavailable({}), std::invalid_argument);
  const DensityGrid fine = density_from_points({}, 0.01);
  const DensityGrid coarse = density_from_points({}, 0.02);
  CHECK_THROWS_AS(absolutely_unavailable({fine, coarse}), std::invalid_argument);
}

TEST_CASE("creatable area counts occupied cells") {
  CHECK(creatable_area(density_from_points({}, 0.01)) == 0.0);
  CHECK(creatable_area(density_from_points({{0.7, 0.3}}, 0.01)) ==
        doctest::Approx(1e-4).epsilon(1e-12));
  Points all;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) all.push_back({0.51 + 0.25 * i, 0.25 + 0.5 * j});
  }
  CHECK(creatable_area(density_from_points(all, 0.5)) == 1.0);
}

TEST_CASE("combined decade index") {
  CHECK(combined_z(0.0, 0.0) == 0);
  CHECK(combined_z(0.55, 0.32) == 53);
  CHECK(combined_z(1.0, 1.0) == 99);
  CHECK(combined_z(0.999, 0.0999) == 90);
  CHECK(combined_z(0.25, 0.75) == 27);
}

TEST_CASE("step completeness over the phase decades") {
  std::vector<ScanRecord> good;
  for (int z = 0; z < 10; ++z) {
    good.push_back(record_of(0.9, 0.35, 0.05 + 0.1 * z));
  }
  good.push_back(record_of(0.6, 0.35, 0.0));  // far below the decade maximum
  CHECK(boundary_z_step_complete(good));

  std::vector<ScanRecord> missing = good;
  missing.erase(missing.begin() + 4);  // drop one phase decade near the top
  CHECK_FALSE(boundary_z_step_complete(missing));

  const std::vector<ScanRecord> untouched{record_of(0.5, 0.5, 0.5)};
  CHECK(boundary_z_step_complete(untouched));
}
