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

#include "spinrsc/io_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrsc {

namespace {

constexpr char kOneQubitHeader[] = "phi1,phi2,t,lambda,beta1,beta2";
constexpr char kReducedHeader[] = "phi10,phi11,phi12,phi,t,lambda,beta1,beta2";

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<double> parse_row(const std::string& line, std::size_t expect,
                              const std::string& path) {
  std::vector<double> fields;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    fields.push_back(std::stod(cell, &used));
    if (used != cell.size()) {
      throw std::runtime_error("malformed number in " + path + ": " + cell);
    }
  }
  if (fields.size() != expect) {
    throw std::runtime_error("wrong column count in " + path + ": " + line);
  }
  return fields;
}

}  // namespace

void write_scan_csv(const std::string& path,
                    const std::vector<ScanRecord>& records) {
  const bool reduced =
      !records.empty() &&
      std::holds_alternative<TwoQubitReducedControls>(records.front().controls);
  if (!records.empty() && !reduced &&
      !std::holds_alternative<OneQubitControls>(records.front().controls)) {
    throw std::invalid_argument("write_scan_csv: unsupported controls variant");
  }
  std::ofstream out = open_out(path);
  out << (reduced ? kReducedHeader : kOneQubitHeader) << '\n';
  for (const ScanRecord& rec : records) {
    if (reduced) {
      const auto& c = std::get<TwoQubitReducedControls>(rec.controls);
      out << fmt(c.phi10) << ',' << fmt(c.phi11) << ',' << fmt(c.phi12) << ','
          << fmt(c.phi) << ',';
    } else {
      const auto& c = std::get<OneQubitControls>(rec.controls);
      out << fmt(c.phi1) << ',' << fmt(c.phi2) << ',';
    }
    out << fmt(rec.t) << ',' << fmt(rec.receiver.lambda) << ','
        << fmt(rec.receiver.beta1) << ',' << fmt(rec.receiver.beta2) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ScanRecord> read_scan_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty scan file: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool reduced = false;
  if (line == kReducedHeader) {
    reduced = true;
  } else if (line != kOneQubitHeader) {
    throw std::runtime_error("unrecognized scan header in " + path);
  }
  std::vector<ScanRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<double> f = parse_row(line, reduced ? 8 : 6, path);
    ScanRecord rec;
    if (reduced) {
      rec.controls = TwoQubitReducedControls{f[0], f[1], f[2], f[3]};
      rec.t = f[4];
      rec.receiver = {f[5], f[6], f[7]};
    } else {
      rec.controls = OneQubitControls{f[0], f[1]};
      rec.t = f[2];
      rec.receiver = {f[3], f[4], f[5]};
    }
    records.push_back(rec);
  }
  return records;
}

void write_density_csv(const std::string& path, const DensityGrid& grid) {
  std::ofstream out = open_out(path);
  out << "lambda_center,beta1_center,count,S\n";
  for (int i = 0; i < grid.n_lambda; ++i) {
    for (int j = 0; j < grid.n_beta1; ++j) {
      out << fmt(grid.lambda_center(i)) << ',' << fmt(grid.beta1_center(j))
          << ',' << static_cast<long long>(grid.count(i, j)) << ','
          << fmt(grid.S(i, j)) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_boundary_csv(const std::string& path, const BoundaryCurve& curve,
                        double eps_beta1) {
  const double lo = eps_beta1 / 2.0;
  const double hi = 1.0 - eps_beta1 / 2.0;
  std::ofstream out = open_out(path);
  out << "lambda,beta1_upper,beta1_lower,analytic_upper,analytic_lower,"
         "residual_upper,residual_lower\n";
  for (const BoundaryCurve::Sample& s : curve.samples) {
    const auto [rising, falling] = analytic_boundary(s.lambda);
    const double au = std::clamp(falling, lo, hi);
    const double al = std::clamp(rising, lo, hi);
    out << fmt(s.lambda) << ',' << fmt(s.beta1_upper) << ','
        << fmt(s.beta1_lower) << ',' << fmt(au) << ',' << fmt(al) << ','
        << fmt(s.beta1_upper - au) << ',' << fmt(s.beta1_lower - al) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_density_pgm(const std::string& path, const DensityGrid& grid) {
  std::vector<double> positive;
  for (int i = 0; i < grid.n_lambda; ++i) {
    for (int j = 0; j < grid.n_beta1; ++j) {
      if (grid.count(i, j) > 0) positive.push_back(grid.S(i, j));
    }
  }
  double clip = 1.0;
  if (!positive.empty()) {
    std::sort(positive.begin(), positive.end());
    const std::size_t idx = std::min(
        positive.size() - 1,
        static_cast<std::size_t>(std::ceil(0.99 * positive.size())) == 0
            ? 0
            : static_cast<std::size_t>(std::ceil(0.99 * positive.size())) - 1);
    clip = positive[idx];
    if (clip <= 0.0) clip = 1.0;
  }
  std::ofstream out = open_out(path);
  out << "P5\n" << grid.n_lambda << ' ' << grid.n_beta1 << "\n255\n";
  for (int row = 0; row < grid.n_beta1; ++row) {
    const int j = grid.n_beta1 - 1 - row;
    for (int i = 0; i < grid.n_lambda; ++i) {
      const double s = std::min(grid.S(i, j), clip);
      const int v = static_cast<int>(std::lround(255.0 * s / clip));
      out.put(static_cast<char>(std::clamp(v, 0, 255)));
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace spinrsc
