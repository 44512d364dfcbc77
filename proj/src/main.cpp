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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinrsc/analysis.hpp"
#include "spinrsc/creation_map.hpp"
#include "spinrsc/io_util.hpp"

namespace {

using namespace spinrsc;

struct ScanFlags {
  int chain = 3;
  double lambdaB = 1.0;
  double t0 = 6.4;
  int t_points = 2400;
  double t_max = 0.0;
  bool has_t_max = false;
  int phi1_points = 400;
  int phi10_points = 51;
  int phi11_points = 26;
  int phi12_points = 51;
  int phi_points = 26;
  double gamma = 0.0;
  int workers = 1;
};

void add_scan_flags(CLI::App* cmd, ScanFlags& f) {
  cmd->add_option("--chain", f.chain, "Chain length (3 or 4)")
      ->check(CLI::IsMember({3, 4}));
  cmd->add_option("--lambdaB", f.lambdaB, "Receiver initial weight in [0, 1]");
  cmd->add_option("--t0", f.t0, "Evolution time for the 4-site scan");
  cmd->add_option("--t-points", f.t_points, "Time grid size (3-site scan)");
  cmd->add_option("--t-max", f.t_max, "Time grid endpoint (default: spectral period)")
      ->each([&f](const std::string&) { f.has_t_max = true; });
  cmd->add_option("--phi1-points", f.phi1_points, "phi1 grid size (3-site scan)");
  cmd->add_option("--phi10-points", f.phi10_points, "phi10 grid size");
  cmd->add_option("--phi11-points", f.phi11_points, "phi11 grid size");
  cmd->add_option("--phi12-points", f.phi12_points, "phi12 grid size");
  cmd->add_option("--phi-points", f.phi_points, "phi grid size");
  cmd->add_option("--gamma", f.gamma, "Magnetic field strength");
  cmd->add_option("--workers", f.workers, "Worker thread count");
}

ScanConfig to_config(const ScanFlags& f) {
  ScanConfig cfg;
  cfg.chain = ChainSpec{f.chain, 1.0, f.gamma};
  cfg.lambdaB = f.lambdaB;
  cfg.phi1_points = f.phi1_points;
  cfg.t_points = f.t_points;
  if (f.has_t_max) cfg.t_max = f.t_max;
  cfg.phi10_points = f.phi10_points;
  cfg.phi11_points = f.phi11_points;
  cfg.phi12_points = f.phi12_points;
  cfg.phi_points = f.phi_points;
  if (f.chain == 4) cfg.fixed_t = f.t0;
  cfg.workers = f.workers;
  return cfg;
}

std::vector<ScanRecord> run_scan(const ScanFlags& f) {
  const ScanConfig cfg = to_config(f);
  return f.chain == 3 ? scan3(cfg) : scan4(cfg);
}

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"Remote mixed-state creation maps for short XY spin chains"};
  app.require_subcommand(1);

  ScanFlags scan_f;
  std::string scan_out = "scan.csv";
  CLI::App* scan_cmd = app.add_subcommand("scan", "Sweep sender controls, record receiver states");
  add_scan_flags(scan_cmd, scan_f);
  scan_cmd->add_option("--out", scan_out, "Output CSV path");

  ScanFlags dens_f;
  std::string dens_out = "density.csv";
  std::string dens_records;
  std::string dens_heatmap;
  double dens_eps = 0.01;
  CLI::App* dens_cmd = app.add_subcommand("density", "Bin receiver states into an S grid");
  add_scan_flags(dens_cmd, dens_f);
  dens_cmd->add_option("--records", dens_records, "Scan CSV to bin (default: run the scan inline)");
  dens_cmd->add_option("--eps", dens_eps, "beta1 cell size (lambda cells are half as wide)");
  dens_cmd->add_option("--out", dens_out, "Output CSV path");
  dens_cmd->add_option("--heatmap", dens_heatmap, "Optional PGM heatmap path");

  std::vector<std::string> bound_records;
  std::string bound_out = "boundary.csv";
  double bound_eps = 0.01;
  CLI::App* bound_cmd = app.add_subcommand(
      "boundary", "Column envelopes of the occupied region, or with several "
                  "record files the cells empty in all of them");
  bound_cmd->add_option("--records", bound_records, "Scan CSV path (repeatable)")
      ->required();
  bound_cmd->add_option("--eps", bound_eps, "beta1 cell size");
  bound_cmd->add_option("--out", bound_out, "Output CSV path");

  ScanFlags t0_f;
  t0_f.chain = 4;
  t0_f.t_points = 52;
  t0_f.phi10_points = 11;
  t0_f.phi11_points = 11;
  t0_f.phi12_points = 6;
  t0_f.phi_points = 6;
  std::string t0_out;
  CLI::App* t0_cmd = app.add_subcommand(
      "choose-t0", "Pick the 4-site evolution time maximizing creatable area");
  add_scan_flags(t0_cmd, t0_f);
  t0_cmd->add_option("--out", t0_out, "Write the winning scan's records here");

  double tr_t = 0.0;
  bool tr_has_t = false;
  double tr_gamma = 0.0;
  int tr_chain = 3;
  std::string tr_out;
  CLI::App* tr_cmd = app.add_subcommand(
      "transfer", "Pure-state transfer check on the 3-site chain");
  tr_cmd->add_option("--chain", tr_chain, "Chain length (must be 3)");
  tr_cmd->add_option("--t0", tr_t, "Evolution time (default: pi*sqrt(2))")
      ->each([&tr_has_t](const std::string&) { tr_has_t = true; });
  tr_cmd->add_option("--gamma", tr_gamma, "Magnetic field strength");
  tr_cmd->add_option("--out", tr_out, "Optional per-sample CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (scan_cmd->parsed()) {
    const std::vector<ScanRecord> records = run_scan(scan_f);
    write_scan_csv(scan_out, records);
    std::cout << records.size() << " rows\n";
    return 0;
  }

  if (dens_cmd->parsed()) {
    std::vector<ScanRecord> records;
    if (!dens_records.empty()) {
      records = read_scan_csv(dens_records);
    } else {
      records = run_scan(dens_f);
    }
    const DensityGrid grid = density(records, dens_eps);
    write_density_csv(dens_out, grid);
    if (!dens_heatmap.empty()) write_density_pgm(dens_heatmap, grid);
    const DensityMax m = density_max(grid);
    std::cout << fmt6(m.s_max) << ' ' << fmt6(m.lambda_max) << ' '
              << fmt6(m.beta1_max) << '\n';
    return 0;
  }

  if (bound_cmd->parsed()) {
    if (bound_records.size() == 1) {
      const DensityGrid grid = density(read_scan_csv(bound_records[0]), bound_eps);
      write_boundary_csv(bound_out, boundary(grid), grid.eps_beta1);
      return 0;
    }
    std::vector<DensityGrid> grids;
    grids.reserve(bound_records.size());
    for (const std::string& path : bound_records) {
      grids.push_back(density(read_scan_csv(path), bound_eps));
    }
    const std::vector<std::pair<int, int>> cells = absolutely_unavailable(grids);
    std::ofstream out(bound_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + bound_out);
    out << "lambda_center,beta1_center\n";
    for (const auto& [i, j] : cells) {
      out << fmt17(grids.front().lambda_center(i)) << ','
          << fmt17(grids.front().beta1_center(j)) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + bound_out);
    std::cout << cells.size() << " cells\n";
    return 0;
  }

  if (t0_cmd->parsed()) {
    if (t0_f.chain != 4) {
      throw std::invalid_argument("choose-t0: chain must have 4 sites");
    }
    ScanConfig cfg = to_config(t0_f);
    const double period = spectral_period(herm_eig(xy_hamiltonian(cfg.chain)));
    std::cout << "T = " << fmt17(period) << '\n';
    double best_t = 0.0, best_score = -1.0;
    for (int k = 1; k <= t0_f.t_points; ++k) {
      const double t = period * static_cast<double>(k) / t0_f.t_points;
      cfg.fixed_t = t;
      const double score = creatable_area(density(scan4(cfg), 0.02));
      std::cout << "t = " << fmt17(t) << " score = " << fmt17(score) << '\n';
      if (score > best_score) {
        best_score = score;
        best_t = t;
      }
    }
    std::cout << "t0 = " << fmt17(best_t) << '\n';
    if (!t0_out.empty()) {
      cfg.fixed_t = best_t;
      write_scan_csv(t0_out, scan4(cfg));
    }
    return 0;
  }

  if (tr_cmd->parsed()) {
    if (tr_chain != 3) {
      throw std::invalid_argument("transfer: chain must have 3 sites");
    }
    const ChainSpec chain{tr_chain, 1.0, tr_gamma};
    const double t = tr_has_t ? tr_t : M_PI * std::sqrt(2.0);
    constexpr int kSamples = 20;
    double lambda_min = 1.0;
    double max_dev = 0.0;
    std::ofstream out;
    if (!tr_out.empty()) {
      out.open(tr_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open for writing: " + tr_out);
      out << "phi1,lambda,beta1,beta2\n";
    }
    for (int k = 0; k < kSamples; ++k) {
      const double phi1 = static_cast<double>(k) / (kSamples - 1);
      const ReceiverState r = transfer_map(chain, {phi1, 0.0}, t);
      lambda_min = std::min(lambda_min, r.lambda);
      max_dev = std::max(max_dev, std::abs(r.beta1 - phi1));
      if (out.is_open()) {
        out << fmt17(phi1) << ',' << fmt17(r.lambda) << ',' << fmt17(r.beta1)
            << ',' << fmt17(r.beta2) << '\n';
      }
    }
    if (out.is_open() && !out) throw std::runtime_error("write failed: " + tr_out);
    std::cout << "t = " << fmt17(t) << '\n'
              << "lambda_min = " << fmt17(lambda_min) << '\n'
              << "max_beta1_deviation = " << fmt17(max_dev) << '\n';
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
