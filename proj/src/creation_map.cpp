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

#include "spinrsc/creation_map.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "spinrsc/analysis.hpp"

namespace spinrsc {

namespace {

double grid_value(int index, int points, double lo, double hi) {
  if (points == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(index) /
                  static_cast<double>(points - 1);
}

bool is_probability_vector(const std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= 1e-10;
}

ReceiverState receiver_at(const ComplexMatrix& p, const ComplexMatrix& rho0,
                          const std::vector<int>& site_dims) {
  const ComplexMatrix rho_t = p * rho0 * p.adjoint();
  const std::vector<int> keep{static_cast<int>(site_dims.size()) - 1};
  return receiver_params(partial_trace(rho_t, site_dims, keep));
}

void run_partitioned(int jobs, int workers, const std::function<void(int)>& job) {
  if (workers <= 1) {
    for (int k = 0; k < jobs; ++k) job(k);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([=, &job] {
      for (int k = w; k < jobs; k += workers) job(k);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void validate(const ScanConfig& cfg) {
  if (cfg.chain.n_sites != 3 && cfg.chain.n_sites != 4) {
    throw std::invalid_argument("scan config: chain must have 3 or 4 sites");
  }
  if (cfg.lambdaB < 0.0 || cfg.lambdaB > 1.0) {
    throw std::invalid_argument("scan config: lambdaB must lie in [0, 1]");
  }
  if (cfg.phi1_points < 1 || cfg.t_points < 1 || cfg.phi10_points < 1 ||
      cfg.phi11_points < 1 || cfg.phi12_points < 1 || cfg.phi_points < 1) {
    throw std::invalid_argument("scan config: point counts must be positive");
  }
  if (cfg.phi2 < 0.0 || cfg.phi2 > 1.0) {
    throw std::invalid_argument("scan config: phi2 must lie in [0, 1]");
  }
  if (cfg.t_min < 0.0) {
    throw std::invalid_argument("scan config: t_min must be non-negative");
  }
  if (cfg.t_max && *cfg.t_max < cfg.t_min) {
    throw std::invalid_argument("scan config: t_max below t_min");
  }
  if (cfg.fixed_t && *cfg.fixed_t < 0.0) {
    throw std::invalid_argument("scan config: fixed_t must be non-negative");
  }
  if (cfg.workers < 1) {
    throw std::invalid_argument("scan config: workers must be positive");
  }
}

ComplexMatrix initial_state(const std::vector<double>& sender_diag,
                            const std::vector<double>& transmission_diag,
                            double lambdaB, const ComplexMatrix& u_sender) {
  if (!is_probability_vector(sender_diag) ||
      !is_probability_vector(transmission_diag)) {
    throw std::invalid_argument("initial_state: diagonals must be probability vectors");
  }
  if (lambdaB < 0.0 || lambdaB > 1.0) {
    throw std::invalid_argument("initial_state: lambdaB must lie in [0, 1]");
  }
  const Eigen::Index na = static_cast<Eigen::Index>(sender_diag.size());
  if (u_sender.rows() != na || u_sender.cols() != na) {
    throw std::invalid_argument("initial_state: sender unitary dimension mismatch");
  }
  ComplexMatrix rho_a = ComplexMatrix::Zero(na, na);
  for (Eigen::Index k = 0; k < na; ++k) rho_a(k, k) = sender_diag[k];
  rho_a = u_sender * rho_a * u_sender.adjoint();

  const Eigen::Index nc = static_cast<Eigen::Index>(transmission_diag.size());
  ComplexMatrix rho_c = ComplexMatrix::Zero(nc, nc);
  for (Eigen::Index k = 0; k < nc; ++k) rho_c(k, k) = transmission_diag[k];

  ComplexMatrix rho_b = ComplexMatrix::Zero(2, 2);
  rho_b(0, 0) = lambdaB;
  rho_b(1, 1) = 1.0 - lambdaB;

  return kron(kron(rho_a, rho_c), rho_b);
}

ReceiverState evaluate(const ScanConfig& cfg, const SenderControls& controls,
                       double t) {
  validate(cfg);
  const SpectralDecomposition h = herm_eig(xy_hamiltonian(cfg.chain));
  const ComplexMatrix p = propagator(h, t);
  if (cfg.chain.n_sites == 3) {
    const auto* one = std::get_if<OneQubitControls>(&controls);
    if (one == nullptr) {
      throw std::invalid_argument("evaluate: 3-site chain needs one-qubit controls");
    }
    const ComplexMatrix rho0 =
        initial_state({1.0, 0.0}, {1.0, 0.0}, cfg.lambdaB, su2(one->phi1, one->phi2));
    return receiver_at(p, rho0, {2, 2, 2});
  }
  ComplexMatrix u;
  if (const auto* red = std::get_if<TwoQubitReducedControls>(&controls)) {
    u = su4_reduced(*red);
  } else if (const auto* full = std::get_if<TwoQubitFullControls>(&controls)) {
    u = su4_full(*full);
  } else {
    throw std::invalid_argument("evaluate: 4-site chain needs two-qubit controls");
  }
  const ComplexMatrix rho0 =
      initial_state({1.0, 0.0, 0.0, 0.0}, {1.0, 0.0}, cfg.lambdaB, u);
  return receiver_at(p, rho0, {4, 2, 2});
}

std::vector<ScanRecord> scan3(const ScanConfig& cfg) {
  validate(cfg);
  if (cfg.chain.n_sites != 3) {
    throw std::invalid_argument("scan3: chain must have 3 sites");
  }
  const SpectralDecomposition h = herm_eig(xy_hamiltonian(cfg.chain));
  const double t_hi = cfg.t_max ? *cfg.t_max : spectral_period(h);

  const int np = cfg.phi1_points;
  const int nt = cfg.t_points;
  std::vector<ScanRecord> records(static_cast<std::size_t>(np) * nt);

  run_partitioned(nt, cfg.workers, [&](int it) {
    const double t = grid_value(it, nt, cfg.t_min, t_hi);
    const ComplexMatrix p = propagator(h, t);
    for (int ip = 0; ip < np; ++ip) {
      const double phi1 = grid_value(ip, np, 0.0, 1.0);
      const ComplexMatrix rho0 = initial_state({1.0, 0.0}, {1.0, 0.0},
                                               cfg.lambdaB, su2(phi1, cfg.phi2));
      ScanRecord& rec = records[static_cast<std::size_t>(it) * np + ip];
      rec.controls = OneQubitControls{phi1, cfg.phi2};
      rec.t = t;
      rec.receiver = receiver_at(p, rho0, {2, 2, 2});
    }
  });
  return records;
}

std::vector<ScanRecord> scan4(const ScanConfig& cfg) {
  validate(cfg);
  if (cfg.chain.n_sites != 4) {
    throw std::invalid_argument("scan4: chain must have 4 sites");
  }
  if (!cfg.fixed_t) {
    throw std::invalid_argument("scan4: fixed_t must be set");
  }
  const SpectralDecomposition h = herm_eig(xy_hamiltonian(cfg.chain));
  const double t = *cfg.fixed_t;
  const ComplexMatrix p = propagator(h, t);

  const int n10 = cfg.phi10_points, n11 = cfg.phi11_points;
  const int n12 = cfg.phi12_points, nphi = cfg.phi_points;
  std::vector<ScanRecord> records(static_cast<std::size_t>(n10) * n11 * n12 * nphi);

  run_partitioned(n10, cfg.workers, [&](int i10) {
    const double phi10 = grid_value(i10, n10, 0.0, 1.0);
    std::size_t idx = static_cast<std::size_t>(i10) * n11 * n12 * nphi;
    for (int i11 = 0; i11 < n11; ++i11) {
      const double phi11 = grid_value(i11, n11, 0.0, 1.0);
      for (int i12 = 0; i12 < n12; ++i12) {
        const double phi12 = grid_value(i12, n12, 0.0, 1.0);
        for (int ip = 0; ip < nphi; ++ip, ++idx) {
          const double phi = grid_value(ip, nphi, 0.0, 1.0);
          const TwoQubitReducedControls c{phi10, phi11, phi12, phi};
          const ComplexMatrix rho0 = initial_state(
              {1.0, 0.0, 0.0, 0.0}, {1.0, 0.0}, cfg.lambdaB, su4_reduced(c));
          ScanRecord& rec = records[idx];
          rec.controls = c;
          rec.t = t;
          rec.receiver = receiver_at(p, rho0, {4, 2, 2});
        }
      }
    }
  });
  return records;
}

double choose_t0(const ScanConfig& cfg, int t_points) {
  validate(cfg);
  if (cfg.chain.n_sites != 4) {
    throw std::invalid_argument("choose_t0: chain must have 4 sites");
  }
  if (t_points < 1) {
    throw std::invalid_argument("choose_t0: t_points must be positive");
  }
  const double period = spectral_period(herm_eig(xy_hamiltonian(cfg.chain)));

  double best_t = 0.0;
  double best_score = -1.0;
  for (int k = 1; k <= t_points; ++k) {
    const double t = period * static_cast<double>(k) / t_points;
    ScanConfig at_t = cfg;
    at_t.fixed_t = t;
    const double score = creatable_area(density(scan4(at_t), 0.02));
    if (score > best_score) {
      best_score = score;
      best_t = t;
    }
  }
  return best_t;
}

ReceiverState transfer_map(const ChainSpec& chain,
                           const OneQubitControls& controls, double t) {
  if (chain.n_sites < 3) {
    throw std::invalid_argument("transfer_map: need at least 3 sites");
  }
  const SpectralDecomposition h = herm_eig(xy_hamiltonian(chain));
  const ComplexMatrix p = propagator(h, t);

  std::vector<double> line(static_cast<std::size_t>(1) << (chain.n_sites - 2), 0.0);
  line[0] = 1.0;
  const ComplexMatrix rho0 =
      initial_state({1.0, 0.0}, line, 1.0, su2(controls.phi1, controls.phi2));

  std::vector<int> dims(chain.n_sites, 2);
  return receiver_at(p, rho0, dims);
}

}  // namespace spinrsc
