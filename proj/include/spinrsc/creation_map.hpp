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

#ifndef SPINRSC_CREATION_MAP_HPP_
#define SPINRSC_CREATION_MAP_HPP_

#include <optional>
#include <vector>

#include "spinrsc/spin_chain.hpp"
#include "spinrsc/unitary_params.hpp"

namespace spinrsc {

// One evaluated grid point of a control-to-receiver map.
struct ScanRecord {
  SenderControls controls;
  double t = 0.0;
  ReceiverState receiver;
};

// Inclusive uniform grids. A single-point range degenerates to its start.
struct ScanConfig {
  ChainSpec chain;
  double lambdaB = 1.0;

  // three-site grid
  int phi1_points = 400;
  double phi2 = 0.0;
  int t_points = 2400;
  double t_min = 0.0;
  std::optional<double> t_max;  // defaults to the spectral period

  // four-site grid
  int phi10_points = 51;
  int phi11_points = 26;
  int phi12_points = 51;
  int phi_points = 26;
  std::optional<double> fixed_t;

  int workers = 1;
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const ScanConfig& cfg);

// (U rho0_A U^+) x rho0_C x diag(lambdaB, 1 - lambdaB). The diagonals
// must be probability vectors; the transmission factor may span several
// sites (its diagonal length a power of two).
ComplexMatrix initial_state(const std::vector<double>& sender_diag,
                            const std::vector<double>& transmission_diag,
                            double lambdaB, const ComplexMatrix& u_sender);

// Receiver parameters of the evolved chain at time t: the sender unitary
// is applied to the pure sender block, the chain evolves under the XY
// Hamiltonian, and the last site is traced out and decomposed.
ReceiverState evaluate(const ScanConfig& cfg, const SenderControls& controls,
                       double t);

// {phi1, t} -> (lambda, beta1, beta2) over the inclusive grid
// phi1 in [0,1], t in [t_min, t_max], phi2 fixed. Row-major order with t
// outermost. Requires a 3-site chain.
std::vector<ScanRecord> scan3(const ScanConfig& cfg);

// {phi10, phi11, phi12, phi} -> (lambda, beta1, beta2) at t = fixed_t
// over the inclusive grids. Lexicographic order (phi10, phi11, phi12, phi).
// Requires a 4-site chain and fixed_t.
std::vector<ScanRecord> scan4(const ScanConfig& cfg);

// Scans t over the uniform grid {k T / t_points : k = 1..t_points},
// runs a coarse four-site scan at each t, scores each by the occupied
// fraction of the receiver rectangle at cell size 0.02, and returns the
// argmax; ties break toward smaller t.
double choose_t0(const ScanConfig& cfg, int t_points);

// State transmission along an otherwise empty chain: sender prepared by
// su2(phi1, phi2) from its ground state, every other site in the ground
// state, evolved under the XY Hamiltonian with the gamma field term.
ReceiverState transfer_map(const ChainSpec& chain,
                           const OneQubitControls& controls, double t);

}  // namespace spinrsc

#endif  // SPINRSC_CREATION_MAP_HPP_
