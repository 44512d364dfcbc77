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

#ifndef SPINRSC_SPIN_CHAIN_HPP_
#define SPINRSC_SPIN_CHAIN_HPP_

#include "spinrsc/linalg.hpp"

namespace spinrsc {

struct ChainSpec {
  int n_sites = 3;
  double d = 1.0;      // nearest-neighbor coupling
  double gamma = 0.0;  // homogeneous field strength
};

// H = -sum_j (d/2)(I+_j I-_{j+1} + I-_j I+_{j+1}) + gamma * Iz_total.
// Basis: site 1 is the leftmost (most significant) factor; basis states
// are bit strings with spin-up encoded as bit 0.
ComplexMatrix xy_hamiltonian(const ChainSpec& spec);

// Total z-projection operator sum_j Iz_j in the same basis.
ComplexMatrix total_iz(int n_sites);

// pi / min{|e| : |e| > zero_tol} over the eigenvalues. Throws
// std::invalid_argument when every eigenvalue is below the tolerance.
double spectral_period(const SpectralDecomposition& h_spec,
                       double zero_tol = 1e-9);

}  // namespace spinrsc

#endif  // SPINRSC_SPIN_CHAIN_HPP_
