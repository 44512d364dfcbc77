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

#ifndef SPINRSC_UNITARY_PARAMS_HPP_
#define SPINRSC_UNITARY_PARAMS_HPP_

#include <array>
#include <variant>

#include "spinrsc/linalg.hpp"

namespace spinrsc {

struct OneQubitControls {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

struct TwoQubitFullControls {
  std::array<double, 12> phi{};
};

struct TwoQubitReducedControls {
  double phi10 = 0.0;
  double phi11 = 0.0;
  double phi12 = 0.0;
  double phi = 0.0;
};

using SenderControls =
    std::variant<OneQubitControls, TwoQubitFullControls, TwoQubitReducedControls>;

// One-qubit receiver state: largest eigenvalue and eigenvector angles.
// lambda in [1/2, 1], beta1 in [0, 1], beta2 in [0, 1). beta2 is 0 by
// convention whenever beta1 is 0 or 1 and at the maximally mixed point.
struct ReceiverState {
  double lambda = 1.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

// [[cos(pi phi1/2), -e^{-2 i pi phi2} sin(pi phi1/2)],
//  [e^{2 i pi phi2} sin(pi phi1/2), cos(pi phi1/2)]]
ComplexMatrix su2(double phi1, double phi2);

// The 4x4 generator basis, i in 1..15. Generators 8 and 15 carry the
// 1/sqrt(3) and 1/sqrt(6) normalization factors.
ComplexMatrix gamma(int i);

// Ordered product of 12 exponentials over the generator sequence
// (g3, g2, g3, g5, g3, g10, g3, g2, g3, g5, g3, g2); odd factors use
// angle pi*phi_k, even factors pi*phi_k/2. Each factor is exponentiated
// analytically via exp(i t g) = I + i g sin(t) + g^2 (cos(t) - 1).
ComplexMatrix su4_full(const TwoQubitFullControls& c);

// su4_full applied to the expanded 12-vector
// (phi, phi/2, phi, phi/2, phi, phi/2, phi, phi/2, phi, phi10, phi11, phi12).
ComplexMatrix su4_reduced(const TwoQubitReducedControls& c);

// Parameter extraction from a 2x2 density matrix:
// lambda = 1/2 + sqrt((rho11 - rho22)^2 / 4 + |rho21|^2),
// beta1 = arccos((rho11 - rho22) / (2 lambda - 1)) / pi,
// beta2 = arg(rho21) / (2 pi) mod 1.
// Degenerate cases: lambda - 1/2 <= 1e-9 returns (1/2, 0, 0);
// |rho21| <= 1e-12 returns beta2 = 0 and beta1 in {0, 1} by the sign of
// rho11 - rho22.
ReceiverState receiver_params(const ComplexMatrix& rho);

// Inverse constructor: U(beta) diag(lambda, 1 - lambda) U(beta)^+ with
// off-diagonal (2,1) entry e^{2 i pi beta2} (2 lambda - 1)
// sin(pi beta1/2) cos(pi beta1/2).
ComplexMatrix receiver_state(const ReceiverState& r);

}  // namespace spinrsc

#endif  // SPINRSC_UNITARY_PARAMS_HPP_
