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

#include "spinrsc/unitary_params.hpp"

#include <cmath>
#include <stdexcept>

namespace spinrsc {

namespace {

constexpr double kMaxMixedTol = 1e-9;
constexpr double kDiagonalTol = 1e-12;

// exp(i t g) for the generators used in the 12-factor product; they all
// satisfy g^3 = g, so exp(i t g) = I + i g sin(t) + g^2 (cos(t) - 1).
ComplexMatrix exp_generator(const ComplexMatrix& g, double theta) {
  const ComplexMatrix g2 = g * g;
  return ComplexMatrix::Identity(4, 4) +
         Complex(0.0, std::sin(theta)) * g +
         (std::cos(theta) - 1.0) * g2;
}

}  // namespace

ComplexMatrix su2(double phi1, double phi2) {
  const double c = std::cos(M_PI * phi1 / 2.0);
  const double s = std::sin(M_PI * phi1 / 2.0);
  const Complex w = std::exp(Complex(0.0, 2.0 * M_PI * phi2));
  ComplexMatrix u(2, 2);
  u(0, 0) = c;
  u(0, 1) = -std::conj(w) * s;
  u(1, 0) = w * s;
  u(1, 1) = c;
  return u;
}

ComplexMatrix gamma(int i) {
  if (i < 1 || i > 15) throw std::invalid_argument("gamma: index out of range");
  ComplexMatrix g = ComplexMatrix::Zero(4, 4);
  const Complex I(0.0, 1.0);
  switch (i) {
    case 1: g(0, 1) = 1.0; g(1, 0) = 1.0; break;
    case 2: g(0, 1) = -I; g(1, 0) = I; break;
    case 3: g(0, 0) = 1.0; g(1, 1) = -1.0; break;
    case 4: g(0, 2) = 1.0; g(2, 0) = 1.0; break;
    case 5: g(0, 2) = -I; g(2, 0) = I; break;
    case 6: g(1, 2) = 1.0; g(2, 1) = 1.0; break;
    case 7: g(1, 2) = -I; g(2, 1) = I; break;
    case 8: {
      const double f = 1.0 / std::sqrt(3.0);
      g(0, 0) = f; g(1, 1) = f; g(2, 2) = -2.0 * f;
      break;
    }
    case 9: g(0, 3) = 1.0; g(3, 0) = 1.0; break;
    case 10: g(0, 3) = -I; g(3, 0) = I; break;
    case 11: g(1, 3) = 1.0; g(3, 1) = 1.0; break;
    case 12: g(1, 3) = -I; g(3, 1) = I; break;
    case 13: g(2, 3) = 1.0; g(3, 2) = 1.0; break;
    case 14: g(2, 3) = -I; g(3, 2) = I; break;
    case 15: {
      const double f = 1.0 / std::sqrt(6.0);
      g(0, 0) = f; g(1, 1) = f; g(2, 2) = f; g(3, 3) = -3.0 * f;
      break;
    }
  }
  return g;
}

ComplexMatrix su4_full(const TwoQubitFullControls& c) {
  static const int kSequence[12] = {3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2};
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  for (int k = 0; k < 12; ++k) {
    const double angle =
        (k % 2 == 0) ? M_PI * c.phi[k] : M_PI * c.phi[k] / 2.0;
    u = u * exp_generator(gamma(kSequence[k]), angle);
  }
  return u;
}

ComplexMatrix su4_reduced(const TwoQubitReducedControls& c) {
  TwoQubitFullControls full;
  for (int n = 0; n < 4; ++n) {
    full.phi[2 * n] = c.phi;
    full.phi[2 * n + 1] = c.phi / 2.0;
  }
  full.phi[8] = c.phi;
  full.phi[9] = c.phi10;
  full.phi[10] = c.phi11;
  full.phi[11] = c.phi12;
  return su4_full(full);
}

ReceiverState receiver_params(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("receiver_params: matrix must be 2x2");
  }
  const double r11 = rho(0, 0).real();
  const double r22 = rho(1, 1).real();
  const Complex r21 = rho(1, 0);
  const double half_gap = (r11 - r22) / 2.0;
  double lambda = 0.5 + std::sqrt(half_gap * half_gap + std::norm(r21));
  if (lambda > 1.0) lambda = 1.0;

  if (lambda - 0.5 <= kMaxMixedTol) return {0.5, 0.0, 0.0};
  if (std::abs(r21) <= kDiagonalTol) {
    return {lambda, r11 >= r22 ? 0.0 : 1.0, 0.0};
  }

  double cosine = (r11 - r22) / (2.0 * lambda - 1.0);
  if (cosine > 1.0) cosine = 1.0;
  if (cosine < -1.0) cosine = -1.0;
  const double beta1 = std::acos(cosine) / M_PI;
  double beta2 = std::arg(r21) / (2.0 * M_PI);
  beta2 -= std::floor(beta2);
  if (beta2 >= 1.0) beta2 = 0.0;
  return {lambda, beta1, beta2};
}

ComplexMatrix receiver_state(const ReceiverState& r) {
  const double c = std::cos(M_PI * r.beta1 / 2.0);
  const double s = std::sin(M_PI * r.beta1 / 2.0);
  const Complex w = std::exp(Complex(0.0, 2.0 * M_PI * r.beta2));
  ComplexMatrix rho(2, 2);
  rho(0, 0) = r.lambda * c * c + (1.0 - r.lambda) * s * s;
  rho(1, 1) = r.lambda * s * s + (1.0 - r.lambda) * c * c;
  rho(1, 0) = w * (2.0 * r.lambda - 1.0) * s * c;
  rho(0, 1) = std::conj(rho(1, 0));
  return rho;
}

}  // namespace spinrsc
