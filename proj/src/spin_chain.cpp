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

#include "spinrsc/spin_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace spinrsc {

namespace {

ComplexMatrix embed(const ComplexMatrix& op, int site, int n_sites) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < n_sites; ++s) {
    out = kron(out, s == site ? op : ComplexMatrix::Identity(2, 2));
  }
  return out;
}

}  // namespace

ComplexMatrix xy_hamiltonian(const ChainSpec& spec) {
  if (spec.n_sites < 2) {
    throw std::invalid_argument("xy_hamiltonian: need at least two sites");
  }
  ComplexMatrix iplus = ComplexMatrix::Zero(2, 2);
  iplus(0, 1) = 1.0;  // raises |1> (spin down) to |0> (spin up)
  const ComplexMatrix iminus = iplus.adjoint();

  const Eigen::Index dim = Eigen::Index(1) << spec.n_sites;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j + 1 < spec.n_sites; ++j) {
    const ComplexMatrix pj = embed(iplus, j, spec.n_sites);
    const ComplexMatrix mj = embed(iminus, j, spec.n_sites);
    const ComplexMatrix pj1 = embed(iplus, j + 1, spec.n_sites);
    const ComplexMatrix mj1 = embed(iminus, j + 1, spec.n_sites);
    h -= 0.5 * spec.d * (pj * mj1 + mj * pj1);
  }
  if (spec.gamma != 0.0) {
    h += spec.gamma * total_iz(spec.n_sites);
  }
  return h;
}

ComplexMatrix total_iz(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("total_iz: need at least one site");
  ComplexMatrix iz = ComplexMatrix::Zero(2, 2);
  iz(0, 0) = 0.5;
  iz(1, 1) = -0.5;
  const Eigen::Index dim = Eigen::Index(1) << n_sites;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < n_sites; ++s) out += embed(iz, s, n_sites);
  return out;
}

double spectral_period(const SpectralDecomposition& h_spec, double zero_tol) {
  double min_abs = -1.0;
  for (Eigen::Index k = 0; k < h_spec.eigenvalues.size(); ++k) {
    const double a = std::abs(h_spec.eigenvalues(k));
    if (a > zero_tol && (min_abs < 0.0 || a < min_abs)) min_abs = a;
  }
  if (min_abs < 0.0) {
    throw std::invalid_argument("spectral_period: no eigenvalue above tolerance");
  }
  return M_PI / min_abs;
}

}  // namespace spinrsc
