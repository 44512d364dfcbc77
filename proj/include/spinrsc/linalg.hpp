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

#ifndef SPINRSC_LINALG_HPP_
#define SPINRSC_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace spinrsc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Eigendecomposition of a Hermitian matrix with deterministic column
// phases: eigenvalues ascending, largest-magnitude component of every
// eigenvector made real and positive.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

// Kronecker product. The left factor is the most significant subsystem.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix on the kept subsystems. `site_dims` lists the dimension
// of every tensor factor from most to least significant; `keep` holds
// zero-based factor indices (ascending, non-empty).
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& site_dims,
                            const std::vector<int>& keep);

// Throws std::invalid_argument if `h` deviates from Hermitian by more
// than 1e-12 in any entry.
SpectralDecomposition herm_eig(const ComplexMatrix& h);

// exp(-i H t) assembled from the decomposition of H.
ComplexMatrix propagator(const SpectralDecomposition& h_spec, double t);

// exp(-i H t) rho0 exp(i H t).
ComplexMatrix evolve(const ComplexMatrix& rho0,
                     const SpectralDecomposition& h_spec, double t);

}  // namespace spinrsc

#endif  // SPINRSC_LINALG_HPP_
