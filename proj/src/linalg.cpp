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

#include "spinrsc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinrsc {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("kron: factors must be square");
  }
  const Eigen::Index na = a.rows(), nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& site_dims,
                            const std::vector<int>& keep) {
  const int n = static_cast<int>(site_dims.size());
  Eigen::Index total = 1;
  for (int d : site_dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: bad site dimension");
    total *= d;
  }
  if (total != rho.rows() || rho.rows() != rho.cols()) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be non-empty");
  }
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: bad keep index");
  }
  for (std::size_t k = 1; k < keep.size(); ++k) {
    if (keep[k] <= keep[k - 1]) {
      throw std::invalid_argument("partial_trace: keep must be strictly ascending");
    }
  }

  std::vector<int> traced;
  for (int s = 0; s < n; ++s) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);
  }

  Eigen::Index dim_keep = 1, dim_traced = 1;
  for (int s : keep) dim_keep *= site_dims[s];
  for (int s : traced) dim_traced *= site_dims[s];

  // Strides of each site index within the flat basis index; site 0 is the
  // most significant factor.
  std::vector<Eigen::Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * site_dims[s + 1];

  auto flat = [&](const std::vector<int>& sites, Eigen::Index packed) {
    Eigen::Index idx = 0;
    for (int s = static_cast<int>(sites.size()) - 1; s >= 0; --s) {
      const int d = site_dims[sites[s]];
      idx += (packed % d) * stride[sites[s]];
      packed /= d;
    }
    return idx;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index r = 0; r < dim_keep; ++r) {
    const Eigen::Index br = flat(keep, r);
    for (Eigen::Index c = 0; c < dim_keep; ++c) {
      const Eigen::Index bc = flat(keep, c);
      Complex sum = 0.0;
      for (Eigen::Index m = 0; m < dim_traced; ++m) {
        const Eigen::Index bm = flat(traced, m);
        sum += rho(br + bm, bc + bm);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

SpectralDecomposition herm_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("herm_eig: matrix must be square");
  }
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("herm_eig: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eig: eigensolver failed");
  }
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < out.eigenvectors.rows(); ++r) {
      const double m = std::abs(out.eigenvectors(r, c));
      if (m > best + 1e-15) {
        best = m;
        pivot = r;
      }
    }
    const Complex p = out.eigenvectors(pivot, c);
    if (std::abs(p) > 0.0) {
      out.eigenvectors.col(c) *= std::conj(p) / std::abs(p);
    }
  }
  return out;
}

ComplexMatrix propagator(const SpectralDecomposition& h_spec, double t) {
  const Eigen::Index n = h_spec.eigenvalues.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::exp(Complex(0.0, -h_spec.eigenvalues(k) * t));
  }
  return (h_spec.eigenvectors * phases.asDiagonal()) *
         h_spec.eigenvectors.adjoint();
}

ComplexMatrix evolve(const ComplexMatrix& rho0,
                     const SpectralDecomposition& h_spec, double t) {
  if (rho0.rows() != h_spec.eigenvalues.size() || rho0.rows() != rho0.cols()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  const ComplexMatrix p = propagator(h_spec, t);
  return p * rho0 * p.adjoint();
}

}  // namespace spinrsc
