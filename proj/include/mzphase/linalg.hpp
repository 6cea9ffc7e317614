// Copyright 2026 The mzphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mzphase {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline Matrix dagger(const Matrix &m) { return m.adjoint(); }

inline double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

/// max |M - M^dagger| entrywise.
inline double hermiticity_defect(const Matrix &m) {
    return max_abs(m - m.adjoint());
}

/// max |U^dagger U - I| entrywise.
inline double unitarity_defect(const Matrix &u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

Matrix kron(const Matrix &a, const Matrix &b);
Vector kron(const Vector &a, const Vector &b);

}  // namespace mzphase
