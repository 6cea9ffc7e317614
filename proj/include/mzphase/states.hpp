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

#include <string>
#include <vector>

#include "mzphase/hilbert.hpp"
#include "mzphase/linalg.hpp"

namespace mzphase {

/// Structural tolerances shared by the state types.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kEigenvalueTol = 1e-9;
inline constexpr double kProbabilitySumTol = 1e-10;

struct DensityDiagnostics {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool ok() const {
        return hermiticity_defect <= kStructuralTol && trace_defect <= kStructuralTol &&
               min_eigenvalue >= -kEigenvalueTol;
    }
};

/// Normalized state vector on a labeled composite space.
class PureState {
  public:
    PureState(HilbertSpace space, Vector amplitudes);

    const HilbertSpace &space() const { return space_; }
    const Vector &amplitudes() const { return amp_; }
    int dim() const { return static_cast<int>(amp_.size()); }

  private:
    HilbertSpace space_;
    Vector amp_;
};

/// Hermitian, unit-trace, positive-semidefinite operator on a labeled space.
class DensityOperator {
  public:
    /// Validates all three invariants; throws std::invalid_argument with the
    /// failing diagnostic otherwise.
    static DensityOperator create(HilbertSpace space, Matrix m);
    static DensityOperator from_pure(const PureState &psi);

    const HilbertSpace &space() const { return space_; }
    const Matrix &matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

    DensityDiagnostics diagnostics() const;
    double purity() const;  // Tr(rho^2)

  private:
    DensityOperator(HilbertSpace space, Matrix m)
        : space_(std::move(space)), mat_(std::move(m)) {}
    HilbertSpace space_;
    Matrix mat_;
};

PureState tensor_product(const PureState &a, const PureState &b);
DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b);

/// U rho U^dagger. Rejects non-unitary U with a max|U^dagger U - I| diagnostic.
DensityOperator apply_unitary(const DensityOperator &rho, const Matrix &u);

/// Reduced state on the listed factors (in the listed order).
DensityOperator partial_trace(const DensityOperator &rho,
                              const std::vector<std::string> &keep_labels);

}  // namespace mzphase
