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

#include "mzphase/linalg.hpp"
#include "mzphase/states.hpp"

namespace mzphase {

/// Complete set of mutually orthogonal projectors with outcome labels.
class ProjectorSet {
  public:
    /// Validates hermiticity, idempotency, mutual orthogonality and
    /// completeness, all to 1e-12.
    static ProjectorSet create(HilbertSpace space, std::vector<Matrix> projectors,
                               std::vector<std::string> outcome_labels);

    const HilbertSpace &space() const { return space_; }
    const std::vector<Matrix> &projectors() const { return projectors_; }
    const std::vector<std::string> &outcome_labels() const { return labels_; }
    int outcome_count() const { return static_cast<int>(projectors_.size()); }

  private:
    ProjectorSet(HilbertSpace space, std::vector<Matrix> projectors,
                 std::vector<std::string> labels)
        : space_(std::move(space)), projectors_(std::move(projectors)),
          labels_(std::move(labels)) {}
    HilbertSpace space_;
    std::vector<Matrix> projectors_;
    std::vector<std::string> labels_;
};

/// Tr[rho Pi_m] per outcome, clamped to [0, 1]; the sum is checked to 1e-10.
RVector measurement_probabilities(const DensityOperator &rho, const ProjectorSet &ps);

}  // namespace mzphase
