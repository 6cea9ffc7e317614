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

/// Operator-sum channel: rho -> sum_i E_i rho E_i^dagger with
/// sum_i E_i^dagger E_i = I.
class KrausChannel {
  public:
    /// Validates square equal-dim elements and completeness to 1e-12.
    static KrausChannel create(std::vector<Matrix> elements);

    const std::vector<Matrix> &elements() const { return elements_; }
    int dim() const { return static_cast<int>(elements_.front().rows()); }

    /// max |sum E^dagger E - I| entrywise.
    double completeness_defect() const;

  private:
    explicit KrausChannel(std::vector<Matrix> elements) : elements_(std::move(elements)) {}
    std::vector<Matrix> elements_;
};

/// sum_i E_i rho E_i^dagger. Rejects channels whose completeness defect
/// exceeds 1e-10.
DensityOperator apply_channel(const DensityOperator &rho, const KrausChannel &ch);

/// Embed a channel acting on one factor as identity on all other factors.
KrausChannel lift_channel(const KrausChannel &ch, const std::string &target_label,
                          const HilbertSpace &space);

}  // namespace mzphase
