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

namespace mzphase {

/// One tensor factor of a composite Hilbert space.
struct Factor {
    std::string label;
    int dim = 0;
};

/// Ordered list of labeled tensor factors with a row-major flat index map.
///
/// Factor labels are unique. Flat indices run row-major in factor order:
/// the first factor varies slowest.
class HilbertSpace {
  public:
    HilbertSpace() = default;
    explicit HilbertSpace(std::vector<Factor> factors);

    int total_dim() const { return total_dim_; }
    const std::vector<Factor> &factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }

    /// Position of the factor with the given label; throws if unknown.
    int position_of(const std::string &label) const;
    bool has_label(const std::string &label) const;

    /// Product of factor dims strictly before / after `pos`.
    int dim_before(int pos) const;
    int dim_after(int pos) const;

    int flat_index(const std::vector<int> &multi) const;
    std::vector<int> multi_index(int flat) const;

    /// Concatenation of factor lists. Rejects duplicate labels and
    /// total dimensions above 2^20.
    HilbertSpace tensor(const HilbertSpace &rhs) const;

    bool operator==(const HilbertSpace &rhs) const;
    bool operator!=(const HilbertSpace &rhs) const { return !(*this == rhs); }

    std::string describe() const;

  private:
    std::vector<Factor> factors_;
    int total_dim_ = 1;
};

}  // namespace mzphase
