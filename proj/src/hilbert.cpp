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

#include "mzphase/hilbert.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace mzphase {

namespace {
constexpr long kMaxTotalDim = 1 << 20;
}

HilbertSpace::HilbertSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::set<std::string> seen;
    long total = 1;
    for (const auto &f : factors_) {
        if (f.dim <= 0) {
            throw std::invalid_argument("HilbertSpace: factor '" + f.label +
                                        "' has non-positive dimension");
        }
        if (!seen.insert(f.label).second) {
            throw std::invalid_argument("HilbertSpace: duplicate factor label '" + f.label + "'");
        }
        total *= f.dim;
        if (total > kMaxTotalDim) {
            throw std::invalid_argument("HilbertSpace: total dimension exceeds 2^20");
        }
    }
    total_dim_ = static_cast<int>(total);
}

int HilbertSpace::position_of(const std::string &label) const {
    for (int i = 0; i < factor_count(); ++i) {
        if (factors_[i].label == label) {
            return i;
        }
    }
    throw std::invalid_argument("HilbertSpace: unknown factor label '" + label + "'");
}

bool HilbertSpace::has_label(const std::string &label) const {
    for (const auto &f : factors_) {
        if (f.label == label) {
            return true;
        }
    }
    return false;
}

int HilbertSpace::dim_before(int pos) const {
    int d = 1;
    for (int i = 0; i < pos; ++i) {
        d *= factors_[i].dim;
    }
    return d;
}

int HilbertSpace::dim_after(int pos) const {
    int d = 1;
    for (int i = pos + 1; i < factor_count(); ++i) {
        d *= factors_[i].dim;
    }
    return d;
}

int HilbertSpace::flat_index(const std::vector<int> &multi) const {
    if (static_cast<int>(multi.size()) != factor_count()) {
        throw std::invalid_argument("HilbertSpace: multi-index arity mismatch");
    }
    int flat = 0;
    for (int i = 0; i < factor_count(); ++i) {
        if (multi[i] < 0 || multi[i] >= factors_[i].dim) {
            throw std::invalid_argument("HilbertSpace: multi-index out of range");
        }
        flat = flat * factors_[i].dim + multi[i];
    }
    return flat;
}

std::vector<int> HilbertSpace::multi_index(int flat) const {
    if (flat < 0 || flat >= total_dim_) {
        throw std::invalid_argument("HilbertSpace: flat index out of range");
    }
    std::vector<int> multi(factor_count());
    for (int i = factor_count() - 1; i >= 0; --i) {
        multi[i] = flat % factors_[i].dim;
        flat /= factors_[i].dim;
    }
    return multi;
}

HilbertSpace HilbertSpace::tensor(const HilbertSpace &rhs) const {
    std::vector<Factor> all = factors_;
    all.insert(all.end(), rhs.factors_.begin(), rhs.factors_.end());
    return HilbertSpace(std::move(all));  // re-validates labels and size
}

bool HilbertSpace::operator==(const HilbertSpace &rhs) const {
    if (factor_count() != rhs.factor_count()) {
        return false;
    }
    for (int i = 0; i < factor_count(); ++i) {
        if (factors_[i].label != rhs.factors_[i].label || factors_[i].dim != rhs.factors_[i].dim) {
            return false;
        }
    }
    return true;
}

std::string HilbertSpace::describe() const {
    std::ostringstream os;
    for (int i = 0; i < factor_count(); ++i) {
        if (i) {
            os << " x ";
        }
        os << factors_[i].label << "(" << factors_[i].dim << ")";
    }
    return os.str();
}

}  // namespace mzphase
