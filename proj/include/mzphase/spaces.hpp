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

#include "mzphase/hilbert.hpp"

namespace mzphase {

// Canonical basis ordering, fixed globally: photon 1 before photon 2,
// path before polarization within each photon; path basis (u, l),
// polarization basis (H, V).
inline constexpr int kUpper = 0;
inline constexpr int kLower = 1;
inline constexpr int kPolH = 0;
inline constexpr int kPolV = 1;

namespace labels {
inline const char *kPath1 = "path1";
inline const char *kPol1 = "pol1";
inline const char *kPath2 = "path2";
inline const char *kPol2 = "pol2";
}  // namespace labels

/// (path1, path2), dim 4.
const HilbertSpace &two_photon_path_space();

/// (path1, pol1, path2, pol2), dim 16.
const HilbertSpace &two_photon_full_space();

inline int flat4(int path1, int path2) { return path1 * 2 + path2; }

inline int flat16(int path1, int pol1, int path2, int pol2) {
    return ((path1 * 2 + pol1) * 2 + path2) * 2 + pol2;
}

/// Number of photons in the upper arm for a flat 16-dim basis index.
inline int upper_count16(int flat) {
    return ((flat >> 3) & 1 ? 0 : 1) + ((flat >> 1) & 1 ? 0 : 1);
}

/// Same for the 4-dim path-only space.
inline int upper_count4(int flat) {
    return ((flat >> 1) & 1 ? 0 : 1) + (flat & 1 ? 0 : 1);
}

}  // namespace mzphase
