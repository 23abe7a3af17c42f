/*
 * Copyright (C) 2026 The gsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GSR_SH_HPP
#define GSR_SH_HPP

#include <functional>

#include "gsr/types.hpp"

namespace gsr {

// Real spherical harmonics, bands 0..3, graphics normalization (no
// Condon-Shortley phase): Y_{0,0} = 0.282095, Y_{1,0}(z-pole) = 0.488603.
// Coefficient ordering matches SHCoeffs: (0,0),(1,-1),(1,0),(1,1),(2,-2),...

// Evaluate all 16 basis functions at a unit direction.
// Throws if |dir| deviates from 1 by more than 1e-6.
std::array<double, 16> sh_basis(const Vec3& dir);

// Sum c_lm * Y_lm(dir). With clamp01, the result is clipped to [0,1]
// (visibility semantics; SH ringing otherwise escapes the physical range).
double sh_eval(const SHCoeffs& c, const Vec3& dir, bool clamp01 = false);

// Project a scalar function on the sphere onto the 16 coefficients using
// midpoint quadrature on a W x H equirectangular grid:
//   c_lm = sum_pixels f(d) * Y_lm(d) * sin(theta) * (pi/H) * (2pi/W)
// Requires W >= 16, H >= 8; rejects non-finite samples.
SHCoeffs sh_project(int width, int height,
                    const std::function<double(const Vec3&)>& f);

}  // namespace gsr

#endif  // GSR_SH_HPP
