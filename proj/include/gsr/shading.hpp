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

#ifndef GSR_SHADING_HPP
#define GSR_SHADING_HPP

#include "gsr/brdf.hpp"
#include "gsr/envlight.hpp"
#include "gsr/types.hpp"

namespace gsr {

enum class ShadowMode { kSoft, kHard };

struct ShadingConfig {
    int sample_count = 40;
    uint64_t seed = 0;
    ShadowMode shadow_mode = ShadowMode::kSoft;
    double hard_threshold = 0.5;  // visibility binarization cut
    bool diffuse_only = false;
    BrdfConfig brdf;
};

// Deterministic cosine-weighted hemisphere samples around n
// (seed-scrambled Hammersley). pdf = (dir.n)/pi, all dir.n > 0.
std::vector<std::pair<Vec3, double>> sample_hemisphere(const Vec3& n,
                                                       int count,
                                                       uint64_t seed);

// Monte-Carlo outgoing radiance of one Gaussian toward the camera:
//   C = (pi/N) * sum_i L(w_i) * f(w_i, wo)
// with cosine-weighted w_i (the cosine factor cancels against the pdf),
// L composed from clamped SH visibility, the scaled prefiltered
// environment and SH indirect light. Hard shadow mode binarizes the
// visibility at cfg.hard_threshold before composition.
Vec3 shade_gaussian(const GaussianPoint& g, const Vec3& camera_center,
                    const EnvMap& prefiltered, double s_d,
                    const ShadingConfig& cfg);

// Geometric visibility baker: casts dir_count uniform-sphere rays from
// the point (offset by eps along its normal) against every other
// Gaussian's ellipsoid (axes k_sigma * s, opacity >= 0.5 counts as
// opaque) and projects the binary result to SH.
SHCoeffs bake_visibility(const GaussianScene& scene, size_t idx,
                         int dir_count, double k_sigma);

// Cosine-weighted hemisphere average of the clamped SH visibility about
// n, fixed 256-direction quadrature; in [0,1].
double ambient_occlusion(const SHCoeffs& visibility, const Vec3& n);

// One-bounce indirect baker: for occluded directions, the nearest hit
// Gaussian contributes its own diffuse, direct-only shade; the result is
// projected to SH per color channel. Visibility must be baked first.
std::array<SHCoeffs, 3> bake_indirect(const GaussianScene& scene, size_t idx,
                                      const EnvMap& prefiltered, double s_d,
                                      int dir_count, double k_sigma);

}  // namespace gsr

#endif  // GSR_SHADING_HPP
