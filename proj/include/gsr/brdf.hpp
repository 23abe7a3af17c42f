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

#ifndef GSR_BRDF_HPP
#define GSR_BRDF_HPP

#include "gsr/types.hpp"

namespace gsr {

enum class BrdfMode { kFull, kDiffuseOnly };

struct BrdfConfig {
    // Specular denominator (wi.n)(wo.n) by default. Set this to use the
    // conventional microfacet 4(wi.n)(wo.n) instead.
    bool conventional_specular = false;
    double f0 = 0.04;  // Schlick Fresnel reflectance at normal incidence
};

// Simplified Disney-family BRDF:
//   f = a/pi + D(h) * F(wo,h) * G(wi,wo) / ((wi.n)(wo.n))
// D = GGX with alpha = roughness^2, F = Schlick, G = height-correlated
// Smith. The half vector is normalize(wi + wo). Both directions must be
// on the upper hemisphere of n.
Vec3 brdf_eval(const Vec3& wi, const Vec3& wo, const Vec3& n,
               const Vec3& albedo, double roughness,
               BrdfMode mode = BrdfMode::kFull, const BrdfConfig& cfg = {});

// A = sigmoid(I + dA), componentwise.
Vec3 material_albedo(const Vec3& image_rgb, const Vec3& residual);

}  // namespace gsr

#endif  // GSR_BRDF_HPP
