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

#include "gsr/brdf.hpp"

#include <cmath>
#include <stdexcept>

namespace gsr {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Vec3 brdf_eval(const Vec3& wi, const Vec3& wo, const Vec3& n,
               const Vec3& albedo, double roughness, BrdfMode mode,
               const BrdfConfig& cfg) {
    const double mu_i = wi.dot(n);
    const double mu_o = wo.dot(n);
    if (!(mu_i > 0.0) || !(mu_o > 0.0))
        throw std::runtime_error("brdf_eval: backfacing direction");
    if (!(roughness >= 0.0 && roughness <= 1.0))
        throw std::runtime_error("brdf_eval: roughness outside [0,1]");

    Vec3 f = albedo / kPi;
    if (mode == BrdfMode::kDiffuseOnly) return f;

    const Vec3 h = (wi + wo).normalized();
    const double nh = std::max(0.0, n.dot(h));
    const double oh = std::max(0.0, wo.dot(h));
    const double alpha = roughness * roughness;
    const double a2 = alpha * alpha;

    // GGX normal distribution
    const double denom = nh * nh * (a2 - 1.0) + 1.0;
    const double D = a2 / (kPi * denom * denom);
    // Schlick Fresnel, scalar F0
    const double F =
        cfg.f0 + (1.0 - cfg.f0) * std::pow(1.0 - oh, 5.0);
    // Height-correlated Smith, normalized so G(mu_i=mu_o=1) = 1
    const double li = mu_o * std::sqrt(a2 + (1.0 - a2) * mu_i * mu_i);
    const double lo = mu_i * std::sqrt(a2 + (1.0 - a2) * mu_o * mu_o);
    const double G = (li + lo > 0.0) ? 2.0 * mu_i * mu_o / (li + lo) : 0.0;

    double spec_denom = mu_i * mu_o;
    if (cfg.conventional_specular) spec_denom *= 4.0;
    const double fs = D * F * G / spec_denom;
    return f + Vec3(fs, fs, fs);
}

Vec3 material_albedo(const Vec3& image_rgb, const Vec3& residual) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        const double x = image_rgb[i] + residual[i];
        if (!std::isfinite(x))
            throw std::runtime_error("material_albedo: non-finite input");
        out[i] = 1.0 / (1.0 + std::exp(-x));
    }
    return out;
}

}  // namespace gsr
