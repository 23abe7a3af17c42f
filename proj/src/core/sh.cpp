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

#include "gsr/sh.hpp"

#include <cmath>
#include <stdexcept>

#include "gsr/envlight.hpp"

namespace gsr {

std::array<double, 16> sh_basis(const Vec3& dir) {
    if (std::abs(dir.norm() - 1.0) > 1e-6)
        throw std::runtime_error("sh_basis: direction is not unit length");
    const double x = dir.x(), y = dir.y(), z = dir.z();
    const double x2 = x * x, y2 = y * y, z2 = z * z;

    std::array<double, 16> sh;
    // band 0
    sh[0] = 0.28209479177387814;  // 1/(2 sqrt(pi))
    // band 1
    sh[1] = 0.4886025119029199 * y;
    sh[2] = 0.4886025119029199 * z;
    sh[3] = 0.4886025119029199 * x;
    // band 2
    sh[4] = 1.0925484305920792 * x * y;
    sh[5] = 1.0925484305920792 * y * z;
    sh[6] = 0.31539156525252005 * (3.0 * z2 - 1.0);
    sh[7] = 1.0925484305920792 * x * z;
    sh[8] = 0.5462742152960396 * (x2 - y2);
    // band 3
    sh[9] = 0.5900435899266435 * y * (3.0 * x2 - y2);
    sh[10] = 2.890611442640554 * x * y * z;
    sh[11] = 0.4570457994644658 * y * (5.0 * z2 - 1.0);
    sh[12] = 0.3731763325901154 * z * (5.0 * z2 - 3.0);
    sh[13] = 0.4570457994644658 * x * (5.0 * z2 - 1.0);
    sh[14] = 1.445305721320277 * z * (x2 - y2);
    sh[15] = 0.5900435899266435 * x * (x2 - 3.0 * y2);
    return sh;
}

double sh_eval(const SHCoeffs& c, const Vec3& dir, bool clamp01) {
    auto basis = sh_basis(dir);
    double v = 0.0;
    for (int i = 0; i < SHCoeffs::kCount; ++i) v += c[i] * basis[i];
    if (clamp01) v = std::min(1.0, std::max(0.0, v));
    return v;
}

SHCoeffs sh_project(int width, int height,
                    const std::function<double(const Vec3&)>& f) {
    if (width < 16 || height < 8)
        throw std::runtime_error("sh_project: grid must be at least 16x8");
    SHCoeffs c;
    for (int v = 0; v < height; ++v) {
        const double dw = texel_solid_angle(v, width, height);
        for (int u = 0; u < width; ++u) {
            const Vec3 d = pixel_to_dir(u, v, width, height);
            const double s = f(d);
            if (!std::isfinite(s))
                throw std::runtime_error("sh_project: non-finite sample");
            auto basis = sh_basis(d);
            const double w = s * dw;
            for (int i = 0; i < SHCoeffs::kCount; ++i) c[i] += w * basis[i];
        }
    }
    return c;
}

}  // namespace gsr
