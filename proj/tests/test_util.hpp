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

#ifndef GSR_TEST_UTIL_HPP
#define GSR_TEST_UTIL_HPP

#include <random>

#include "gsr/types.hpp"

namespace gsr::test {

inline Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

inline Quat random_rotation(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Quat q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    while (q.norm() < 1e-6)
        q = Quat(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    return q.normalized();
}

inline GaussianPoint random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    GaussianPoint g;
    g.position = Vec3(uni(rng) * 4.0 - 2.0, uni(rng) * 4.0 - 2.0,
                      uni(rng) * 4.0 - 2.0);
    g.rotation = random_rotation(rng);
    g.scale = Vec3(0.05 + uni(rng), 0.05 + uni(rng), 0.05 + uni(rng));
    g.opacity = uni(rng);
    g.normal = random_unit(rng);
    g.albedo = Vec3(uni(rng), uni(rng), uni(rng));
    g.roughness = uni(rng);
    for (int i = 0; i < SHCoeffs::kCount; ++i) {
        g.visibility[i] = uni(rng) * 2.0 - 1.0;
        for (auto& ch : g.indirect) ch[i] = uni(rng) * 2.0 - 1.0;
    }
    return g;
}

inline GaussianScene random_scene(std::mt19937& rng, int count) {
    GaussianScene scene;
    for (int i = 0; i < count; ++i) scene.points.push_back(random_point(rng));
    scene.recompute_bbox();
    return scene;
}

}  // namespace gsr::test

#endif  // GSR_TEST_UTIL_HPP
