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

#include "gsr/demo.hpp"

#include <cmath>

namespace gsr {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.7724538509055160273;

void add_sphere(GaussianScene& scene, const Vec3& center, double radius,
                int count) {
    // splat disc sized so the shells roughly tile the sphere surface
    const double disc = 1.2 * 2.0 * radius / std::sqrt(static_cast<double>(count));
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double y = 1.0 - 2.0 * (i + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
        const double phi = golden * i;
        const Vec3 dir(r * std::cos(phi), y, r * std::sin(phi));

        GaussianPoint g;
        g.position = center + radius * dir;
        g.normal = dir;
        g.rotation = Quat::FromTwoVectors(Vec3::UnitZ(), dir).normalized();
        g.scale = Vec3(disc, disc, 0.2 * disc);
        g.opacity = 0.9;
        g.albedo = Vec3(0.75, 0.72, 0.66);
        g.roughness = 0.7;
        g.visibility[0] = 2.0 * kSqrtPi;  // unoccluded until baked
        scene.points.push_back(g);
    }
}

}  // namespace

GaussianScene make_two_sphere_scene(int points_per_sphere) {
    GaussianScene scene;
    scene.points.reserve(static_cast<size_t>(points_per_sphere) * 2);
    add_sphere(scene, Vec3(0.0, 0.0, 0.0), 1.0, points_per_sphere);
    add_sphere(scene, Vec3(0.0, 2.0, 0.0), 1.0, points_per_sphere);
    scene.recompute_bbox();
    return scene;
}

EnvMap make_demo_env(int width, int height) {
    EnvMap env(width, height);
    const Vec3 sky(0.9, 0.95, 1.1);
    const Vec3 ground(0.15, 0.15, 0.18);
    for (int v = 0; v < height; ++v)
        for (int u = 0; u < width; ++u) {
            const Vec3 d = pixel_to_dir(u, v, width, height);
            const double a = 0.5 * (d.y() + 1.0);
            env.set_texel(u, v, a * sky + (1.0 - a) * ground);
        }
    return env;
}

Camera make_demo_camera(int width, int height) {
    Camera cam;
    cam.width = width;
    cam.height = height;
    cam.fx = cam.fy = 600.0 * width / 512.0;
    cam.cx = 0.5 * width;
    cam.cy = 0.5 * height;
    // at (0, 1, 6) on the +Z side, looking along -Z at the sphere stack
    cam.R = Vec3(1.0, -1.0, -1.0).asDiagonal();
    cam.t = Vec3(0.0, 1.0, 6.0);
    return cam;
}

}  // namespace gsr
