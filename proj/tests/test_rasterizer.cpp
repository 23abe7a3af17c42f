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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gsr/rasterizer.hpp"
#include "test_util.hpp"

using namespace gsr;

namespace {

Camera test_camera(double f, double c, int size) {
    Camera cam;
    cam.fx = cam.fy = f;
    cam.cx = cam.cy = c;
    cam.width = cam.height = size;
    return cam;
}

GaussianPoint on_axis_point(double z, double opacity, const Vec3& scale) {
    GaussianPoint g;
    g.position = Vec3(0.0, 0.0, z);
    g.scale = scale;
    g.opacity = opacity;
    return g;
}

GaussianScene frustum_scene(std::mt19937& rng, int count) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    GaussianScene scene;
    for (int i = 0; i < count; ++i) {
        GaussianPoint g;
        const double z = 3.0 + 5.0 * uni(rng);
        g.position = Vec3(0.9 * (uni(rng) - 0.5) * z, 0.9 * (uni(rng) - 0.5) * z, z);
        g.rotation = test::random_rotation(rng);
        g.scale = Vec3(0.05 + 0.25 * uni(rng), 0.05 + 0.25 * uni(rng),
                       0.05 + 0.25 * uni(rng));
        g.opacity = 0.05 + 0.95 * uni(rng);
        scene.points.push_back(g);
    }
    scene.recompute_bbox();
    return scene;
}

// Per-pixel all-splat blend, no footprint bounding boxes: the reference
// the production rasterizer must match.
AttributeImage brute_force(const GaussianScene& scene, const Camera& cam,
                           const std::vector<float>& values, int channels) {
    std::vector<Splat2D> splats;
    for (size_t i = 0; i < scene.points.size(); ++i) {
        auto s = project_gaussian(scene.points[i], cam);
        if (s) {
            s->index = i;
            splats.push_back(*s);
        }
    }
    std::sort(splats.begin(), splats.end(),
              [](const Splat2D& a, const Splat2D& b) {
                  if (a.view_depth != b.view_depth)
                      return a.view_depth < b.view_depth;
                  return a.index < b.index;
              });

    AttributeImage out(cam.width, cam.height, channels);
    for (int y = 0; y < cam.height; ++y)
        for (int x = 0; x < cam.width; ++x) {
            double t = 1.0;
            std::vector<double> acc(static_cast<size_t>(channels), 0.0);
            for (const auto& s : splats) {
                const Mat2 inv = s.cov2d.inverse();
                const Vec2 d(x - s.mean2d.x(), y - s.mean2d.y());
                const double q = d.dot(inv * d);
                if (q > 9.0) continue;
                const double alpha =
                    std::min(0.99, scene.points[s.index].opacity *
                                       std::exp(-0.5 * q));
                if (alpha < 1.0 / 255.0) continue;
                for (int c = 0; c < channels; ++c)
                    acc[static_cast<size_t>(c)] +=
                        alpha * t *
                        values[s.index * static_cast<size_t>(channels) +
                               static_cast<size_t>(c)];
                t *= 1.0 - alpha;
            }
            for (int c = 0; c < channels; ++c)
                out.at(x, y, c) = static_cast<float>(acc[static_cast<size_t>(c)]);
        }
    return out;
}

}  // namespace

TEST_CASE("rasterizer: on-axis isotropic projection") {
    const Camera cam = test_camera(100.0, 32.0, 64);
    const auto s = project_gaussian(on_axis_point(4.0, 1.0, Vec3(0.1, 0.1, 0.1)),
                                    cam);
    REQUIRE(s.has_value());
    const double expect = 100.0 * 0.1 / 4.0;  // fx * sigma / z, squared below
    CHECK(s->mean2d.x() == doctest::Approx(32.0).epsilon(1e-9));
    CHECK(s->mean2d.y() == doctest::Approx(32.0).epsilon(1e-9));
    CHECK(s->view_depth == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(s->cov2d(0, 0) - 0.3 ==
          doctest::Approx(expect * expect).epsilon(0.01));
    CHECK(s->cov2d(1, 1) - 0.3 ==
          doctest::Approx(expect * expect).epsilon(0.01));
    CHECK(std::abs(s->cov2d(0, 1)) <= 0.01 * expect * expect);
}

TEST_CASE("rasterizer: culling") {
    const Camera cam = test_camera(100.0, 32.0, 64);
    CHECK_FALSE(project_gaussian(on_axis_point(-4.0, 1.0, Vec3::Ones() * 0.1),
                                 cam)
                    .has_value());
    GaussianPoint off;  // projects far outside the 64x64 viewport
    off.position = Vec3(100.0, 0.0, 4.0);
    off.scale = Vec3(0.01, 0.01, 0.01);
    CHECK_FALSE(project_gaussian(off, cam).has_value());
}

TEST_CASE("rasterizer: mean2d is the pinhole projection") {
    std::mt19937 rng(71);
    const Camera cam = test_camera(60.0, 32.0, 64);
    const auto scene = frustum_scene(rng, 50);
    for (const auto& g : scene.points) {
        const auto s = project_gaussian(g, cam);
        if (!s) continue;
        const Vec3 xc = cam.to_camera(g.position);
        CHECK(s->mean2d.x() ==
              doctest::Approx(cam.fx * xc.x() / xc.z() + cam.cx).epsilon(1e-6));
        CHECK(s->mean2d.y() ==
              doctest::Approx(cam.fy * xc.y() / xc.z() + cam.cy).epsilon(1e-6));
    }
}

TEST_CASE("rasterizer: single splat blends to opacity times value") {
    const Camera cam = test_camera(16.0, 8.0, 16);
    GaussianScene scene;
    scene.points.push_back(on_axis_point(4.0, 0.7, Vec3(0.5, 0.5, 0.5)));
    const std::vector<float> values = {2.0f, 1.0f, 0.5f};

    const auto res = rasterize_values(scene, cam, values, 3);
    CHECK(res.image.at(8, 8, 0) == doctest::Approx(1.4).epsilon(1e-7));
    CHECK(res.image.at(8, 8, 1) == doctest::Approx(0.7).epsilon(1e-7));
    CHECK(res.image.at(8, 8, 2) == doctest::Approx(0.35).epsilon(1e-7));
    CHECK(res.alpha.at(8, 8, 0) == doctest::Approx(0.7).epsilon(1e-7));
}

TEST_CASE("rasterizer: two overlapping splats blend front to back") {
    const Camera cam = test_camera(16.0, 8.0, 16);
    GaussianScene scene;
    scene.points.push_back(on_axis_point(4.0, 0.6, Vec3(0.5, 0.5, 0.5)));
    scene.points.push_back(on_axis_point(8.0, 0.8, Vec3(1.0, 1.0, 1.0)));
    const std::vector<float> values = {1.0f, 0.25f};

    const auto res = rasterize_values(scene, cam, values, 1);
    const double expect = 0.6 * 1.0 + (1.0 - 0.6) * 0.8 * 0.25;
    CHECK(res.image.at(8, 8, 0) == doctest::Approx(expect).epsilon(1e-7));
    const double ea = 1.0 - (1.0 - 0.6) * (1.0 - 0.8);
    CHECK(res.alpha.at(8, 8, 0) == doctest::Approx(ea).epsilon(1e-7));

    // reversing the order must not change the depth-sorted result
    GaussianScene flipped;
    flipped.points.push_back(scene.points[1]);
    flipped.points.push_back(scene.points[0]);
    const std::vector<float> fvalues = {0.25f, 1.0f};
    const auto res2 = rasterize_values(flipped, cam, fvalues, 1);
    CHECK(res2.image.at(8, 8, 0) == res.image.at(8, 8, 0));
}

TEST_CASE("rasterizer: matches the brute-force per-pixel oracle") {
    std::mt19937 rng(72);
    const Camera cam = test_camera(60.0, 32.0, 64);
    const auto scene = frustum_scene(rng, 100);
    std::uniform_real_distribution<float> uni(0.0f, 1.0f);
    std::vector<float> values(scene.points.size() * 3);
    for (float& v : values) v = uni(rng);

    const auto res = rasterize_values(scene, cam, values, 3);
    const auto ref = brute_force(scene, cam, values, 3);
    for (size_t i = 0; i < ref.data.size(); ++i)
        CHECK(std::abs(res.image.data[i] - ref.data[i]) <= 1e-5);
}

TEST_CASE("rasterizer: permutation invariance with tie-free depths") {
    std::mt19937 rng(73);
    const Camera cam = test_camera(60.0, 32.0, 64);
    auto scene = frustum_scene(rng, 60);
    for (size_t i = 0; i < scene.points.size(); ++i)
        scene.points[i].position.z() = 3.0 + 0.05 * static_cast<double>(i);
    std::vector<float> values(scene.points.size() * 3);
    std::uniform_real_distribution<float> uni(0.0f, 1.0f);
    for (float& v : values) v = uni(rng);

    const auto base = rasterize_values(scene, cam, values, 3);

    std::vector<size_t> perm(scene.points.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    GaussianScene shuffled;
    std::vector<float> svalues(values.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        shuffled.points.push_back(scene.points[perm[i]]);
        for (int c = 0; c < 3; ++c)
            svalues[i * 3 + static_cast<size_t>(c)] =
                values[perm[i] * 3 + static_cast<size_t>(c)];
    }
    const auto got = rasterize_values(shuffled, cam, svalues, 3);
    CHECK(got.image.data == base.image.data);
    CHECK(got.alpha.data == base.alpha.data);
}

TEST_CASE("rasterizer: alpha bounds and weight sum") {
    std::mt19937 rng(74);
    const Camera cam = test_camera(60.0, 32.0, 64);
    const auto scene = frustum_scene(rng, 80);
    const std::vector<float> ones(scene.points.size(), 1.0f);

    const auto res = rasterize_values(scene, cam, ones, 1);
    for (size_t i = 0; i < res.alpha.data.size(); ++i) {
        CHECK(res.alpha.data[i] >= 0.0f);
        CHECK(res.alpha.data[i] <= 1.0f);
        // blending a constant 1 accumulates exactly the weight sum
        CHECK(std::abs(res.image.data[i] - res.alpha.data[i]) <= 1e-6);
    }
}

TEST_CASE("rasterizer: channel widths and value validation") {
    CHECK(channel_count(Channel::kAo) == 1);
    CHECK(channel_count(Channel::kRoughness) == 1);
    CHECK(channel_count(Channel::kPbr) == 3);

    GaussianScene scene;
    scene.points.push_back(on_axis_point(4.0, 1.0, Vec3::Ones()));
    const Camera cam = test_camera(16.0, 8.0, 16);
    CHECK_THROWS_AS(rasterize_values(scene, cam, {1.0f, 2.0f}, 3),
                    std::runtime_error);
    ShadingConfig cfg;
    CHECK_THROWS_AS(
        gaussian_channel_values(scene, cam, Channel::kPbr, nullptr, 1.0, cfg),
        std::runtime_error);
}
