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

#include <cmath>
#include <random>

#include "gsr/metrics.hpp"
#include "test_util.hpp"

using namespace gsr;

namespace {

AttributeImage constant_map(int w, int h, int c, float value) {
    AttributeImage img(w, h, c);
    for (float& f : img.data) f = value;
    return img;
}

AttributeImage random_map(std::mt19937& rng, int w, int h, int c) {
    std::uniform_real_distribution<float> uni(0.0f, 1.0f);
    AttributeImage img(w, h, c);
    for (float& f : img.data) f = uni(rng);
    return img;
}

}  // namespace

TEST_CASE("metrics: weighted depth loss, two-step fixed point") {
    const auto gt = constant_map(4, 4, 1, 0.0f);
    const std::vector<AttributeImage> preds = {
        constant_map(4, 4, 1, 1.0f),   // error 1.0, weight mu
        constant_map(4, 4, 1, 0.5f)};  // error 0.5, weight 1
    CHECK(depth_loss(preds, gt) == doctest::Approx(1.4).epsilon(1e-12));
    CHECK(depth_loss({gt}, gt) == 0.0);

    // a single prediction reduces to plain L1
    CHECK(depth_loss({preds[0]}, gt) == l1_loss(preds[0], gt));
}

TEST_CASE("metrics: depth loss is monotone in per-map error") {
    const auto gt = constant_map(4, 4, 1, 0.0f);
    const double lo = depth_loss({constant_map(4, 4, 1, 0.2f)}, gt);
    const double hi = depth_loss({constant_map(4, 4, 1, 0.3f)}, gt);
    CHECK(hi > lo);
}

TEST_CASE("metrics: smoothness loss vanishes on constants") {
    const auto flat = constant_map(8, 8, 3, 0.4f);
    const auto rough = constant_map(8, 8, 1, 0.7f);
    CHECK(smoothness_loss(flat, rough, flat) == 0.0);
}

TEST_CASE("metrics: aligned edges are suppressed by the bilateral weight") {
    // a step edge in the prediction costs less when the reference albedo
    // has the same edge
    AttributeImage albedo(2, 2, 1);
    albedo.at(1, 0, 0) = 1.0f;
    albedo.at(1, 1, 0) = 1.0f;
    const auto rough = constant_map(2, 2, 1, 0.5f);
    const auto flat_gt = constant_map(2, 2, 1, 0.5f);

    // only (0,0) is interior: horizontal difference 1, vertical 0
    const double with_edge = smoothness_loss(albedo, rough, albedo);
    const double with_flat = smoothness_loss(albedo, rough, flat_gt);
    CHECK(with_edge < with_flat);
    CHECK(with_edge == doctest::Approx(0.1 * std::exp(-1.0)).epsilon(1e-9));
    CHECK(with_flat == doctest::Approx(0.1).epsilon(1e-9));

    // doubling the albedo weight doubles the albedo term
    CHECK(smoothness_loss(albedo, rough, flat_gt, 0.2, 0.1) ==
          doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("metrics: the L1 record is zero on identical maps") {
    std::mt19937 rng(81);
    const auto a = random_map(rng, 6, 5, 3);
    const auto b = random_map(rng, 6, 5, 1);
    const auto losses = l1_losses(a, a, b, b, a, a, a, a, a, a);
    CHECK(losses.albedo == 0.0);
    CHECK(losses.ao == 0.0);
    CHECK(losses.direct == 0.0);
    CHECK(losses.indirect == 0.0);
    CHECK(losses.pbr == 0.0);
}

TEST_CASE("metrics: constant offset shows up as its own L1") {
    const auto gt = constant_map(5, 5, 3, 0.5f);
    const auto pred = constant_map(5, 5, 3, 0.75f);
    CHECK(l1_loss(pred, gt) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("metrics: masked L1 against the per-pixel loop oracle") {
    std::mt19937 rng(82);
    auto pred = random_map(rng, 9, 7, 3);
    auto gt = random_map(rng, 9, 7, 3);
    std::bernoulli_distribution coin(0.7);
    gt.mask.assign(63, 0);
    for (auto& m : gt.mask) m = coin(rng) ? 1 : 0;

    double sum = 0.0;
    size_t count = 0;
    for (int y = 0; y < 7; ++y)
        for (int x = 0; x < 9; ++x) {
            if (!gt.foreground(x, y)) continue;
            for (int c = 0; c < 3; ++c)
                sum += std::abs(
                    static_cast<double>(pred.at(x, y, c)) - gt.at(x, y, c));
            ++count;
        }
    CHECK(l1_loss(pred, gt) ==
          doctest::Approx(sum / (3.0 * static_cast<double>(count)))
              .epsilon(1e-12));

    gt.mask.assign(63, 0);
    CHECK_THROWS_AS(l1_loss(pred, gt), std::runtime_error);
}

TEST_CASE("metrics: psnr fixed points") {
    const auto gt = constant_map(8, 8, 3, 0.25f);
    const auto pred = constant_map(8, 8, 3, 0.35f);  // MSE ~ 0.01
    CHECK(psnr(pred, gt) == doctest::Approx(20.0).epsilon(1e-5));
    CHECK(psnr(gt, gt) == 99.0);

    const auto worse = constant_map(8, 8, 3, 0.45f);
    CHECK(psnr(worse, gt) < psnr(pred, gt));
}

TEST_CASE("metrics: mean angular error of normal maps") {
    auto up = constant_map(4, 4, 3, 0.0f);
    auto down = up;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
            up.at(x, y, 2) = 1.0f;
            down.at(x, y, 2) = -1.0f;
        }
    CHECK(mae_normals(up, up) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mae_normals(down, up) == doctest::Approx(180.0).epsilon(1e-9));

    auto tilted = up;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
            tilted.at(x, y, 0) = std::sqrt(0.5f);
            tilted.at(x, y, 2) = std::sqrt(0.5f);
        }
    CHECK(mae_normals(tilted, up) == doctest::Approx(45.0).epsilon(1e-5));
}

TEST_CASE("metrics: shape mismatches rejected") {
    const auto a = constant_map(4, 4, 3, 0.0f);
    const auto b = constant_map(5, 4, 3, 0.0f);
    CHECK_THROWS_AS(l1_loss(a, b), std::runtime_error);
    CHECK_THROWS_AS(psnr(a, b), std::runtime_error);
    CHECK_THROWS_AS(depth_loss({a}, b), std::runtime_error);
}
