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

#include "gsr/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace gsr {

namespace {

constexpr double kRadToDeg = 57.29577951308232;

void check_shapes(const AttributeImage& a, const AttributeImage& b,
                  const char* who) {
    if (a.width != b.width || a.height != b.height ||
        a.channels != b.channels)
        throw std::runtime_error(std::string(who) + ": shape mismatch");
}

// Masked mean |a - b| using the gt mask (full frame without one).
double masked_l1(const AttributeImage& pred, const AttributeImage& gt) {
    double sum = 0.0;
    size_t count = 0;
    for (int y = 0; y < gt.height; ++y)
        for (int x = 0; x < gt.width; ++x) {
            if (!gt.foreground(x, y) || !pred.foreground(x, y)) continue;
            for (int c = 0; c < gt.channels; ++c)
                sum += std::abs(static_cast<double>(pred.at(x, y, c)) -
                                gt.at(x, y, c));
            ++count;
        }
    if (count == 0) throw std::runtime_error("l1: empty mask");
    return sum / (static_cast<double>(count) * gt.channels);
}

}  // namespace

double depth_loss(const std::vector<AttributeImage>& preds,
                  const AttributeImage& gt, double mu) {
    if (preds.empty()) throw std::runtime_error("depth_loss: empty sequence");
    double loss = 0.0;
    const size_t n = preds.size();
    for (size_t i = 0; i < n; ++i) {
        check_shapes(preds[i], gt, "depth_loss");
        loss += std::pow(mu, static_cast<double>(n - 1 - i)) *
                masked_l1(preds[i], gt);
    }
    return loss;
}

double smoothness_loss(const AttributeImage& albedo,
                       const AttributeImage& rough,
                       const AttributeImage& gt_albedo, double lambda_albedo,
                       double lambda_rough) {
    check_shapes(albedo, gt_albedo, "smoothness_loss");
    if (rough.width != albedo.width || rough.height != albedo.height)
        throw std::runtime_error("smoothness_loss: shape mismatch");

    auto grad_l1 = [](const AttributeImage& img, int x, int y) {
        double g = 0.0;
        for (int c = 0; c < img.channels; ++c) {
            g += std::abs(static_cast<double>(img.at(x + 1, y, c)) -
                          img.at(x, y, c));
            g += std::abs(static_cast<double>(img.at(x, y + 1, c)) -
                          img.at(x, y, c));
        }
        return g;
    };

    double sum = 0.0;
    size_t count = 0;
    // forward differences; last row/column excluded
    for (int y = 0; y + 1 < albedo.height; ++y)
        for (int x = 0; x + 1 < albedo.width; ++x) {
            const double edge = std::exp(-grad_l1(gt_albedo, x, y));
            sum += lambda_albedo * grad_l1(albedo, x, y) * edge;
            sum += lambda_rough * grad_l1(rough, x, y) * edge;
            ++count;
        }
    return count ? sum / static_cast<double>(count) : 0.0;
}

double l1_loss(const AttributeImage& pred, const AttributeImage& gt) {
    check_shapes(pred, gt, "l1_loss");
    return masked_l1(pred, gt);
}

LightTransportLosses l1_losses(const AttributeImage& albedo_pred,
                               const AttributeImage& albedo_gt,
                               const AttributeImage& ao_pred,
                               const AttributeImage& ao_gt,
                               const AttributeImage& direct_pred,
                               const AttributeImage& direct_gt,
                               const AttributeImage& indirect_pred,
                               const AttributeImage& indirect_gt,
                               const AttributeImage& pbr_pred,
                               const AttributeImage& pbr_gt) {
    LightTransportLosses out;
    out.albedo = l1_loss(albedo_pred, albedo_gt);
    out.ao = l1_loss(ao_pred, ao_gt);
    out.direct = l1_loss(direct_pred, direct_gt);
    out.indirect = l1_loss(indirect_pred, indirect_gt);
    out.pbr = l1_loss(pbr_pred, pbr_gt);
    return out;
}

double psnr(const AttributeImage& pred, const AttributeImage& gt,
            double peak) {
    check_shapes(pred, gt, "psnr");
    double mse = 0.0;
    size_t count = 0;
    for (int y = 0; y < gt.height; ++y)
        for (int x = 0; x < gt.width; ++x) {
            if (!gt.foreground(x, y) || !pred.foreground(x, y)) continue;
            for (int c = 0; c < gt.channels; ++c) {
                const double d = static_cast<double>(pred.at(x, y, c)) -
                                 gt.at(x, y, c);
                mse += d * d;
            }
            ++count;
        }
    if (count == 0) throw std::runtime_error("psnr: empty mask");
    mse /= static_cast<double>(count) * gt.channels;
    if (mse < 1e-12) return 99.0;
    return 10.0 * std::log10(peak * peak / mse);
}

double mae_normals(const AttributeImage& pred, const AttributeImage& gt) {
    check_shapes(pred, gt, "mae_normals");
    if (gt.channels != 3)
        throw std::runtime_error("mae_normals: expected 3 channels");
    double sum = 0.0;
    size_t count = 0;
    for (int y = 0; y < gt.height; ++y)
        for (int x = 0; x < gt.width; ++x) {
            if (!gt.foreground(x, y) || !pred.foreground(x, y)) continue;
            double dot = 0.0;
            for (int c = 0; c < 3; ++c)
                dot += static_cast<double>(pred.at(x, y, c)) * gt.at(x, y, c);
            dot = std::min(1.0, std::max(-1.0, dot));
            sum += std::acos(dot) * kRadToDeg;
            ++count;
        }
    if (count == 0) throw std::runtime_error("mae_normals: empty mask");
    return sum / static_cast<double>(count);
}

}  // namespace gsr
