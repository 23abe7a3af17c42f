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

#ifndef GSR_METRICS_HPP
#define GSR_METRICS_HPP

#include "gsr/types.hpp"

namespace gsr {

// Weighted L1 over an ordered prediction sequence:
//   sum_i mu^(N-i) * masked mean |d_i - gt|
double depth_loss(const std::vector<AttributeImage>& preds,
                  const AttributeImage& gt, double mu = 0.9);

// Bilateral smoothness: mean over interior pixels of
//   l_albedo * |grad A|_1 * exp(-|grad A_gt|_1)
// + l_rough  * |grad G|_1 * exp(-|grad A_gt|_1)
// Gradients are forward differences; the last row/column is excluded.
double smoothness_loss(const AttributeImage& albedo,
                       const AttributeImage& rough,
                       const AttributeImage& gt_albedo,
                       double lambda_albedo = 0.1, double lambda_rough = 0.1);

// Masked mean absolute error between two maps of identical shape.
double l1_loss(const AttributeImage& pred, const AttributeImage& gt);

struct LightTransportLosses {
    double albedo = 0.0;
    double ao = 0.0;
    double direct = 0.0;
    double indirect = 0.0;
    double pbr = 0.0;
};

LightTransportLosses l1_losses(const AttributeImage& albedo_pred,
                               const AttributeImage& albedo_gt,
                               const AttributeImage& ao_pred,
                               const AttributeImage& ao_gt,
                               const AttributeImage& direct_pred,
                               const AttributeImage& direct_gt,
                               const AttributeImage& indirect_pred,
                               const AttributeImage& indirect_gt,
                               const AttributeImage& pbr_pred,
                               const AttributeImage& pbr_gt);

// 10 log10(peak^2 / MSE), capped at 99 dB when MSE < 1e-12.
double psnr(const AttributeImage& pred, const AttributeImage& gt,
            double peak = 1.0);

// Masked mean angular error between unit-normal maps, in degrees.
double mae_normals(const AttributeImage& pred, const AttributeImage& gt);

}  // namespace gsr

#endif  // GSR_METRICS_HPP
