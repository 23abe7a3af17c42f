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

#ifndef GSR_SCENE_IO_HPP
#define GSR_SCENE_IO_HPP

#include <string>

#include "gsr/types.hpp"

namespace gsr {

// Scene text format ("gsc 1"):
//   line 1: "gsc 1"
//   line 2: point count
//   then one record per line, 77 whitespace-separated numbers:
//   p(3) r(4, wxyz) s(3) alpha(1) n(3) a(3) gamma(1) v(16) l_ind(48, RGB-major)
//
// Quaternions and normals within 1e-3 of unit length are renormalized;
// anything further off is rejected.
GaussianScene parse_scene(const std::string& text);
std::string serialize_scene(const GaussianScene& scene);

// Camera text format: labeled lines, any order.
//   "fx fy cx cy" + 4 numbers
//   "R" + 9 numbers (row-major, world-to-camera)
//   "t" + 3 numbers
//   "size" + width height
Camera parse_camera(const std::string& text);
std::string serialize_camera(const Camera& cam);

// Throws std::runtime_error on invariant violations (used by the parsers
// and by the C API before handing scenes to numerical code).
void validate_point(const GaussianPoint& g);
void validate_camera(const Camera& cam);

}  // namespace gsr

#endif  // GSR_SCENE_IO_HPP
