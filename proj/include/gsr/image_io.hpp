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

#ifndef GSR_IMAGE_IO_HPP
#define GSR_IMAGE_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gsr/types.hpp"

namespace gsr {

// PFM: "PF" (RGB) / "Pf" (grayscale), width height, scale line, raw
// 32-bit float rows bottom to top. Writes are always little-endian
// (negative scale); reads accept either byte order.
AttributeImage read_pfm(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> write_pfm(const AttributeImage& img);

AttributeImage read_pfm_file(const std::string& path);
void write_pfm_file(const std::string& path, const AttributeImage& img);

// out = round(255 * clamp(v,0,1)^(1/2.2)), per channel.
std::vector<uint8_t> tonemap(const AttributeImage& img);
void write_png_file(const std::string& path, const AttributeImage& img);

}  // namespace gsr

#endif  // GSR_IMAGE_IO_HPP
