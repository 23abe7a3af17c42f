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

#include "gsr/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gsr {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

// Whitespace-delimited header token starting at pos; advances pos past
// the single whitespace byte that terminates it.
std::string next_token(const std::vector<uint8_t>& bytes, size_t& pos) {
    while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
    std::string tok;
    while (pos < bytes.size() && !std::isspace(bytes[pos]))
        tok.push_back(static_cast<char>(bytes[pos++]));
    if (pos < bytes.size()) ++pos;  // consume one terminating whitespace
    if (tok.empty()) fail("pfm: truncated header");
    return tok;
}

bool host_is_little_endian() {
    const uint16_t probe = 1;
    uint8_t b;
    std::memcpy(&b, &probe, 1);
    return b == 1;
}

}  // namespace

AttributeImage read_pfm(const std::vector<uint8_t>& bytes) {
    size_t pos = 0;
    const std::string magic = next_token(bytes, pos);
    int channels;
    if (magic == "PF")
        channels = 3;
    else if (magic == "Pf")
        channels = 1;
    else
        fail("pfm: bad magic \"" + magic + "\"");

    int width = 0, height = 0;
    double scale = 0.0;
    try {
        width = std::stoi(next_token(bytes, pos));
        height = std::stoi(next_token(bytes, pos));
        scale = std::stod(next_token(bytes, pos));
    } catch (const std::exception&) {
        fail("pfm: malformed header numbers");
    }
    if (width <= 0 || height <= 0) fail("pfm: non-positive dimensions");
    if (scale == 0.0) fail("pfm: zero scale");

    const size_t n = static_cast<size_t>(width) * height * channels;
    if (bytes.size() - pos < n * 4) fail("pfm: truncated payload");

    const bool file_little = scale < 0.0;
    const bool swap = file_little != host_is_little_endian();
    AttributeImage img(width, height, channels);
    // rows are stored bottom to top
    for (int y = 0; y < height; ++y) {
        const size_t src_row = pos + static_cast<size_t>(height - 1 - y) *
                                         width * channels * 4;
        for (size_t i = 0; i < static_cast<size_t>(width) * channels; ++i) {
            uint8_t b[4];
            std::memcpy(b, bytes.data() + src_row + i * 4, 4);
            if (swap) {
                std::swap(b[0], b[3]);
                std::swap(b[1], b[2]);
            }
            float v;
            std::memcpy(&v, b, 4);
            img.data[static_cast<size_t>(y) * width * channels + i] = v;
        }
    }
    return img;
}

std::vector<uint8_t> write_pfm(const AttributeImage& img) {
    if (img.channels != 1 && img.channels != 3)
        fail("pfm: only 1- or 3-channel images");
    if (img.width <= 0 || img.height <= 0) fail("pfm: empty image");

    std::string header = (img.channels == 3 ? "PF\n" : "Pf\n");
    header += std::to_string(img.width) + " " + std::to_string(img.height) +
              "\n-1.0\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    const size_t row = static_cast<size_t>(img.width) * img.channels;
    const bool swap = !host_is_little_endian();
    for (int y = img.height - 1; y >= 0; --y) {
        for (size_t i = 0; i < row; ++i) {
            uint8_t b[4];
            std::memcpy(b, &img.data[static_cast<size_t>(y) * row + i], 4);
            if (swap) {
                std::swap(b[0], b[3]);
                std::swap(b[1], b[2]);
            }
            out.insert(out.end(), b, b + 4);
        }
    }
    return out;
}

AttributeImage read_pfm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return read_pfm(bytes);
}

void write_pfm_file(const std::string& path, const AttributeImage& img) {
    const auto bytes = write_pfm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail("short write to " + path);
}

std::vector<uint8_t> tonemap(const AttributeImage& img) {
    std::vector<uint8_t> out(img.data.size());
    for (size_t i = 0; i < img.data.size(); ++i) {
        const double v =
            std::min(1.0, std::max(0.0, static_cast<double>(img.data[i])));
        out[i] = static_cast<uint8_t>(
            std::lround(255.0 * std::pow(v, 1.0 / 2.2)));
    }
    return out;
}

void write_png_file(const std::string& path, const AttributeImage& img) {
    if (img.channels != 1 && img.channels != 3)
        fail("png: only 1- or 3-channel images");
    const auto pixels = tonemap(img);

    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) fail("cannot open " + path + " for writing");
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info || setjmp(png_jmpbuf(png))) {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        std::fclose(fp);
        fail("png: write failed for " + path);
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const size_t stride = static_cast<size_t>(img.width) * img.channels;
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(pixels.data() + y * stride));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace gsr
