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

#include "gsr/sh.hpp"
#include "test_util.hpp"

using namespace gsr;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Independent oracle: associated-Legendre recurrence (graphics sign
// convention, no Condon-Shortley phase) with explicit normalization.
double legendre(int l, int m, double x) {
    double pmm = 1.0;
    if (m > 0) {
        const double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + m - 1.0) * pmm) /
              (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double sh_oracle(int l, int m, const Vec3& d) {
    const double ct = d.z();
    const double phi = std::atan2(d.y(), d.x());
    const int am = std::abs(m);
    const double k = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) *
                               factorial(l - am) / factorial(l + am));
    if (m == 0) return k * legendre(l, 0, ct);
    if (m > 0)
        return std::sqrt(2.0) * k * std::cos(am * phi) * legendre(l, am, ct);
    return std::sqrt(2.0) * k * std::sin(am * phi) * legendre(l, am, ct);
}

}  // namespace

TEST_CASE("sh: band-0 basis is constant") {
    std::mt19937 rng(1);
    for (int i = 0; i < 10; ++i) {
        const auto b = sh_basis(test::random_unit(rng));
        CHECK(b[0] == doctest::Approx(0.28209479177387814).epsilon(1e-14));
    }
}

TEST_CASE("sh: band-1 closed form at the z pole") {
    const auto b = sh_basis(Vec3::UnitZ());
    CHECK(b[2] == doctest::Approx(0.48860251).epsilon(1e-7));
    CHECK(b[1] == 0.0);
    CHECK(b[3] == 0.0);
}

TEST_CASE("sh: basis matches the Legendre recurrence oracle") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 d = test::random_unit(rng);
        const auto b = sh_basis(d);
        int i = 0;
        for (int l = 0; l <= 3; ++l)
            for (int m = -l; m <= l; ++m, ++i)
                CHECK(std::abs(b[i] - sh_oracle(l, m, d)) <= 1e-10);
    }
}

TEST_CASE("sh: non-unit direction rejected") {
    CHECK_THROWS_AS(sh_basis(Vec3(0.0, 0.0, 1.1)), std::runtime_error);
    CHECK_THROWS_AS(sh_basis(Vec3::Zero()), std::runtime_error);
}

TEST_CASE("sh: eval of the constant-1 coefficient vector") {
    SHCoeffs c;
    c[0] = 2.0 * std::sqrt(kPi);
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i)
        CHECK(sh_eval(c, test::random_unit(rng)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sh_eval(SHCoeffs{}, Vec3::UnitX()) == 0.0);
}

TEST_CASE("sh: clamped eval clips to [0,1]") {
    SHCoeffs c;
    c[0] = -2.0;  // raw eval is negative everywhere
    CHECK(sh_eval(c, Vec3::UnitZ(), true) == 0.0);
    c[0] = 20.0;
    CHECK(sh_eval(c, Vec3::UnitZ(), true) == 1.0);
}

TEST_CASE("sh: projection of the constant function") {
    const auto c = sh_project(128, 64, [](const Vec3&) { return 1.0; });
    CHECK(c[0] == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-3));
    for (int i = 1; i < SHCoeffs::kCount; ++i) CHECK(std::abs(c[i]) <= 1e-3);
}

TEST_CASE("sh: projection of the clamped cosine lobe") {
    const auto c = sh_project(
        128, 64, [](const Vec3& d) { return std::max(0.0, d.z()); });
    // hemisphere integral of cos(theta) * Y00 = pi / (2 sqrt(pi))
    CHECK(c[0] == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-3));
}

TEST_CASE("sh: project after eval recovers band-limited coefficients") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        SHCoeffs c;
        for (int i = 0; i < SHCoeffs::kCount; ++i) c[i] = uni(rng);
        const auto back = sh_project(
            128, 64, [&](const Vec3& d) { return sh_eval(c, d); });
        for (int i = 0; i < SHCoeffs::kCount; ++i)
            CHECK(std::abs(back[i] - c[i]) <= 1e-3);
    }
}

TEST_CASE("sh: orthonormality on the quadrature grid") {
    for (int i = 0; i < SHCoeffs::kCount; ++i) {
        SHCoeffs c;
        c[i] = 1.0;
        const auto g = sh_project(
            128, 64, [&](const Vec3& d) { return sh_eval(c, d); });
        for (int j = 0; j < SHCoeffs::kCount; ++j) {
            const double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(g[j] - expect) <= 1e-3);
        }
    }
}

TEST_CASE("sh: band energy is rotation invariant") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    constexpr int kBandStart[5] = {0, 1, 4, 9, 16};
    for (int trial = 0; trial < 3; ++trial) {
        SHCoeffs c;
        for (int i = 0; i < SHCoeffs::kCount; ++i) c[i] = uni(rng);
        const Mat3 rot = test::random_rotation(rng).toRotationMatrix();
        // Dense grid: the theta quadrature error must stay below the
        // 1e-6 energy tolerance.
        const auto cr = sh_project(
            32, 8192, [&](const Vec3& d) { return sh_eval(c, rot * d); });
        for (int l = 0; l <= 3; ++l) {
            double e0 = 0.0, e1 = 0.0;
            for (int i = kBandStart[l]; i < kBandStart[l + 1]; ++i) {
                e0 += c[i] * c[i];
                e1 += cr[i] * cr[i];
            }
            CHECK(std::abs(e1 - e0) <= 1e-6);
        }
    }
}
