// SPDX-License-Identifier: Apache-2.0
//
// sarshare: IMT / EESS (active) aggregate interference simulator
// Copyright (C) 2026 The sarshare authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SARSHARE_UNITS_HPP
#define SARSHARE_UNITS_HPP

#include <cmath>
#include <numbers>

namespace sarshare
{
    namespace constants
    {
        constexpr double kPi = std::numbers::pi;
        constexpr double kEarthRadiusKm = 6378.137;          // WGS-84 equatorial, used as a sphere
        constexpr double kEarthMuKm3S2 = 398600.4418;        // km^3/s^2
        constexpr double kEarthRotationRadS = 7.2921150e-5;  // sidereal rate
        constexpr double kBoltzmann = 1.38e-23;              // J/K, as used in link budgets of this band
        constexpr double kReferenceTemperatureK = 290.0;
        constexpr double kInOverNFloorDb = -400.0;
    }

    constexpr double deg_to_rad(double deg) { return deg * constants::kPi / 180.0; }
    constexpr double rad_to_deg(double rad) { return rad * 180.0 / constants::kPi; }

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

    // Wraps an angle into [-180, 180).
    inline double wrap_deg_180(double deg)
    {
        double w = std::fmod(deg + 180.0, 360.0);
        if (w < 0.0)
            w += 360.0;
        return w - 180.0;
    }

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        constexpr Vec3 operator-() const { return {-x, -y, -z}; }

        constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
        constexpr Vec3 cross(const Vec3 &o) const
        {
            return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
        }
        double norm() const { return std::sqrt(dot(*this)); }
        Vec3 normalized() const
        {
            const double n = norm();
            return {x / n, y / n, z / n};
        }
    };

    constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }
}

#endif
