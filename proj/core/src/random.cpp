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

#include "sarshare/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sarshare
{
    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    RandomStream RandomStream::for_snapshot(std::uint64_t seed, std::uint64_t index)
    {
        return RandomStream(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
    }

    double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double RandomStream::uniform_open()
    {
        return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
    }

    double RandomStream::normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double RandomStream::rayleigh(double sigma) { return sigma * std::sqrt(-2.0 * std::log(uniform_open())); }

    double RandomStream::truncated_normal(double mean, double sd, double limit)
    {
        if (!(limit > 0.0) || !(sd > 0.0))
            throw std::invalid_argument("truncated normal needs positive sd and limit");
        for (;;)
        {
            const double x = normal() * sd;
            if (std::abs(x) <= limit)
                return mean + x;
        }
    }
}
