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

#ifndef SARSHARE_RANDOM_HPP
#define SARSHARE_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sarshare
{
    std::uint64_t splitmix64(std::uint64_t x);

    // Random stream with platform-independent output: std::mt19937_64 (fully specified by the
    // standard) and hand-written transforms instead of the implementation-defined std::
    // distributions.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

        // Independent stream for one snapshot of a run.
        static RandomStream for_snapshot(std::uint64_t seed, std::uint64_t index);

        std::uint64_t next_u64() { return engine_(); }
        double uniform();      // [0, 1)
        double uniform_open(); // (0, 1)
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
        double normal();       // standard normal, Box-Muller
        double rayleigh(double sigma);
        // Normal(mean, sd) conditioned on |x - mean| <= limit (rejection).
        double truncated_normal(double mean, double sd, double limit);

    private:
        std::mt19937_64 engine_;
        double spare_ = 0.0;
        bool has_spare_ = false;
    };
}

#endif
