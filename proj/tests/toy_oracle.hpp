// Copyright 2026 The betauav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force oracle for the F_17 test curve y^2 = x^3 + 2x + 2. Entirely
// independent of the library implementation: plain 64-bit arithmetic,
// inverses by exhaustive scan, points enumerated by scanning the plane.

#include <cstdint>
#include <optional>
#include <vector>

namespace toy_oracle {

constexpr std::int64_t kP = 17;
constexpr std::int64_t kA = 2;
constexpr std::int64_t kB = 2;

// (x, y) pair or empty for the point at infinity.
using Pt = std::optional<std::pair<std::int64_t, std::int64_t>>;

inline std::int64_t mod(std::int64_t v) { return ((v % kP) + kP) % kP; }

inline std::int64_t inv(std::int64_t v) {
    v = mod(v);
    for (std::int64_t t = 1; t < kP; ++t)
        if (mod(v * t) == 1) return t;
    return 0;  // unreachable for v != 0
}

inline bool on_curve(std::int64_t x, std::int64_t y) {
    return mod(y * y - (x * x * x + kA * x + kB)) == 0;
}

inline std::vector<Pt> all_points() {
    std::vector<Pt> pts;
    pts.push_back(std::nullopt);  // O
    for (std::int64_t x = 0; x < kP; ++x)
        for (std::int64_t y = 0; y < kP; ++y)
            if (on_curve(x, y)) pts.push_back(std::make_pair(x, y));
    return pts;
}

inline Pt add(const Pt& P, const Pt& Q) {
    if (!P) return Q;
    if (!Q) return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *Q;
    if (x1 == x2 && mod(y1 + y2) == 0) return std::nullopt;
    std::int64_t lam;
    if (x1 == x2 && y1 == y2) {
        lam = mod((3 * x1 * x1 + kA) * inv(2 * y1));
    } else {
        lam = mod((y2 - y1) * inv(x2 - x1));
    }
    std::int64_t x3 = mod(lam * lam - x1 - x2);
    std::int64_t y3 = mod(lam * (x1 - x3) - y1);
    return std::make_pair(x3, y3);
}

inline Pt mul(std::int64_t k, const Pt& P) {
    Pt acc = std::nullopt;
    for (std::int64_t i = 0; i < k; ++i) acc = add(acc, P);
    return acc;
}

}  // namespace toy_oracle
