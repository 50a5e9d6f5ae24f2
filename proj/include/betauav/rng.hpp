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

#include <cstdint>
#include <random>
#include <span>

#include "betauav/bigint.hpp"

namespace betauav {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed. Used so that the
/// simulator's subsystems (key generation, latency jitter, adversary
/// choices) draw from unrelated sequences under one scenario seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

/// Deterministic random source. All sampling is implemented on top of the
/// raw 64-bit output so that sequences are identical across platforms and
/// standard-library implementations.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Unbiased integer in [0, n) via bitmask rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    /// Integer in [lo, hi] inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    void fill(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t v = next_u64();
            for (int shift = 56; shift >= 0 && i < out.size(); shift -= 8)
                out[i++] = static_cast<std::uint8_t>(v >> shift);
        }
    }

    /// Uniform scalar in [1, q-1] by rejection over the bit length of q.
    U256 scalar(const U256& q) {
        unsigned bits = bit_length(q);
        std::size_t nbytes = (bits + 7) / 8;
        unsigned top_bits = bits % 8;
        std::uint8_t top_mask = top_bits == 0 ? 0xff : static_cast<std::uint8_t>((1u << top_bits) - 1);
        Bytes buf(nbytes);
        for (;;) {
            fill(std::span<std::uint8_t>(buf.data(), buf.size()));
            buf[0] &= top_mask;
            U256 v = from_be_bytes(as_span(buf));
            if (v != 0 && v < q) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace betauav
