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

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "betauav/bytes.hpp"

namespace betauav {

namespace mp = boost::multiprecision;

// Fixed-width unsigned integers: 256 bits covers every field/scalar value
// (moduli are <= 161 bits), 512 bits covers intermediate products.
using U256 = mp::number<mp::cpp_int_backend<256, 256, mp::unsigned_magnitude, mp::unchecked, void>>;
using U512 = mp::number<mp::cpp_int_backend<512, 512, mp::unsigned_magnitude, mp::unchecked, void>>;

inline U256 mulmod(const U256& a, const U256& b, const U256& m) {
    return static_cast<U256>(U512(a) * U512(b) % U512(m));
}

inline U256 addmod(const U256& a, const U256& b, const U256& m) {
    // a, b < m < 2^255, so the sum cannot wrap 256 bits.
    U256 s = a + b;
    if (s >= m) s -= m;
    return s;
}

inline U256 submod(const U256& a, const U256& b, const U256& m) {
    return a >= b ? a - b : m - (b - a);
}

/// Modular inverse for prime modulus p (Fermat). Requires a != 0 mod p.
inline U256 invmod_prime(const U256& a, const U256& p) {
    return mp::powm(a % p, p - 2, p);
}

inline unsigned bit_length(const U256& v) {
    return v == 0 ? 0 : mp::msb(v) + 1;
}

/// Big-endian encoding, left-padded with zeros to fill `out` exactly.
inline void to_be_bytes(const U256& v, std::span<std::uint8_t> out) {
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    if (v == 0) return;
    std::vector<std::uint8_t> tmp;
    mp::export_bits(v, std::back_inserter(tmp), 8);
    std::copy(tmp.begin(), tmp.end(), out.end() - static_cast<std::ptrdiff_t>(tmp.size()));
}

inline Bytes to_be_bytes(const U256& v, std::size_t width) {
    Bytes out(width, 0);
    to_be_bytes(v, std::span<std::uint8_t>(out.data(), out.size()));
    return out;
}

inline U256 from_be_bytes(std::span<const std::uint8_t> in) {
    U256 v = 0;
    if (!in.empty()) mp::import_bits(v, in.begin(), in.end(), 8);
    return v;
}

}  // namespace betauav
