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

#include <span>

#include "betauav/curve.hpp"
#include "betauav/hash.hpp"
#include "betauav/rng.hpp"

namespace betauav {

constexpr std::size_t kScalarBytes = 20;
constexpr std::size_t kSignatureBytes = 2 * kScalarBytes;

struct KeyPair {
    U256 sk;
    Point pk;
};

struct Signature {
    U256 r;
    U256 s;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Bytes encode_signature(const Signature& sig) {
    Bytes out(kSignatureBytes, 0);
    to_be_bytes(sig.r, std::span<std::uint8_t>(out.data(), kScalarBytes));
    to_be_bytes(sig.s, std::span<std::uint8_t>(out.data() + kScalarBytes, kScalarBytes));
    return out;
}

inline Signature decode_signature(std::span<const std::uint8_t> in) {
    return {from_be_bytes(in.first(kScalarBytes)),
            from_be_bytes(in.subspan(kScalarBytes, kScalarBytes))};
}

namespace detail {

// Leftmost q_bits of the digest, reduced mod q.
inline U256 truncate_digest(const Digest& d, const CurveParams& c) {
    U256 e = from_be_bytes(std::span<const std::uint8_t>(d.data(), d.size()));
    unsigned digest_bits = 8 * kDigestBytes;
    if (c.q_bits() < digest_bits) e >>= digest_bits - c.q_bits();
    return e % c.q();
}

}  // namespace detail

inline KeyPair keygen(DetRng& rng, const CurveParams& c) {
    U256 sk = rng.scalar(c.q());
    return {sk, scalar_mul(sk, c.g(), c)};
}

/// ECDSA over the configured curve with a deterministic nonce
/// k = H1(sk || H1(msg)) mod q, re-derived with a counter suffix whenever the
/// candidate nonce is zero or yields an r or s that is zero or does not fit
/// the 20-byte wire field.
inline Signature sign(const U256& sk, std::span<const std::uint8_t> msg, const CurveParams& c) {
    detail::bump_sign();
    static const U256 kWireBound = U256(1) << (8 * kScalarBytes);
    const U256& q = c.q();
    Digest hm = h1(msg);
    U256 e = detail::truncate_digest(hm, c);
    Bytes nonce_base = to_be_bytes(sk, 32);
    append(nonce_base, std::span<const std::uint8_t>(hm.data(), hm.size()));
    for (std::uint32_t ctr = 0;; ++ctr) {
        Bytes nonce_input = nonce_base;
        if (ctr > 0) put_u32_be(nonce_input, ctr);
        Digest kd = h1(nonce_input);
        U256 k = from_be_bytes(std::span<const std::uint8_t>(kd.data(), kd.size())) % q;
        if (k == 0) continue;
        Point R = scalar_mul(k, c.g(), c);
        U256 r = R.x % q;
        if (r == 0 || r >= kWireBound) continue;
        U256 s = mulmod(invmod_prime(k, q), addmod(e, mulmod(r, sk, q), q), q);
        if (s == 0 || s >= kWireBound) continue;
        return {r, s};
    }
}

/// Standard ECDSA verification. Malformed inputs (component out of range,
/// public key off the curve or at infinity) yield false, never an error.
inline bool verify(const Point& pk, std::span<const std::uint8_t> msg, const Signature& sig,
                   const CurveParams& c) {
    detail::bump_verify();
    const U256& q = c.q();
    if (sig.r == 0 || sig.s == 0 || sig.r >= q || sig.s >= q) return false;
    if (pk.is_infinity() || !is_on_curve(pk, c)) return false;
    U256 e = detail::truncate_digest(h1(msg), c);
    U256 w = invmod_prime(sig.s, q);
    U256 u1 = mulmod(e, w, q);
    U256 u2 = mulmod(sig.r, w, q);
    Point X = point_add(scalar_mul(u1, c.g(), c), scalar_mul(u2, pk, c), c);
    if (X.is_infinity()) return false;
    return X.x % q == sig.r;
}

}  // namespace betauav
