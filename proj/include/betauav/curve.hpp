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

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>
#include <span>
#include <stdexcept>

#include "betauav/bigint.hpp"
#include "betauav/bytes.hpp"
#include "betauav/errors.hpp"
#include "betauav/opcount.hpp"

namespace betauav {

// Wire sizes. Coordinates and signature components are fixed 20-byte
// big-endian fields regardless of the configured curve.
constexpr std::size_t kCoordBytes = 20;
constexpr std::size_t kPointBytes = 2 * kCoordBytes;

/// Affine point or the point at infinity O. A plain value; curve membership
/// is established by the operations that produce points (decode of untrusted
/// bytes yields raw coordinates that consumers must check via is_on_curve).
struct Point {
    U256 x{};
    U256 y{};
    bool infinity = true;

    static Point at_infinity() { return {}; }
    static Point affine(U256 px, U256 py) { return {std::move(px), std::move(py), false}; }
    bool is_infinity() const { return infinity; }

    friend bool operator==(const Point&, const Point&) = default;
};

/// Short Weierstrass curve y^2 = x^3 + ax + b over F_p with a base point of
/// prime order q. Construct through validate(), which enforces:
///   - p and q probable primes (Miller-Rabin, 64 rounds)
///   - nonzero discriminant 4a^3 + 27b^2 mod p
///   - base point on the curve
///   - q * g = O
class CurveParams {
public:
    static CurveParams validate(const U256& a, const U256& b, const U256& p, const U256& q,
                                const U256& gx, const U256& gy, const U256& cofactor = 1);

    const U256& a() const { return a_; }
    const U256& b() const { return b_; }
    const U256& p() const { return p_; }
    const U256& q() const { return q_; }
    const Point& g() const { return g_; }
    const U256& cofactor() const { return h_; }
    unsigned q_bits() const { return q_bits_; }

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    CurveParams(U256 a, U256 b, U256 p, U256 q, Point g, U256 h)
        : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)),
          g_(std::move(g)), h_(std::move(h)), q_bits_(bit_length(q_)) {}

    U256 a_, b_, p_, q_;
    Point g_;
    U256 h_;
    unsigned q_bits_;
};

inline bool is_on_curve(const Point& pt, const CurveParams& c) {
    if (pt.is_infinity()) return true;
    if (pt.x >= c.p() || pt.y >= c.p()) return false;
    U256 lhs = mulmod(pt.y, pt.y, c.p());
    U256 rhs = addmod(mulmod(mulmod(pt.x, pt.x, c.p()), pt.x, c.p()),
                      addmod(mulmod(c.a(), pt.x, c.p()), c.b(), c.p()), c.p());
    return lhs == rhs;
}

inline Point point_negate(const Point& pt, const CurveParams& c) {
    if (pt.is_infinity()) return pt;
    return Point::affine(pt.x, pt.y == 0 ? U256(0) : c.p() - pt.y);
}

/// Chord-tangent group law in affine coordinates. Preconditions: operands on
/// the curve or O.
inline Point point_add(const Point& lhs, const Point& rhs, const CurveParams& c) {
    detail::bump_point_add();
    if (lhs.is_infinity()) return rhs;
    if (rhs.is_infinity()) return lhs;
    const U256& p = c.p();
    U256 lambda;
    if (lhs.x == rhs.x) {
        if (addmod(lhs.y, rhs.y, p) == 0) return Point::at_infinity();
        // same x and y2 != -y1 implies doubling
        U256 num = addmod(mulmod(3, mulmod(lhs.x, lhs.x, p), p), c.a(), p);
        lambda = mulmod(num, invmod_prime(addmod(lhs.y, lhs.y, p), p), p);
    } else {
        U256 num = submod(rhs.y, lhs.y, p);
        U256 den = submod(rhs.x, lhs.x, p);
        lambda = mulmod(num, invmod_prime(den, p), p);
    }
    U256 x3 = submod(submod(mulmod(lambda, lambda, p), lhs.x, p), rhs.x, p);
    U256 y3 = submod(mulmod(lambda, submod(lhs.x, x3, p), p), lhs.y, p);
    return Point::affine(x3, y3);
}

namespace detail {

// Jacobian coordinates (X, Y, Z): x = X/Z^2, y = Y/Z^3. Z == 0 encodes O.
struct JPoint {
    U256 X{}, Y{}, Z{};
    bool is_infinity() const { return Z == 0; }
};

inline JPoint j_from_affine(const Point& pt) {
    if (pt.is_infinity()) return {};
    return {pt.x, pt.y, 1};
}

inline Point j_to_affine(const JPoint& j, const CurveParams& c) {
    if (j.is_infinity()) return Point::at_infinity();
    const U256& p = c.p();
    U256 zi = invmod_prime(j.Z, p);
    U256 zi2 = mulmod(zi, zi, p);
    return Point::affine(mulmod(j.X, zi2, p), mulmod(j.Y, mulmod(zi2, zi, p), p));
}

inline JPoint j_double(const JPoint& j, const CurveParams& c) {
    if (j.is_infinity() || j.Y == 0) return {};
    const U256& p = c.p();
    U256 xx = mulmod(j.X, j.X, p);
    U256 yy = mulmod(j.Y, j.Y, p);
    U256 yyyy = mulmod(yy, yy, p);
    U256 zz = mulmod(j.Z, j.Z, p);
    U256 s = mulmod(4, mulmod(j.X, yy, p), p);
    U256 m = addmod(mulmod(3, xx, p), mulmod(c.a(), mulmod(zz, zz, p), p), p);
    U256 x3 = submod(mulmod(m, m, p), addmod(s, s, p), p);
    U256 y3 = submod(mulmod(m, submod(s, x3, p), p), mulmod(8, yyyy, p), p);
    U256 z3 = mulmod(addmod(j.Y, j.Y, p), j.Z, p);
    return {x3, y3, z3};
}

// Mixed addition: Jacobian + affine (q must not be O).
inline JPoint j_add_mixed(const JPoint& j, const Point& q, const CurveParams& c) {
    if (j.is_infinity()) return j_from_affine(q);
    const U256& p = c.p();
    U256 z1z1 = mulmod(j.Z, j.Z, p);
    U256 u2 = mulmod(q.x, z1z1, p);
    U256 s2 = mulmod(q.y, mulmod(j.Z, z1z1, p), p);
    if (u2 == j.X) {
        if (s2 != j.Y) return {};
        return j_double(j, c);
    }
    U256 h = submod(u2, j.X, p);
    U256 hh = mulmod(h, h, p);
    U256 hhh = mulmod(h, hh, p);
    U256 r = submod(s2, j.Y, p);
    U256 v = mulmod(j.X, hh, p);
    U256 x3 = submod(submod(mulmod(r, r, p), hhh, p), addmod(v, v, p), p);
    U256 y3 = submod(mulmod(r, submod(v, x3, p), p), mulmod(j.Y, hhh, p), p);
    U256 z3 = mulmod(j.Z, h, p);
    return {x3, y3, z3};
}

// Left-to-right double-and-add on the raw (unreduced) scalar.
inline Point scalar_mul_raw(const U256& k, const Point& pt, const CurveParams& c) {
    if (k == 0 || pt.is_infinity()) return Point::at_infinity();
    JPoint acc = j_from_affine(pt);
    for (int i = static_cast<int>(mp::msb(k)) - 1; i >= 0; --i) {
        acc = j_double(acc, c);
        if (mp::bit_test(k, static_cast<unsigned>(i))) acc = j_add_mixed(acc, pt, c);
    }
    return j_to_affine(acc, c);
}

}  // namespace detail

/// k * P by double-and-add. Scalars are reduced mod q first, so k >= q is
/// consistent with the subgroup order.
inline Point scalar_mul(const U256& k, const Point& pt, const CurveParams& c) {
    detail::bump_scalar_mul();
    return detail::scalar_mul_raw(k % c.q(), pt, c);
}

inline CurveParams CurveParams::validate(const U256& a, const U256& b, const U256& p,
                                         const U256& q, const U256& gx, const U256& gy,
                                         const U256& cofactor) {
    if (p <= 3 || q <= 3)
        throw CurveValidationError(CurveError::NotPrime, "p and q must exceed 3");
    // Deterministically seeded witnesses; 64 rounds.
    std::mt19937_64 mr_rng(0x9d2c5680u);
    if (!mp::miller_rabin_test(p, 64, mr_rng))
        throw CurveValidationError(CurveError::NotPrime, "p failed primality test");
    if (!mp::miller_rabin_test(q, 64, mr_rng))
        throw CurveValidationError(CurveError::NotPrime, "q failed primality test");

    U256 ar = a % p;
    U256 br = b % p;
    // discriminant 4a^3 + 27b^2 mod p
    U256 a3 = mulmod(mulmod(ar, ar, p), ar, p);
    U256 disc = addmod(mulmod(4, a3, p), mulmod(27, mulmod(br, br, p), p), p);
    if (disc == 0)
        throw CurveValidationError(CurveError::SingularCurve, "discriminant is zero mod p");

    CurveParams c(ar, br, p, q, Point::affine(gx, gy), cofactor);
    if (!is_on_curve(c.g(), c))
        throw CurveValidationError(CurveError::PointNotOnCurve,
                                   "base point does not satisfy the curve equation");
    if (!detail::scalar_mul_raw(q, c.g(), c).is_infinity())
        throw CurveValidationError(CurveError::WrongOrder, "q * g is not the point at infinity");
    return c;
}

/// 40-byte wire form: big-endian x (20) || big-endian y (20). O has no wire
/// representation.
inline Bytes encode_point(const Point& pt) {
    if (pt.is_infinity())
        throw std::invalid_argument("the point at infinity is not encodable");
    Bytes out(kPointBytes, 0);
    to_be_bytes(pt.x, std::span<std::uint8_t>(out.data(), kCoordBytes));
    to_be_bytes(pt.y, std::span<std::uint8_t>(out.data() + kCoordBytes, kCoordBytes));
    return out;
}

/// Reads raw coordinates; callers validate membership with is_on_curve before
/// doing curve arithmetic (verify() does this itself).
inline Point decode_point(std::span<const std::uint8_t> in) {
    return Point::affine(from_be_bytes(in.first(kCoordBytes)),
                         from_be_bytes(in.subspan(kCoordBytes, kCoordBytes)));
}

/// secp160r1 (SEC 2). The default curve.
inline const CurveParams& secp160r1() {
    static const CurveParams c = CurveParams::validate(
        U256("0xffffffffffffffffffffffffffffffff7ffffffc"),
        U256("0x1c97befc54bd7a8b65acf89f81d4d4adc565fa45"),
        U256("0xffffffffffffffffffffffffffffffff7fffffff"),
        U256("0x0100000000000000000001f4c8f927aed3ca752257"),
        U256("0x4a96b5688ef573284664698968c38bb913cbfc82"),
        U256("0x23a628553168947d59dcc912042351377ac5fb32"));
    return c;
}

/// Tiny test curve y^2 = x^3 + 2x + 2 over F_17, |E| = 19, g = (5, 1).
inline const CurveParams& toy_f17() {
    static const CurveParams c = CurveParams::validate(2, 2, 17, 19, 5, 1);
    return c;
}

}  // namespace betauav
