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
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "betauav/ecdsa.hpp"
#include "betauav/ledger.hpp"

namespace betauav {

constexpr std::size_t kCertificateBytes = kPointBytes + 8 + kSignatureBytes;  // 88

/// System-wide parameters distributed by the TA:
/// curve (a, b, p, q, g), contract address, hash identifier, TA public key.
struct PublicParams {
    CurveParams curve;
    ContractAddress scid{};
    std::string hash_id = "SHA-256";
    Point pk_ta;
};

/// Long-term credential binding a public key to an expiry timestamp, signed
/// by the TA over encode(pk) || be64(t_r). Validity is inclusive: the
/// certificate is still valid at now == t_r.
struct Certificate {
    Point pk;
    std::uint64_t t_r_ms = 0;
    Signature sigma_ta;

    friend bool operator==(const Certificate&, const Certificate&) = default;

    Bytes signed_bytes() const {
        Bytes out = encode_point(pk);
        put_u64_be(out, t_r_ms);
        return out;
    }

    /// 88-byte wire form: pk (40) || t_r (8) || sigma_ta (40).
    Bytes encode() const {
        Bytes out = encode_point(pk);
        put_u64_be(out, t_r_ms);
        append(out, as_span(encode_signature(sigma_ta)));
        return out;
    }

    static std::optional<Certificate> decode(std::span<const std::uint8_t> in) {
        if (in.size() != kCertificateBytes) return std::nullopt;
        Certificate cert;
        cert.pk = decode_point(in.first(kPointBytes));
        cert.t_r_ms = get_u64_be(in.subspan(kPointBytes, 8));
        cert.sigma_ta = decode_signature(in.subspan(kPointBytes + 8, kSignatureBytes));
        return cert;
    }
};

enum class CertStatus { Valid, BadSignature, Expired, Revoked };

inline const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Valid: return "Valid";
        case CertStatus::BadSignature: return "BadSignature";
        case CertStatus::Expired: return "Expired";
        case CertStatus::Revoked: return "Revoked";
    }
    return "?";
}

/// Certificate revocation list: a duplicate-free set of revoked public keys
/// plus a version counter that increases on every mutation.
class Crl {
public:
    std::uint64_t version() const { return version_; }
    std::size_t size() const { return revoked_.size(); }

    bool contains(const Point& pk) const { return revoked_.count(encode_point(pk)) != 0; }

    /// Adding an already-revoked key is idempotent on membership but still
    /// counts as a mutation for versioning.
    void add(const Point& pk) {
        revoked_.insert(encode_point(pk));
        ++version_;
    }

    /// Structured-text export: header "crl-v<version>", then one hex-encoded
    /// 40-byte point per line in canonical (byte-lexicographic) order.
    std::string export_text() const {
        std::ostringstream out;
        out << "crl-v" << version_ << '\n';
        for (const Bytes& pk : revoked_) out << to_hex(pk) << '\n';
        return out.str();
    }

private:
    std::set<Bytes> revoked_;
    std::uint64_t version_ = 0;
};

enum class Role { UAV, GCS, TA };

inline const char* to_string(Role r) {
    switch (r) {
        case Role::UAV: return "UAV";
        case Role::GCS: return "GCS";
        case Role::TA: return "TA";
    }
    return "?";
}

struct TerminalIdentity {
    Role role = Role::UAV;
    KeyPair keypair;
    Certificate cert;
};

/// Check order: structural validity (TA signature) before policy (expiry,
/// revocation). Exactly one status is returned for any input.
inline CertStatus verify_certificate(const PublicParams& pps, const Certificate& cert,
                                     std::uint64_t now_ms, const Crl& crl) {
    if (cert.pk.is_infinity() ||
        !verify(pps.pk_ta, as_span(cert.signed_bytes()), cert.sigma_ta, pps.curve))
        return CertStatus::BadSignature;
    if (now_ms > cert.t_r_ms) return CertStatus::Expired;
    if (crl.contains(cert.pk)) return CertStatus::Revoked;
    return CertStatus::Valid;
}

/// Root of trust. Generates system parameters, deploys the session-registry
/// contract, registers terminals, and maintains the CRL. Single-owner
/// mutable state; callers serialize access.
class TrustedAuthority {
public:
    /// System initialization: TA keypair, contract deployment, public params.
    static std::pair<TrustedAuthority, PublicParams> setup(const CurveParams& curve, DetRng& rng,
                                                           Ledger& ledger) {
        TrustedAuthority ta(curve, rng);
        auto [scid, txid] = ledger.deploy_contract(ta.key_.pk);
        (void)txid;
        PublicParams pps{curve, scid, "SHA-256", ta.key_.pk};
        ta.pps_ = pps;
        return {std::move(ta), std::move(pps)};
    }

    const PublicParams& pps() const { return pps_; }
    const Point& pk() const { return key_.pk; }
    const Crl& crl() const { return crl_; }

    std::uint64_t clock_ms() const { return clock_ms_; }
    void set_clock(std::uint64_t now_ms) { clock_ms_ = now_ms; }

    /// Registers a terminal: fresh keypair plus a certificate over
    /// encode(pk) || be64(t_r). The expiry must not precede the TA clock.
    TerminalIdentity register_terminal(Role role, std::uint64_t t_r_ms, DetRng& rng) {
        if (t_r_ms < clock_ms_)
            throw ExpiryInPastError("certificate expiry precedes the TA clock");
        KeyPair kp = keygen(rng, pps_.curve);
        Certificate cert{kp.pk, t_r_ms, {}};
        cert.sigma_ta = sign(key_.sk, as_span(cert.signed_bytes()), pps_.curve);
        issued_.insert(encode_point(kp.pk));
        return {role, std::move(kp), std::move(cert)};
    }

    /// Revokes a previously registered key. Repeat revocations keep
    /// membership stable but still bump the CRL version.
    const Crl& revoke(const Point& pk) {
        if (issued_.count(encode_point(pk)) == 0)
            throw UnknownTerminalError("public key was never registered");
        crl_.add(pk);
        return crl_;
    }

    bool is_registered(const Point& pk) const { return issued_.count(encode_point(pk)) != 0; }

private:
    TrustedAuthority(const CurveParams& curve, DetRng& rng) : key_(keygen(rng, curve)) {}

    KeyPair key_;
    PublicParams pps_{secp160r1(), {}, "SHA-256", {}};
    Crl crl_;
    std::set<Bytes> issued_;
    std::uint64_t clock_ms_ = 0;
};

}  // namespace betauav
