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

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <unordered_set>
#include <variant>
#include <vector>

#include "betauav/pki.hpp"

namespace betauav {

constexpr std::uint8_t kHandshakeTag = 0x01;
constexpr std::uint8_t kDataTag = 0x02;
constexpr std::size_t kHandshakeBytes = 1 + kCertificateBytes + 8 + 8 + kSignatureBytes;  // 145
constexpr std::size_t kDataHeaderBytes = 1 + 4 + 8 + kPointBytes + kSignatureBytes;       // 93

struct ProtocolConfig {
    std::uint64_t delta_fresh_ms = 1000;
    std::size_t replay_cache_capacity = 4096;
};

/// First-slot tuple <Cert, T, T_S, sigma> where sigma is the sender's
/// signature over encode(cert) || be64(t) || be64(t_s).
struct HandshakeMessage {
    Certificate cert;
    std::uint64_t t_ms = 0;
    std::uint64_t t_s_ms = 0;
    Signature sigma;

    friend bool operator==(const HandshakeMessage&, const HandshakeMessage&) = default;

    Bytes signed_bytes() const {
        Bytes out = cert.encode();
        put_u64_be(out, t_ms);
        put_u64_be(out, t_s_ms);
        return out;
    }

    /// 145-byte wire form: tag || cert (88) || t (8) || t_s (8) || sigma (40).
    Bytes encode() const {
        Bytes out{kHandshakeTag};
        append(out, as_span(cert.encode()));
        put_u64_be(out, t_ms);
        put_u64_be(out, t_s_ms);
        append(out, as_span(encode_signature(sigma)));
        return out;
    }

    static std::optional<HandshakeMessage> decode(std::span<const std::uint8_t> in) {
        if (in.size() != kHandshakeBytes || in[0] != kHandshakeTag) return std::nullopt;
        auto cert = Certificate::decode(in.subspan(1, kCertificateBytes));
        if (!cert) return std::nullopt;
        HandshakeMessage msg;
        msg.cert = *cert;
        msg.t_ms = get_u64_be(in.subspan(1 + kCertificateBytes, 8));
        msg.t_s_ms = get_u64_be(in.subspan(1 + kCertificateBytes + 8, 8));
        msg.sigma = decode_signature(in.subspan(1 + kCertificateBytes + 16, kSignatureBytes));
        return msg;
    }
};

/// Subsequent-slot tuple <m, T3, Pk, sigma3> with sigma3 over
/// m || be64(t3) || encode(pk).
struct DataMessage {
    Bytes m;
    std::uint64_t t3_ms = 0;
    Point pk;
    Signature sigma3;

    friend bool operator==(const DataMessage&, const DataMessage&) = default;

    Bytes signed_bytes() const {
        Bytes out = m;
        put_u64_be(out, t3_ms);
        append(out, as_span(encode_point(pk)));
        return out;
    }

    /// (93 + |m|)-byte wire form: tag || m_len (4) || m || t3 (8) || pk (40)
    /// || sigma3 (40).
    Bytes encode() const {
        Bytes out{kDataTag};
        put_u32_be(out, static_cast<std::uint32_t>(m.size()));
        append(out, as_span(m));
        put_u64_be(out, t3_ms);
        append(out, as_span(encode_point(pk)));
        append(out, as_span(encode_signature(sigma3)));
        return out;
    }

    static std::optional<DataMessage> decode(std::span<const std::uint8_t> in) {
        if (in.size() < kDataHeaderBytes || in[0] != kDataTag) return std::nullopt;
        std::uint32_t m_len = get_u32_be(in.subspan(1, 4));
        if (in.size() != kDataHeaderBytes + m_len) return std::nullopt;
        DataMessage msg;
        msg.m.assign(in.begin() + 5, in.begin() + 5 + m_len);
        std::size_t off = 5 + m_len;
        msg.t3_ms = get_u64_be(in.subspan(off, 8));
        msg.pk = decode_point(in.subspan(off + 8, kPointBytes));
        msg.sigma3 = decode_signature(in.subspan(off + 8 + kPointBytes, kSignatureBytes));
        return msg;
    }
};

/// A party's local view of an authenticated session. t_start caches the
/// timestamp registered on-chain; acceptance checks re-read the ledger, so
/// the chain stays authoritative.
struct SessionRecord {
    Point peer_pk;
    std::uint64_t t_s_ms = 0;
    Digest txid{};
    std::uint64_t t_start_ms = 0;

    friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

enum class Reject {
    StaleTimestamp,
    BadCertificateSignature,
    BadCertificateExpired,
    BadCertificateRevoked,
    BadSignature,
    UnknownContract,
    NoPendingHandshake,
    NoSession,
    UnknownTx,
    SessionExpired,
    DuplicateMessage,
    OwnCertificateExpired,
    MalformedFrame,
};

inline const char* to_string(Reject r) {
    switch (r) {
        case Reject::StaleTimestamp: return "StaleTimestamp";
        case Reject::BadCertificateSignature: return "BadCertificate(BadSignature)";
        case Reject::BadCertificateExpired: return "BadCertificate(Expired)";
        case Reject::BadCertificateRevoked: return "BadCertificate(Revoked)";
        case Reject::BadSignature: return "BadSignature";
        case Reject::UnknownContract: return "UnknownContract";
        case Reject::NoPendingHandshake: return "NoPendingHandshake";
        case Reject::NoSession: return "NoSession";
        case Reject::UnknownTx: return "UnknownTx";
        case Reject::SessionExpired: return "SessionExpired";
        case Reject::DuplicateMessage: return "DuplicateMessage";
        case Reject::OwnCertificateExpired: return "OwnCertificateExpired";
        case Reject::MalformedFrame: return "MalformedFrame";
    }
    return "?";
}

template <typename T>
using Outcome = std::variant<T, Reject>;

template <typename T>
bool is_ok(const Outcome<T>& o) {
    return std::holds_alternative<T>(o);
}

template <typename T>
const T& value(const Outcome<T>& o) {
    return std::get<T>(o);
}

template <typename T>
Reject reject_reason(const Outcome<T>& o) {
    return std::get<Reject>(o);
}

/// Bounded FIFO set of message digests used to drop byte-identical frames
/// that would otherwise pass the freshness window.
class ReplayCache {
public:
    explicit ReplayCache(std::size_t capacity) : capacity_(capacity) {}

    bool contains(const Digest& d) const { return set_.count(d) != 0; }

    void insert(const Digest& d) {
        if (capacity_ == 0 || !set_.insert(d).second) return;
        order_.push_back(d);
        if (order_.size() > capacity_) {
            set_.erase(order_.front());
            order_.pop_front();
        }
    }

private:
    std::size_t capacity_;
    std::deque<Digest> order_;
    std::unordered_set<Digest, DigestHash> set_;
};

/// Protocol state machine run by every terminal (UAVs and GCSs use identical
/// message formats and checks). Single-owner; one scheduler drives an actor
/// at a time. Shared services (params, CRL, ledger) are passed per call.
class Actor {
public:
    Actor(TerminalIdentity identity, const CurveParams& curve, ProtocolConfig cfg = {})
        : id_(std::move(identity)), cfg_(cfg), curve_(curve),
          replay_(cfg.replay_cache_capacity) {
        if (cfg_.delta_fresh_ms == 0)
            throw std::invalid_argument("freshness window must be positive");
    }

    const TerminalIdentity& identity() const { return id_; }
    const Point& pk() const { return id_.keypair.pk; }
    const ProtocolConfig& config() const { return cfg_; }
    OpCounts& counts() { return counts_; }
    const OpCounts& counts() const { return counts_; }

    /// First-slot request <Cert, T1, T_S, sigma1> with T1 = now.
    Outcome<HandshakeMessage> init_request(std::uint64_t t_s_ms, std::uint64_t now_ms) {
        OpCountScope scope(counts_);
        if (now_ms > id_.cert.t_r_ms) return Reject::OwnCertificateExpired;
        HandshakeMessage msg{id_.cert, now_ms, t_s_ms, {}};
        msg.sigma = sign(id_.keypair.sk, as_span(msg.signed_bytes()), curve());
        pending_.push_back({t_s_ms, now_ms});
        return msg;
    }

    struct RequestResult {
        HandshakeMessage reply;
        SessionRecord record;
    };

    /// Responder side of the first slot. Checks, in order: freshness of T1,
    /// certificate validity, sigma1; then registers the session on-chain and
    /// answers with the mirrored tuple (T2 = now).
    Outcome<RequestResult> on_request(const HandshakeMessage& msg, std::uint64_t now_ms,
                                      const PublicParams& pps, const Crl& crl, Ledger& ledger) {
        OpCountScope scope(counts_);
        if (auto r = check_handshake(msg, now_ms, pps, crl, ledger)) return *r;
        Digest txid =
            ledger.issue_session(pps.scid, pk(), msg.cert.pk, pk(), msg.t_ms);
        SessionRecord record{msg.cert.pk, msg.t_s_ms, txid, msg.t_ms};
        sessions_[encode_point(msg.cert.pk)] = record;
        HandshakeMessage reply{id_.cert, now_ms, msg.t_s_ms, {}};
        reply.sigma = sign(id_.keypair.sk, as_span(reply.signed_bytes()), curve());
        return RequestResult{std::move(reply), std::move(record)};
    }

    /// Initiator side completing the handshake. Same checks as on_request,
    /// plus the reply must match a pending request's T_S.
    Outcome<SessionRecord> on_reply(const HandshakeMessage& msg, std::uint64_t now_ms,
                                    const PublicParams& pps, const Crl& crl, Ledger& ledger) {
        OpCountScope scope(counts_);
        if (auto r = check_handshake(msg, now_ms, pps, crl, ledger)) return *r;
        auto pending = std::find_if(pending_.begin(), pending_.end(),
                                    [&](const Pending& p) { return p.t_s_ms == msg.t_s_ms; });
        if (pending == pending_.end()) return Reject::NoPendingHandshake;
        pending_.erase(pending);
        Digest txid =
            ledger.issue_session(pps.scid, pk(), msg.cert.pk, pk(), msg.t_ms);
        SessionRecord record{msg.cert.pk, msg.t_s_ms, txid, msg.t_ms};
        sessions_[encode_point(msg.cert.pk)] = record;
        return record;
    }

    /// Subsequent-slot tuple <m, T3, Pk, sigma3> with T3 = now.
    DataMessage send_data(const SessionRecord& session, std::span<const std::uint8_t> m,
                          std::uint64_t now_ms) {
        (void)session;  // sender may pre-check expiry; the receiver judges it
        OpCountScope scope(counts_);
        DataMessage msg{Bytes(m.begin(), m.end()), now_ms, pk(), {}};
        msg.sigma3 = sign(id_.keypair.sk, as_span(msg.signed_bytes()), curve());
        return msg;
    }

    /// Receiver-side acceptance. Checks, in order: (1) freshness of T3,
    /// (2) sigma3 under the claimed pk, (3) a session for that pk whose
    /// ledger transaction resolves, (4) continuity T3 - T1 <= T_S against the
    /// on-chain T1, (5) not a byte-identical replay.
    Outcome<Bytes> on_data(const DataMessage& msg, std::uint64_t now_ms, const Ledger& ledger) {
        OpCountScope scope(counts_);
        if (age_exceeds(msg.t3_ms, now_ms, cfg_.delta_fresh_ms)) return Reject::StaleTimestamp;
        if (msg.pk.is_infinity() ||
            !verify(msg.pk, as_span(msg.signed_bytes()), msg.sigma3, curve()))
            return Reject::BadSignature;
        auto it = sessions_.find(encode_point(msg.pk));
        if (it == sessions_.end()) return Reject::NoSession;
        const SessionRecord& record = it->second;
        const LedgerTransaction* tx = ledger.find_tx(record.txid);
        if (tx == nullptr) return Reject::UnknownTx;
        std::uint64_t t1 = std::get<SessionPayload>(tx->payload).t_issue_ms;
        if (msg.t3_ms > t1 + record.t_s_ms) return Reject::SessionExpired;
        Digest frame_digest = h1(msg.encode());
        if (replay_.contains(frame_digest)) return Reject::DuplicateMessage;
        replay_.insert(frame_digest);
        return msg.m;
    }

    const SessionRecord* session_for(const Point& peer_pk) const {
        auto it = sessions_.find(encode_point(peer_pk));
        return it == sessions_.end() ? nullptr : &it->second;
    }

    std::size_t session_count() const { return sessions_.size(); }
    std::size_t pending_count() const { return pending_.size(); }

    /// Installs a session record directly (state restore).
    void restore_session(const SessionRecord& record) {
        sessions_[encode_point(record.peer_pk)] = record;
    }

private:
    struct Pending {
        std::uint64_t t_s_ms;
        std::uint64_t t1_ms;
    };

    const CurveParams& curve() const { return curve_; }

    static bool age_exceeds(std::uint64_t t, std::uint64_t now, std::uint64_t window) {
        std::uint64_t age = now >= t ? now - t : t - now;
        return age > window;
    }

    // Shared harness for both handshake directions; returns the first
    // failing check or nullopt when all pass.
    std::optional<Reject> check_handshake(const HandshakeMessage& msg, std::uint64_t now_ms,
                                          const PublicParams& pps, const Crl& crl,
                                          const Ledger& ledger) {
        if (age_exceeds(msg.t_ms, now_ms, cfg_.delta_fresh_ms)) return Reject::StaleTimestamp;
        switch (verify_certificate(pps, msg.cert, now_ms, crl)) {
            case CertStatus::Valid: break;
            case CertStatus::BadSignature: return Reject::BadCertificateSignature;
            case CertStatus::Expired: return Reject::BadCertificateExpired;
            case CertStatus::Revoked: return Reject::BadCertificateRevoked;
        }
        if (!verify(msg.cert.pk, as_span(msg.signed_bytes()), msg.sigma, pps.curve))
            return Reject::BadSignature;
        if (!ledger.has_contract(pps.scid)) return Reject::UnknownContract;
        return std::nullopt;
    }

    TerminalIdentity id_;
    ProtocolConfig cfg_;
    CurveParams curve_;
    std::map<Bytes, SessionRecord> sessions_;
    std::vector<Pending> pending_;
    ReplayCache replay_;
    OpCounts counts_;
};

}  // namespace betauav
