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

#include "betauav/protocol.hpp"

#include <gtest/gtest.h>

namespace betauav {
namespace {

constexpr std::uint64_t kTs = 600000;       // session interval, 00:10:00
constexpr std::uint64_t kDelta = 1000;      // freshness window
constexpr std::uint64_t kExpiry = 1ULL << 40;

struct Net {
    Ledger ledger;
    DetRng rng{7};
    std::optional<TrustedAuthority> ta;
    PublicParams pps{secp160r1(), {}, "SHA-256", {}};
    TerminalIdentity id_a, id_b;

    Net() {
        auto [t, p] = TrustedAuthority::setup(secp160r1(), rng, ledger);
        ta.emplace(std::move(t));
        pps = p;
        id_a = ta->register_terminal(Role::UAV, kExpiry, rng);
        id_b = ta->register_terminal(Role::UAV, kExpiry, rng);
    }

    Actor actor_a() { return Actor(id_a, pps.curve, {kDelta, 4096}); }
    Actor actor_b() { return Actor(id_b, pps.curve, {kDelta, 4096}); }
};

struct Completed {
    Actor a;
    Actor b;
    SessionRecord rec_on_b;  // B's record about A (t_start = T1)
    SessionRecord rec_on_a;  // A's record about B (t_start = T2)
    std::uint64_t t1;
    std::uint64_t t2;
};

Completed complete_handshake(Net& net, std::uint64_t t1 = 1000, std::uint64_t t2 = 1005) {
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, t1);
    EXPECT_TRUE(is_ok(req));
    auto rr = b.on_request(value(req), t2, net.pps, net.ta->crl(), net.ledger);
    EXPECT_TRUE(is_ok(rr));
    auto rec = a.on_reply(value(rr).reply, t2, net.pps, net.ta->crl(), net.ledger);
    EXPECT_TRUE(is_ok(rec));
    return {std::move(a), std::move(b), value(rr).record, value(rec), t1, t2};
}

TEST(Handshake, ProducesCrossMatchedLedgerEntriesAndRecords) {
    Net net;
    Completed hs = complete_handshake(net);

    // one deploy + exactly two session transactions
    ASSERT_EQ(net.ledger.size(), 3u);
    const LedgerTransaction& tx1 = net.ledger.get_tx(hs.rec_on_b.txid);
    const LedgerTransaction& tx2 = net.ledger.get_tx(hs.rec_on_a.txid);
    const auto& p1 = std::get<SessionPayload>(tx1.payload);
    const auto& p2 = std::get<SessionPayload>(tx2.payload);
    // Issue(pk_from = A, pk_to = B, T1) on B's side, mirrored on A's side
    EXPECT_EQ(p1.pk_from, net.id_a.keypair.pk);
    EXPECT_EQ(p1.pk_to, net.id_b.keypair.pk);
    EXPECT_EQ(p1.t_issue_ms, hs.t1);
    EXPECT_EQ(p2.pk_from, net.id_b.keypair.pk);
    EXPECT_EQ(p2.pk_to, net.id_a.keypair.pk);
    EXPECT_EQ(p2.t_issue_ms, hs.t2);

    EXPECT_EQ(hs.rec_on_b.peer_pk, net.id_a.keypair.pk);
    EXPECT_EQ(hs.rec_on_b.t_start_ms, hs.t1);
    EXPECT_EQ(hs.rec_on_a.peer_pk, net.id_b.keypair.pk);
    EXPECT_EQ(hs.rec_on_a.t_start_ms, hs.t2);
    EXPECT_EQ(hs.rec_on_b.t_s_ms, kTs);
    EXPECT_EQ(hs.a.session_count(), 1u);
    EXPECT_EQ(hs.b.session_count(), 1u);
}

TEST(Handshake, WireSizeIsFixed) {
    Net net;
    Actor a = net.actor_a();
    auto req = a.init_request(kTs, 1000);
    ASSERT_TRUE(is_ok(req));
    Bytes wire = value(req).encode();
    EXPECT_EQ(wire.size(), kHandshakeBytes);
    EXPECT_EQ(wire.size() * 8, 1160u);
    auto decoded = HandshakeMessage::decode(as_span(wire));
    ASSERT_TRUE(decoded.has_value());
    EXPECT_EQ(*decoded, value(req));
}

TEST(Handshake, DeterministicBytesForSameInputs) {
    Net net;
    Actor a1 = net.actor_a();
    Actor a2 = net.actor_a();
    auto r1 = a1.init_request(kTs, 1234);
    auto r2 = a2.init_request(kTs, 1234);
    EXPECT_EQ(value(r1).encode(), value(r2).encode());
}

TEST(Handshake, FreshnessBoundary) {
    Net net;
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, 1000);
    // exactly delta old: accepted
    auto ok = b.on_request(value(req), 1000 + kDelta, net.pps, net.ta->crl(), net.ledger);
    EXPECT_TRUE(is_ok(ok));
    // one past the window: stale
    Actor b2 = net.actor_b();
    auto stale = b2.on_request(value(req), 1000 + kDelta + 1, net.pps, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(stale));
    EXPECT_EQ(reject_reason(stale), Reject::StaleTimestamp);
}

TEST(Handshake, RevokedPeerRejected) {
    Net net;
    net.ta->revoke(net.id_a.keypair.pk);
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, 1000);
    auto res = b.on_request(value(req), 1001, net.pps, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::BadCertificateRevoked);
}

TEST(Handshake, CertificateExpiryBoundary) {
    Net net;
    TerminalIdentity short_lived = net.ta->register_terminal(Role::UAV, 2000, net.rng);
    Actor a(short_lived, net.pps.curve, {kDelta, 4096});
    Actor b = net.actor_b();
    // now == T_R: still valid
    auto req = a.init_request(kTs, 2000);
    ASSERT_TRUE(is_ok(req));
    auto ok = b.on_request(value(req), 2000, net.pps, net.ta->crl(), net.ledger);
    EXPECT_TRUE(is_ok(ok));
    // receiver clock one past T_R: expired
    Actor b2 = net.actor_b();
    auto expired = b2.on_request(value(req), 2001, net.pps, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(expired));
    EXPECT_EQ(reject_reason(expired), Reject::BadCertificateExpired);
}

TEST(Handshake, OwnCertificateExpiredStopsInitiation) {
    Net net;
    TerminalIdentity short_lived = net.ta->register_terminal(Role::UAV, 2000, net.rng);
    Actor a(short_lived, net.pps.curve, {kDelta, 4096});
    auto res = a.init_request(kTs, 2001);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::OwnCertificateExpired);
}

TEST(Handshake, TamperedSignatureRejected) {
    Net net;
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, 1000);
    HandshakeMessage msg = value(req);
    msg.sigma.r += 1;
    auto res = b.on_request(msg, 1001, net.pps, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::BadSignature);
}

TEST(Handshake, MismatchedSessionIntervalInReply) {
    Net net;
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, 1000);
    auto rr = b.on_request(value(req), 1001, net.pps, net.ta->crl(), net.ledger);
    ASSERT_TRUE(is_ok(rr));
    // adversarially re-signed reply with a different T_S: structurally valid,
    // but no pending handshake matches
    HandshakeMessage reply = value(rr).reply;
    reply.t_s_ms = kTs + 1;
    reply.sigma = sign(net.id_b.keypair.sk, as_span(reply.signed_bytes()), net.pps.curve);
    auto res = a.on_reply(reply, 1002, net.pps, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::NoPendingHandshake);
}

TEST(Handshake, UnknownContractReported) {
    Net net;
    Actor a = net.actor_a();
    Actor b = net.actor_b();
    auto req = a.init_request(kTs, 1000);
    PublicParams detached = net.pps;
    detached.scid[0] ^= 0xff;
    auto res = b.on_request(value(req), 1001, detached, net.ta->crl(), net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::UnknownContract);
}

TEST(Handshake, NewHandshakeReplacesSession) {
    Net net;
    Completed hs = complete_handshake(net, 1000, 1005);
    auto req = hs.a.init_request(kTs, 5000);
    auto rr = hs.b.on_request(value(req), 5001, net.pps, net.ta->crl(), net.ledger);
    ASSERT_TRUE(is_ok(rr));
    EXPECT_EQ(hs.b.session_count(), 1u);  // replaced, not added
    EXPECT_EQ(hs.b.session_for(net.id_a.keypair.pk)->t_start_ms, 5000u);
}

TEST(Data, WireFormatAndDeterminism) {
    Net net;
    Completed hs = complete_handshake(net);
    Bytes m{'h', 'i'};
    DataMessage d1 = hs.a.send_data(hs.rec_on_a, as_span(m), 2000);
    DataMessage d2 = hs.a.send_data(hs.rec_on_a, as_span(m), 2000);
    EXPECT_EQ(d1.encode(), d2.encode());
    EXPECT_EQ(d1.encode().size(), kDataHeaderBytes + m.size());
    auto decoded = DataMessage::decode(as_span(d1.encode()));
    ASSERT_TRUE(decoded.has_value());
    EXPECT_EQ(*decoded, d1);
    // empty payload is legal
    DataMessage empty = hs.a.send_data(hs.rec_on_a, {}, 2000);
    EXPECT_EQ(empty.encode().size(), kDataHeaderBytes);
    EXPECT_EQ(empty.encode().size() * 8, 744u);
}

TEST(Data, AcceptedWithinSessionAndWindow) {
    Net net;
    Completed hs = complete_handshake(net);
    DataMessage msg = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"telemetry"}), 2000);
    auto res = hs.b.on_data(msg, 2003, net.ledger);
    ASSERT_TRUE(is_ok(res));
    EXPECT_EQ(value(res), Bytes({'t', 'e', 'l', 'e', 'm', 'e', 't', 'r', 'y'}));
}

TEST(Data, ContinuityBoundaryExact) {
    Net net;
    Completed hs = complete_handshake(net);
    // T3 - T1 == T_S: accepted
    std::uint64_t at_limit = hs.t1 + kTs;
    DataMessage ok = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"x"}), at_limit);
    auto res_ok = hs.b.on_data(ok, at_limit, net.ledger);
    EXPECT_TRUE(is_ok(res_ok));
    // one millisecond later: session expired
    DataMessage late = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"y"}), at_limit + 1);
    auto res_late = hs.b.on_data(late, at_limit + 1, net.ledger);
    ASSERT_FALSE(is_ok(res_late));
    EXPECT_EQ(reject_reason(res_late), Reject::SessionExpired);
}

TEST(Data, DuplicateWithinWindowRejected) {
    Net net;
    Completed hs = complete_handshake(net);
    DataMessage msg = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"dup"}), 2000);
    EXPECT_TRUE(is_ok(hs.b.on_data(msg, 2001, net.ledger)));
    auto res = hs.b.on_data(msg, 2002, net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::DuplicateMessage);
}

TEST(Data, NoSessionForUnknownSender) {
    Net net;
    Completed hs = complete_handshake(net);
    // a well-signed message from a key that never completed a handshake
    DetRng rng(99);
    KeyPair stranger = keygen(rng, net.pps.curve);
    DataMessage msg{Bytes{'z'}, 2000, stranger.pk, {}};
    msg.sigma3 = sign(stranger.sk, as_span(msg.signed_bytes()), net.pps.curve);
    auto res = hs.b.on_data(msg, 2000, net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::NoSession);
}

TEST(Data, MissingLedgerTransactionRejected) {
    Net net;
    Completed hs = complete_handshake(net);
    Actor fresh_b = net.actor_b();
    SessionRecord broken = hs.rec_on_b;
    broken.txid[0] ^= 0x55;
    fresh_b.restore_session(broken);
    DataMessage msg = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"q"}), 2000);
    auto res = fresh_b.on_data(msg, 2000, net.ledger);
    ASSERT_FALSE(is_ok(res));
    EXPECT_EQ(reject_reason(res), Reject::UnknownTx);
}

// Exhaustive acceptance-soundness table: five predicates (fresh, signature,
// session+tx, continuity, non-duplicate) toggled independently; exactly the
// all-hold row accepts, and the first violated predicate names the reason.
TEST(Data, PredicateCombinationTable) {
    Net net;
    Completed hs = complete_handshake(net);
    int accepts = 0;
    for (unsigned mask = 0; mask < 32; ++mask) {
        bool fresh_ok = mask & 1u;
        bool sig_ok = mask & 2u;
        bool sess_ok = mask & 4u;
        bool cont_ok = mask & 8u;
        bool nodup_ok = mask & 16u;

        Actor receiver = net.actor_b();
        if (sess_ok) receiver.restore_session(hs.rec_on_b);

        std::uint64_t t3 = cont_ok ? hs.t1 + kTs : hs.t1 + kTs + 1;
        DataMessage msg = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"combo"}), t3);
        if (!sig_ok) msg.sigma3.r ^= 1;
        std::uint64_t now = fresh_ok ? t3 : t3 + kDelta + 1;

        if (!nodup_ok && fresh_ok && sig_ok && sess_ok && cont_ok) {
            // seed the replay cache with an accepted copy of the same bytes
            ASSERT_TRUE(is_ok(receiver.on_data(msg, now, net.ledger)));
        }

        auto res = receiver.on_data(msg, now, net.ledger);
        if (!fresh_ok) {
            ASSERT_EQ(reject_reason(res), Reject::StaleTimestamp) << "mask " << mask;
        } else if (!sig_ok) {
            ASSERT_EQ(reject_reason(res), Reject::BadSignature) << "mask " << mask;
        } else if (!sess_ok) {
            ASSERT_EQ(reject_reason(res), Reject::NoSession) << "mask " << mask;
        } else if (!cont_ok) {
            ASSERT_EQ(reject_reason(res), Reject::SessionExpired) << "mask " << mask;
        } else if (!nodup_ok) {
            ASSERT_EQ(reject_reason(res), Reject::DuplicateMessage) << "mask " << mask;
        } else {
            ASSERT_TRUE(is_ok(res)) << "mask " << mask;
            ++accepts;
        }
    }
    EXPECT_EQ(accepts, 1);
}

TEST(Wire, DecodeRejectsStructuralDamage) {
    Net net;
    Completed hs = complete_handshake(net);
    DataMessage msg = hs.a.send_data(hs.rec_on_a, as_span(std::string_view{"abc"}), 2000);
    Bytes wire = msg.encode();
    Bytes wrong_tag = wire;
    wrong_tag[0] = 0x7f;
    EXPECT_FALSE(DataMessage::decode(as_span(wrong_tag)).has_value());
    Bytes truncated(wire.begin(), wire.end() - 1);
    EXPECT_FALSE(DataMessage::decode(as_span(truncated)).has_value());
    Bytes bad_len = wire;
    bad_len[4] += 1;  // length field no longer matches the buffer
    EXPECT_FALSE(DataMessage::decode(as_span(bad_len)).has_value());

    auto req = hs.a.init_request(kTs, 3000);
    Bytes hs_wire = value(req).encode();
    Bytes short_hs(hs_wire.begin(), hs_wire.end() - 1);
    EXPECT_FALSE(HandshakeMessage::decode(as_span(short_hs)).has_value());
}

TEST(ReplayCache, EvictsInFifoOrder) {
    ReplayCache cache(2);
    Digest a{}, b{}, c{};
    a[0] = 1;
    b[0] = 2;
    c[0] = 3;
    cache.insert(a);
    cache.insert(b);
    EXPECT_TRUE(cache.contains(a));
    cache.insert(c);  // evicts a
    EXPECT_FALSE(cache.contains(a));
    EXPECT_TRUE(cache.contains(b));
    EXPECT_TRUE(cache.contains(c));
}

}  // namespace
}  // namespace betauav
