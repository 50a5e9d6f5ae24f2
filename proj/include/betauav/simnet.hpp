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
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "betauav/protocol.hpp"
#include "betauav/rng.hpp"

namespace betauav {

// Derived-seed stream ids per subsystem.
namespace seed_stream {
constexpr std::uint64_t kKeys = 1;
constexpr std::uint64_t kLatency = 2;
constexpr std::uint64_t kReplay = 3;
constexpr std::uint64_t kModify = 4;
constexpr std::uint64_t kImpersonate = 5;
constexpr std::uint64_t kMitm = 6;
}  // namespace seed_stream

/// Deterministic delay: base plus seeded uniform jitter in [0, jitter_ms].
/// A scenario carries one default model plus optional per-link overrides.
struct LatencyModel {
    std::uint64_t base_ms = 5;
    std::uint64_t jitter_ms = 3;
};

struct ScheduleEntry {
    enum class Kind { Handshake, Data };
    std::uint64_t at_ms = 0;
    Kind kind = Kind::Handshake;
    std::string from;
    std::string to;
    Bytes payload;  // Data only
};

/// A complete simulation input: network size, protocol knobs, link model,
/// per-actor clock skew, and the timed action schedule. Actors are named
/// uav0..uavN-1 and gcs0..gcsM-1.
struct Scenario {
    std::uint64_t seed = 1;
    unsigned n_uavs = 2;
    unsigned n_gcs = 0;
    std::uint64_t t_s_ms = 600000;  // session interval, e.g. 00:10:00
    std::uint64_t delta_fresh_ms = 1000;
    std::uint64_t cert_expiry_ms = 1ULL << 40;
    LatencyModel latency;
    std::map<std::pair<std::string, std::string>, LatencyModel> link_latency;
    GasSchedule gas;
    std::vector<ScheduleEntry> schedule;
    std::map<std::string, std::int64_t> skew_ms;

    const LatencyModel& link(const std::string& from, const std::string& to) const {
        auto it = link_latency.find({from, to});
        return it == link_latency.end() ? latency : it->second;
    }

    bool actor_exists(const std::string& name) const {
        if (name.rfind("uav", 0) == 0) {
            unsigned idx = 0;
            if (std::sscanf(name.c_str(), "uav%u", &idx) != 1) return false;
            return name == "uav" + std::to_string(idx) && idx < n_uavs;
        }
        if (name.rfind("gcs", 0) == 0) {
            unsigned idx = 0;
            if (std::sscanf(name.c_str(), "gcs%u", &idx) != 1) return false;
            return name == "gcs" + std::to_string(idx) && idx < n_gcs;
        }
        return false;
    }

    void check() const {
        if (n_uavs < 2) throw InvalidScenarioError("pairwise scenarios need at least 2 UAVs");
        if (t_s_ms == 0) throw InvalidScenarioError("session interval must be positive");
        if (delta_fresh_ms == 0) throw InvalidScenarioError("freshness window must be positive");
        gas.check();
        std::uint64_t prev = 0;
        for (const ScheduleEntry& e : schedule) {
            if (e.at_ms < prev) throw InvalidScenarioError("schedule times must be non-decreasing");
            prev = e.at_ms;
            if (e.from == e.to) throw InvalidScenarioError("schedule entry sends to itself");
            if (!actor_exists(e.from)) throw InvalidScenarioError("unknown actor " + e.from);
            if (!actor_exists(e.to)) throw InvalidScenarioError("unknown actor " + e.to);
        }
        for (const auto& [name, skew] : skew_ms) {
            (void)skew;
            if (!actor_exists(name)) throw InvalidScenarioError("skew for unknown actor " + name);
        }
        for (const auto& [link, model] : link_latency) {
            (void)model;
            if (!actor_exists(link.first) || !actor_exists(link.second))
                throw InvalidScenarioError("link latency for unknown actor pair " + link.first +
                                           " " + link.second);
        }
    }

    /// Built-in base scenario: two UAVs, one handshake, three data messages.
    static Scenario default_two_uav() {
        Scenario s;
        s.schedule = {
            {1000, ScheduleEntry::Kind::Handshake, "uav0", "uav1", {}},
            {2000, ScheduleEntry::Kind::Data, "uav0", "uav1", {'t', 'e', 'l', 'e', 'm', '1'}},
            {3000, ScheduleEntry::Kind::Data, "uav0", "uav1", {'t', 'e', 'l', 'e', 'm', '2'}},
            {4000, ScheduleEntry::Kind::Data, "uav1", "uav0", {'a', 'c', 'k', '1'}},
        };
        return s;
    }

    /// Parses the scenario text format:
    ///   seed N | uavs N | gcs N | session-interval MS | freshness-window MS
    ///   cert-expiry MS | latency BASE JITTER | skew ACTOR MS
    ///   at MS handshake FROM TO
    ///   at MS data FROM TO HEXPAYLOAD
    /// '#' starts a comment; blank lines are ignored.
    static Scenario parse(const std::string& text) {
        Scenario s;
        s.n_gcs = 0;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        auto fail = [&](const std::string& why) {
            throw InvalidScenarioError("scenario line " + std::to_string(lineno) + ": " + why);
        };
        while (std::getline(in, line)) {
            ++lineno;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            std::istringstream ls(line);
            std::string word;
            if (!(ls >> word)) continue;
            auto need_u64 = [&](std::uint64_t& out) {
                if (!(ls >> out)) fail("expected a number after '" + word + "'");
            };
            if (word == "seed") {
                need_u64(s.seed);
            } else if (word == "uavs") {
                std::uint64_t v;
                need_u64(v);
                s.n_uavs = static_cast<unsigned>(v);
            } else if (word == "gcs") {
                std::uint64_t v;
                need_u64(v);
                s.n_gcs = static_cast<unsigned>(v);
            } else if (word == "session-interval") {
                need_u64(s.t_s_ms);
            } else if (word == "freshness-window") {
                need_u64(s.delta_fresh_ms);
            } else if (word == "cert-expiry") {
                need_u64(s.cert_expiry_ms);
            } else if (word == "latency") {
                need_u64(s.latency.base_ms);
                need_u64(s.latency.jitter_ms);
            } else if (word == "link-latency") {
                std::string from, to;
                if (!(ls >> from >> to)) fail("expected 'link-latency FROM TO BASE JITTER'");
                LatencyModel m;
                need_u64(m.base_ms);
                need_u64(m.jitter_ms);
                s.link_latency[{from, to}] = m;
            } else if (word == "gas-deploy") {
                need_u64(s.gas.deploy_gas);
            } else if (word == "gas-issue") {
                need_u64(s.gas.issue_gas);
            } else if (word == "gas-price-gwei") {
                std::string v;
                if (!(ls >> v)) fail("expected a decimal Gwei amount");
                auto wei = parse_gwei(v);
                if (!wei) fail("bad Gwei amount '" + v + "'");
                s.gas.gas_price_wei = *wei;
            } else if (word == "skew") {
                std::string actor;
                std::int64_t v;
                if (!(ls >> actor >> v)) fail("expected 'skew ACTOR MS'");
                s.skew_ms[actor] = v;
            } else if (word == "at") {
                ScheduleEntry e;
                std::string kind;
                if (!(ls >> e.at_ms >> kind >> e.from >> e.to)) fail("expected 'at MS KIND FROM TO'");
                if (kind == "handshake") {
                    e.kind = ScheduleEntry::Kind::Handshake;
                } else if (kind == "data") {
                    e.kind = ScheduleEntry::Kind::Data;
                    std::string hex;
                    if (ls >> hex) {
                        auto payload = from_hex(hex);
                        if (!payload) fail("payload is not valid hex");
                        e.payload = *payload;
                    }
                } else {
                    fail("unknown action '" + kind + "'");
                }
                s.schedule.push_back(std::move(e));
            } else {
                fail("unknown directive '" + word + "'");
            }
        }
        s.check();
        return s;
    }
};

enum class FrameRole { Request, Reply, Data };

inline const char* to_string(FrameRole r) {
    switch (r) {
        case FrameRole::Request: return "request";
        case FrameRole::Reply: return "reply";
        case FrameRole::Data: return "data";
    }
    return "?";
}

struct TranscriptEntry {
    std::uint64_t send_ms = 0;
    std::uint64_t deliver_ms = 0;
    std::string from;
    std::string to;
    Bytes wire;
    std::string outcome;  // HandshakeOk | Accept | Reject(reason) | Error(reason)
};

struct Transcript {
    std::vector<TranscriptEntry> entries;

    /// Line-delimited export for golden-file diffing:
    /// "<send> <deliver> <from> <to> <wire-hex|-> <outcome>".
    std::string export_text() const {
        std::ostringstream out;
        for (const TranscriptEntry& e : entries) {
            out << e.send_ms << ' ' << e.deliver_ms << ' ' << e.from << ' ' << e.to << ' '
                << (e.wire.empty() ? std::string("-") : to_hex(e.wire)) << ' ' << e.outcome
                << '\n';
        }
        return out.str();
    }
};

struct RunMetrics {
    std::map<std::string, OpCounts> per_actor;
    std::uint64_t events = 0;
    std::uint64_t virtual_duration_ms = 0;
};

struct AttackReport {
    std::string kind;  // replay | modify | impersonate | mitm
    std::uint64_t attempts = 0;
    std::uint64_t rejected = 0;
    std::map<std::string, std::uint64_t> reasons;

    void tally(const std::string& outcome) {
        ++attempts;
        if (outcome != "Accept" && outcome != "HandshakeOk") {
            ++rejected;
            ++reasons[outcome];
        } else {
            ++reasons["ACCEPTED:" + outcome];
        }
    }
};

/// Deterministic discrete-event simulation of the UAV ad-hoc network: one
/// virtual clock, one event queue, seeded sub-streams for key generation and
/// link jitter. Also the injection surface for the adversary layer.
class Simulation {
public:
    struct SentFrame {
        FrameRole role = FrameRole::Data;
        std::string from;
        std::string to;
        std::uint64_t send_ms = 0;
        Bytes wire;
        std::string outcome;
    };

    explicit Simulation(Scenario scenario)
        : scenario_(std::move(scenario)), curve_(secp160r1()), ledger_(scenario_.gas),
          latency_rng_(derive_seed(scenario_.seed, seed_stream::kLatency)) {
        scenario_.check();
        DetRng key_rng(derive_seed(scenario_.seed, seed_stream::kKeys));
        auto [ta, pps] = TrustedAuthority::setup(curve_, key_rng, ledger_);
        ta_.emplace(std::move(ta));
        pps_ = std::move(pps);
        ProtocolConfig cfg{scenario_.delta_fresh_ms, 4096};
        for (unsigned i = 0; i < scenario_.n_uavs; ++i) {
            std::string name = "uav" + std::to_string(i);
            actors_.emplace(name, Actor(ta_->register_terminal(Role::UAV, scenario_.cert_expiry_ms,
                                                               key_rng),
                                        curve_, cfg));
        }
        for (unsigned i = 0; i < scenario_.n_gcs; ++i) {
            std::string name = "gcs" + std::to_string(i);
            actors_.emplace(name, Actor(ta_->register_terminal(Role::GCS, scenario_.cert_expiry_ms,
                                                               key_rng),
                                        curve_, cfg));
        }
    }

    const Scenario& scenario() const { return scenario_; }
    Ledger& ledger() { return ledger_; }
    const Ledger& ledger() const { return ledger_; }
    const PublicParams& pps() const { return pps_; }
    TrustedAuthority& ta() { return *ta_; }
    Actor& actor(const std::string& name) { return actors_.at(name); }
    const std::vector<SentFrame>& frames() const { return frames_; }
    const Transcript& transcript() const { return transcript_; }

    /// Executes the schedule. Idempotent per instance: call once.
    const Transcript& run() {
        if (ran_) throw Error("simulation already ran");
        ran_ = true;
        std::uint64_t seq = 0;
        for (const ScheduleEntry& e : scenario_.schedule)
            queue_.push(Event{e.at_ms, seq++, EventKind::Action, &e, {}, FrameRole::Data, "", "", 0});
        while (!queue_.empty()) {
            Event ev = queue_.top();
            queue_.pop();
            if (ev.kind == EventKind::Action) {
                run_action(*ev.action, ev.at_ms, seq);
            } else {
                deliver_frame(ev, seq);
            }
            ++events_;
            last_event_ms_ = ev.at_ms;
        }
        return transcript_;
    }

    RunMetrics metrics() const {
        RunMetrics m;
        for (const auto& [name, actor] : actors_) m.per_actor[name] = actor.counts();
        m.events = events_;
        m.virtual_duration_ms = last_event_ms_;
        return m;
    }

    /// Delivers an arbitrary frame to an actor at a chosen virtual time and
    /// reports the receiver outcome. Used by the adversary layer; does not
    /// touch the honest transcript.
    std::string deliver(const std::string& to, FrameRole role, std::span<const std::uint8_t> wire,
                        std::uint64_t now_ms) {
        Actor& receiver = actors_.at(to);
        std::uint64_t local = local_time(to, now_ms);
        switch (role) {
            case FrameRole::Request: {
                auto msg = HandshakeMessage::decode(wire);
                if (!msg) return "Error(MalformedFrame)";
                auto res = receiver.on_request(*msg, local, pps_, ta_->crl(), ledger_);
                return is_ok(res) ? "HandshakeOk" : reject_str(reject_reason(res));
            }
            case FrameRole::Reply: {
                auto msg = HandshakeMessage::decode(wire);
                if (!msg) return "Error(MalformedFrame)";
                auto res = receiver.on_reply(*msg, local, pps_, ta_->crl(), ledger_);
                return is_ok(res) ? "HandshakeOk" : reject_str(reject_reason(res));
            }
            case FrameRole::Data: {
                auto msg = DataMessage::decode(wire);
                if (!msg) return "Error(MalformedFrame)";
                auto res = receiver.on_data(*msg, local, ledger_);
                return is_ok(res) ? "Accept" : reject_str(reject_reason(res));
            }
        }
        return "Error(MalformedFrame)";
    }

private:
    enum class EventKind { Action, Delivery };

    struct Event {
        std::uint64_t at_ms;
        std::uint64_t seq;
        EventKind kind;
        const ScheduleEntry* action;  // Action only
        Bytes wire;                   // Delivery only
        FrameRole role;
        std::string from;
        std::string to;
        std::uint64_t send_ms;
    };

    struct EventOrder {
        bool operator()(const Event& a, const Event& b) const {
            if (a.at_ms != b.at_ms) return a.at_ms > b.at_ms;
            return a.seq > b.seq;
        }
    };

    static std::string reject_str(Reject r) {
        return std::string("Reject(") + to_string(r) + ")";
    }

    std::uint64_t local_time(const std::string& name, std::uint64_t global_ms) const {
        auto it = scenario_.skew_ms.find(name);
        if (it == scenario_.skew_ms.end()) return global_ms;
        std::int64_t shifted = static_cast<std::int64_t>(global_ms) + it->second;
        return shifted < 0 ? 0 : static_cast<std::uint64_t>(shifted);
    }

    std::uint64_t link_delay(const std::string& from, const std::string& to) {
        const LatencyModel& m = scenario_.link(from, to);
        return m.base_ms + (m.jitter_ms == 0 ? 0 : latency_rng_.below(m.jitter_ms + 1));
    }

    void push_delivery(std::uint64_t& seq, FrameRole role, const std::string& from,
                       const std::string& to, Bytes wire, std::uint64_t send_ms) {
        std::uint64_t deliver_ms = send_ms + link_delay(from, to);
        queue_.push(Event{deliver_ms, seq++, EventKind::Delivery, nullptr, std::move(wire), role,
                          from, to, send_ms});
    }

    void record(const Event& ev, std::string outcome) {
        transcript_.entries.push_back(
            TranscriptEntry{ev.send_ms, ev.at_ms, ev.from, ev.to, ev.wire, outcome});
        frames_.push_back(SentFrame{ev.role, ev.from, ev.to, ev.send_ms, ev.wire, std::move(outcome)});
    }

    void run_action(const ScheduleEntry& e, std::uint64_t at_ms, std::uint64_t& seq) {
        Actor& sender = actors_.at(e.from);
        std::uint64_t local = local_time(e.from, at_ms);
        if (e.kind == ScheduleEntry::Kind::Handshake) {
            auto msg = sender.init_request(scenario_.t_s_ms, local);
            if (!is_ok(msg)) {
                transcript_.entries.push_back(TranscriptEntry{
                    at_ms, at_ms, e.from, e.to, {}, "Error(" +
                        std::string(to_string(reject_reason(msg))) + ")"});
                return;
            }
            push_delivery(seq, FrameRole::Request, e.from, e.to, value(msg).encode(), at_ms);
        } else {
            const SessionRecord* session = sender.session_for(actors_.at(e.to).pk());
            if (session == nullptr) {
                transcript_.entries.push_back(
                    TranscriptEntry{at_ms, at_ms, e.from, e.to, {}, "Error(NoSession)"});
                return;
            }
            DataMessage msg = sender.send_data(*session, as_span(e.payload), local);
            push_delivery(seq, FrameRole::Data, e.from, e.to, msg.encode(), at_ms);
        }
    }

    void deliver_frame(const Event& ev, std::uint64_t& seq) {
        Actor& receiver = actors_.at(ev.to);
        std::uint64_t local = local_time(ev.to, ev.at_ms);
        switch (ev.role) {
            case FrameRole::Request: {
                auto msg = HandshakeMessage::decode(as_span(ev.wire));
                if (!msg) return record(ev, "Error(MalformedFrame)");
                auto res = receiver.on_request(*msg, local, pps_, ta_->crl(), ledger_);
                if (!is_ok(res)) return record(ev, reject_str(reject_reason(res)));
                record(ev, "HandshakeOk");
                push_delivery(seq, FrameRole::Reply, ev.to, ev.from, value(res).reply.encode(),
                              ev.at_ms);
                return;
            }
            case FrameRole::Reply: {
                auto msg = HandshakeMessage::decode(as_span(ev.wire));
                if (!msg) return record(ev, "Error(MalformedFrame)");
                auto res = receiver.on_reply(*msg, local, pps_, ta_->crl(), ledger_);
                record(ev, is_ok(res) ? "HandshakeOk" : reject_str(reject_reason(res)));
                return;
            }
            case FrameRole::Data: {
                auto msg = DataMessage::decode(as_span(ev.wire));
                if (!msg) return record(ev, "Error(MalformedFrame)");
                auto res = receiver.on_data(*msg, local, ledger_);
                record(ev, is_ok(res) ? "Accept" : reject_str(reject_reason(res)));
                return;
            }
        }
    }

    Scenario scenario_;
    CurveParams curve_;
    Ledger ledger_;
    std::optional<TrustedAuthority> ta_;
    PublicParams pps_{secp160r1(), {}, "SHA-256", {}};
    std::map<std::string, Actor> actors_;
    DetRng latency_rng_;
    std::priority_queue<Event, std::vector<Event>, EventOrder> queue_;
    Transcript transcript_;
    std::vector<SentFrame> frames_;
    std::uint64_t events_ = 0;
    std::uint64_t last_event_ms_ = 0;
    bool ran_ = false;
};

/// Runs a scenario end to end.
inline std::pair<Transcript, RunMetrics> run_scenario(const Scenario& s) {
    Simulation sim(s);
    Transcript t = sim.run();
    return {std::move(t), sim.metrics()};
}

namespace detail {

inline void flip_bits(Bytes& wire, std::size_t region_off, std::size_t region_len, DetRng& rng) {
    std::uint64_t nbits = rng.between(1, 8);
    std::vector<std::uint64_t> picked;
    while (picked.size() < nbits) {
        std::uint64_t bit = rng.below(region_len * 8);
        if (std::find(picked.begin(), picked.end(), bit) != picked.end()) continue;
        picked.push_back(bit);
        wire[region_off + bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    }
}

inline const Simulation::SentFrame& pick_frame(const std::vector<Simulation::SentFrame>& frames,
                                               DetRng& rng) {
    return frames[rng.below(frames.size())];
}

inline bool has_accepted_data(const Simulation& sim) {
    for (const auto& f : sim.frames())
        if (f.role == FrameRole::Data && f.outcome == "Accept") return true;
    return false;
}

}  // namespace detail

/// Re-injects recorded frames at attacker-chosen later times, sampled
/// uniformly in (delta_fresh, 10 * t_s] past the original transmission.
inline AttackReport attack_replay(const Scenario& base, std::size_t attempts) {
    Simulation sim(base);
    sim.run();
    if (!detail::has_accepted_data(sim))
        throw InvalidScenarioError("base scenario produced no accepted data message");
    AttackReport report;
    report.kind = "replay";
    DetRng rng(derive_seed(base.seed, seed_stream::kReplay));
    struct Injection {
        std::uint64_t at_ms;
        const Simulation::SentFrame* frame;
    };
    std::vector<Injection> plan;
    plan.reserve(attempts);
    const std::uint64_t offset_lo = base.delta_fresh_ms + 1;
    const std::uint64_t offset_hi = std::max(10 * base.t_s_ms, offset_lo);
    for (std::size_t i = 0; i < attempts; ++i) {
        const auto& frame = detail::pick_frame(sim.frames(), rng);
        std::uint64_t offset = rng.between(offset_lo, offset_hi);
        plan.push_back({frame.send_ms + offset, &frame});
    }
    std::stable_sort(plan.begin(), plan.end(),
                     [](const Injection& a, const Injection& b) { return a.at_ms < b.at_ms; });
    for (const Injection& inj : plan)
        report.tally(sim.deliver(inj.frame->to, inj.frame->role, as_span(inj.frame->wire),
                                 inj.at_ms));
    return report;
}

/// Flips 1-8 random bits in an in-flight frame's payload region (everything
/// after the framing header) and delivers it at the original time.
inline AttackReport attack_modify(const Scenario& base, std::size_t attempts) {
    Simulation sim(base);
    sim.run();
    if (!detail::has_accepted_data(sim))
        throw InvalidScenarioError("base scenario produced no accepted data message");
    AttackReport report;
    report.kind = "modify";
    DetRng rng(derive_seed(base.seed, seed_stream::kModify));
    for (std::size_t i = 0; i < attempts; ++i) {
        const auto& frame = detail::pick_frame(sim.frames(), rng);
        Bytes wire = frame.wire;
        // keep the frame parseable: skip the tag byte (and data length field)
        std::size_t off = frame.role == FrameRole::Data ? 5 : 1;
        detail::flip_bits(wire, off, wire.size() - off, rng);
        report.tally(sim.deliver(frame.to, frame.role, as_span(wire),
                                 frame.send_ms + base.link(frame.from, frame.to).base_ms));
    }
    return report;
}

/// An unregistered adversary tries (a) handshakes with a self-signed
/// certificate, (b) data frames claiming a victim's public key, and
/// (c) replaying a victim's valid certificate under its own signature.
inline AttackReport attack_impersonate(const Scenario& base, std::size_t attempts) {
    Simulation sim(base);
    sim.run();
    AttackReport report;
    report.kind = "impersonate";
    DetRng rng(derive_seed(base.seed, seed_stream::kImpersonate));
    const CurveParams& curve = sim.pps().curve;
    KeyPair adv = keygen(rng, curve);
    Certificate adv_cert{adv.pk, base.cert_expiry_ms, {}};
    adv_cert.sigma_ta = sign(adv.sk, as_span(adv_cert.signed_bytes()), curve);

    std::vector<std::string> names;
    for (unsigned i = 0; i < base.n_uavs; ++i) names.push_back("uav" + std::to_string(i));
    std::uint64_t t0 = 20 * base.t_s_ms;
    for (std::size_t i = 0; i < attempts; ++i) {
        std::uint64_t now = t0 + i;
        std::size_t vi = rng.below(names.size());
        std::size_t ti = rng.below(names.size() - 1);
        const std::string& victim = names[vi];
        const std::string& target = names[ti >= vi ? ti + 1 : ti];
        switch (i % 3) {
            case 0: {  // self-signed certificate handshake
                HandshakeMessage msg{adv_cert, now, base.t_s_ms, {}};
                msg.sigma = sign(adv.sk, as_span(msg.signed_bytes()), curve);
                report.tally(sim.deliver(target, FrameRole::Request, as_span(msg.encode()), now));
                break;
            }
            case 1: {  // data frame under the victim's pk, adversary-signed
                DataMessage msg{Bytes{'o', 'w', 'n', 'e', 'd'}, now,
                                sim.actor(victim).pk(), {}};
                msg.sigma3 = sign(adv.sk, as_span(msg.signed_bytes()), curve);
                report.tally(sim.deliver(target, FrameRole::Data, as_span(msg.encode()), now));
                break;
            }
            default: {  // victim's valid certificate, adversary-signed tuple
                HandshakeMessage msg{sim.actor(victim).identity().cert, now, base.t_s_ms, {}};
                msg.sigma = sign(adv.sk, as_span(msg.signed_bytes()), curve);
                report.tally(sim.deliver(target, FrameRole::Request, as_span(msg.encode()), now));
                break;
            }
        }
    }
    return report;
}

/// Dolev-Yao interception of handshake tuples: certificate substitution with
/// re-signing, field splices between the two directions, key substitution
/// inside a valid certificate, and session-interval tampering.
inline AttackReport attack_mitm(const Scenario& base, std::size_t attempts) {
    Simulation sim(base);
    sim.run();
    AttackReport report;
    report.kind = "mitm";
    DetRng rng(derive_seed(base.seed, seed_stream::kMitm));
    const CurveParams& curve = sim.pps().curve;
    KeyPair adv = keygen(rng, curve);
    Certificate adv_cert{adv.pk, base.cert_expiry_ms, {}};
    adv_cert.sigma_ta = sign(adv.sk, as_span(adv_cert.signed_bytes()), curve);

    std::vector<const Simulation::SentFrame*> handshakes;
    for (const auto& f : sim.frames())
        if (f.role != FrameRole::Data) handshakes.push_back(&f);
    if (handshakes.size() < 2)
        throw InvalidScenarioError("base scenario carries no handshake to intercept");

    for (std::size_t i = 0; i < attempts; ++i) {
        const auto& frame = *handshakes[rng.below(handshakes.size())];
        auto msg = *HandshakeMessage::decode(as_span(frame.wire));
        std::uint64_t now = frame.send_ms + base.link(frame.from, frame.to).base_ms;
        switch (i % 4) {
            case 0:  // substitute the adversary's own certificate, re-sign
                msg.cert = adv_cert;
                msg.sigma = sign(adv.sk, as_span(msg.signed_bytes()), curve);
                break;
            case 1: {  // splice: certificate from one direction, rest from the other
                const auto* other = handshakes[rng.below(handshakes.size())];
                while (other == &frame) other = handshakes[rng.below(handshakes.size())];
                msg.cert = HandshakeMessage::decode(as_span(other->wire))->cert;
                break;
            }
            case 2:  // substitute pk inside the certificate, keep the TA signature
                msg.cert.pk = adv.pk;
                msg.sigma = sign(adv.sk, as_span(msg.signed_bytes()), curve);
                break;
            default:  // stretch the session interval, keep the original signature
                msg.t_s_ms *= 10;
                break;
        }
        report.tally(sim.deliver(frame.to, frame.role, as_span(msg.encode()), now));
    }
    return report;
}

}  // namespace betauav
