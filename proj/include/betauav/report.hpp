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

#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <string>

#include "betauav/ledger.hpp"
#include "betauav/metrics.hpp"
#include "betauav/simnet.hpp"

namespace betauav {

enum class ReportFormat { Table, Machine };

/// Machine format: versioned header line "#betauav-report v1 kind=<kind>"
/// followed by one key=value record per line, in a fixed emission order, so
/// outputs are byte-stable under fixed seed and config.
class MachineReport {
public:
    explicit MachineReport(const std::string& kind) {
        out_ << "#betauav-report v1 kind=" << kind << '\n';
    }

    MachineReport& add(const std::string& key, const std::string& value) {
        out_ << key << '=' << value << '\n';
        return *this;
    }
    MachineReport& add(const std::string& key, std::uint64_t value) {
        return add(key, std::to_string(value));
    }
    MachineReport& add(const std::string& key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", value);
        return add(key, std::string(buf));
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

inline std::string format_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// --- gas -------------------------------------------------------------------

inline constexpr const char* kGasDerivationNote =
    "gas units derived as round(reference ETH / gas price); reference costs are "
    "annotations, not measurements";

inline std::string render_gas(const GasReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        MachineReport m("gas");
        m.add("schedule.deploy_gas", r.schedule.deploy_gas);
        m.add("schedule.issue_gas", r.schedule.issue_gas);
        m.add("schedule.gas_price_gwei", r.schedule.gas_price_gwei());
        m.add("schedule.gas_price_wei", r.schedule.gas_price_wei);
        m.add("deploy.count", r.deploy.count);
        m.add("deploy.gas_units", r.deploy.gas_units);
        m.add("deploy.eth", r.deploy.eth());
        m.add("issue.count", r.issue.count);
        m.add("issue.gas_units", r.issue.gas_units);
        m.add("issue.eth", r.issue.eth());
        if (r.issue.count > 0)
            m.add("issue.per_tx_eth",
                  format_eth(Wei(r.schedule.issue_gas) * r.schedule.gas_price_wei));
        m.add("total.count", r.total().count);
        m.add("total.gas_units", r.total().gas_units);
        m.add("total.eth", r.total().eth());
        m.add("reference.deploy.actual_eth", "0.000555");
        m.add("reference.deploy.estimated_eth", "0.0005499");
        m.add("reference.deploy.derived_gas_units", std::uint64_t{216249});
        m.add("reference.issue.actual_eth", "0.000238");
        m.add("reference.issue.estimated_eth", "0.00023767");
        m.add("reference.issue.derived_gas_units", std::uint64_t{92734});
        m.add("reference.note", kGasDerivationNote);
        return m.str();
    }
    std::ostringstream out;
    out << "gas report (price " << r.schedule.gas_price_gwei() << " Gwei)\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-14s %8s %12s %22s\n", "function", "count", "gas units",
                  "ETH");
    out << line;
    auto row = [&](const char* name, const GasReport::Row& rr) {
        std::snprintf(line, sizeof(line), "  %-14s %8" PRIu64 " %12" PRIu64 " %22s\n", name,
                      rr.count, rr.gas_units, rr.eth().c_str());
        out << line;
    };
    row("deploy", r.deploy);
    row("issue-session", r.issue);
    row("total", r.total());
    out << "  reference actual costs: deploy 0.000555 ETH, issue 0.000238 ETH\n";
    out << "  reference estimated costs: deploy 0.0005499 ETH, issue 0.00023767 ETH\n";
    out << "  " << kGasDerivationNote << "\n";
    return out.str();
}

// --- communication cost ----------------------------------------------------

inline constexpr const char* kCommClaimNote =
    "claimed total carried as an annotation; its addends (160+256+40+100) do not "
    "reconcile with the computed wire layout and are not reproducible";

inline std::string render_comm_cost(const CommCostReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        MachineReport m("comm-cost");
        m.add("wire.handshake.bytes", std::uint64_t{r.handshake_bytes});
        m.add("wire.handshake.bits", std::uint64_t{r.handshake_bits()});
        m.add("wire.data.payload_len", std::uint64_t{r.data_len});
        m.add("wire.data.bytes", std::uint64_t{r.data_bytes});
        m.add("wire.data.bits", std::uint64_t{r.data_bits()});
        m.add("claimed.total_bits", std::uint64_t{CommCostReport::kClaimedTotalBits});
        m.add("claimed.status", "unreconciled");
        m.add("claimed.note", kCommClaimNote);
        m.add("claimed.component_bits", "32,256,160,128");
        m.add("claimed.component_note",
              "stated component sizes cannot be mapped item-to-item onto the six named fields");
        m.add("compare.scheme8.bits", std::uint64_t{CommCostReport::kComparisonBits[0]});
        m.add("compare.scheme9.bits", std::uint64_t{CommCostReport::kComparisonBits[1]});
        m.add("compare.scheme10.bits", std::uint64_t{CommCostReport::kComparisonBits[2]});
        m.add("compare.scheme11.bits", std::uint64_t{CommCostReport::kComparisonBits[3]});
        return m.str();
    }
    std::ostringstream out;
    out << "communication cost\n";
    out << "  handshake message: " << r.handshake_bytes << " bytes = " << r.handshake_bits()
        << " bits\n";
    out << "  data message (payload " << r.data_len << " bytes): " << r.data_bytes
        << " bytes = " << r.data_bits() << " bits\n";
    out << "  claimed total: " << CommCostReport::kClaimedTotalBits
        << " bits [unreconciled]\n";
    out << "  " << kCommClaimNote << "\n";
    out << "  claimed component sizes: 32, 256, 160, 128 bits (not mappable item-to-item)\n";
    out << "  comparison schemes [8]-[11]: " << CommCostReport::kComparisonBits[0] << ", "
        << CommCostReport::kComparisonBits[1] << ", " << CommCostReport::kComparisonBits[2]
        << ", " << CommCostReport::kComparisonBits[3] << " bits\n";
    return out.str();
}

// --- primitive benchmark and computation-cost comparison --------------------

inline std::string render_bench(const PrimitiveTimings& t, const ComputationComparison& cmp,
                                ReportFormat fmt) {
    PrimitiveTimings pf1 = PrimitiveTimings::reference_pf1();
    PrimitiveTimings pf2 = PrimitiveTimings::reference_pf2();
    if (fmt == ReportFormat::Machine) {
        MachineReport m("bench");
        m.add("platform", t.platform);
        m.add("iterations", t.iterations);
        m.add("tau_ima.measured_ms", t.tau_ima_ms);
        m.add("tau_ima.reference_pf1_ms", pf1.tau_ima_ms);
        m.add("tau_ima.reference_pf2_ms", pf2.tau_ima_ms);
        m.add("tau_ipa.measured_ms", t.tau_ipa_ms);
        m.add("tau_ipa.reference_pf1_ms", pf1.tau_ipa_ms);
        m.add("tau_ipa.reference_pf2_ms", pf2.tau_ipa_ms);
        m.add("tau_hf.measured_ms", t.tau_hf_ms);
        m.add("tau_hf.reference_pf1_ms", pf1.tau_hf_ms);
        m.add("tau_hf.reference_pf2_ms", pf2.tau_hf_ms);
        m.add("tau_enc.measured_ms", t.tau_enc_ms);
        m.add("tau_enc.reference_pf1_ms", pf1.tau_enc_ms);
        m.add("tau_enc.reference_pf2_ms", pf2.tau_enc_ms);
        m.add("note", "reference columns: reference hardware, not reproduced here");
        for (const SchemeCost& s : cmp.related) {
            std::string p = "compare." + s.label;
            m.add(p + ".formula", s.formula());
            m.add(p + ".evaluated_ms", s.evaluated_ms(t));
            if (s.fuzzy_extractor) m.add(p + ".fe_term", "unevaluated");
            m.add(p + ".claimed_ms", s.claimed_ms);
        }
        m.add("own.handshake.scalar_mul", cmp.handshake_ops.scalar_mul);
        m.add("own.handshake.point_add", cmp.handshake_ops.point_add);
        m.add("own.handshake.hash", cmp.handshake_ops.hash);
        m.add("own.handshake.evaluated_ms", cmp.own_evaluated_ms());
        m.add("own.claimed_ms", ComputationComparison::kClaimedOwnMs);
        m.add("own.claimed_status", "unreconciled");
        return m.str();
    }
    std::ostringstream out;
    out << "primitive timings (" << t.platform << ", mean over " << t.iterations
        << " iterations)\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-9s %-26s %12s %10s %10s\n", "notation", "primitive",
                  "measured ms", "PF-1 ms", "PF-2 ms");
    out << line;
    auto row = [&](const char* sym, const char* name, double v, double r1, double r2) {
        std::snprintf(line, sizeof(line), "  %-9s %-26s %12.6f %10.3f %10.3f\n", sym, name, v, r1,
                      r2);
        out << line;
    };
    row("tau_ima", "scalar multiplication", t.tau_ima_ms, pf1.tau_ima_ms, pf2.tau_ima_ms);
    row("tau_ipa", "point addition", t.tau_ipa_ms, pf1.tau_ipa_ms, pf2.tau_ipa_ms);
    row("tau_hf", "hash function H1", t.tau_hf_ms, pf1.tau_hf_ms, pf2.tau_hf_ms);
    row("tau_enc", "SHA-256 (64-byte block)", t.tau_enc_ms, pf1.tau_enc_ms, pf2.tau_enc_ms);
    out << "  PF-1/PF-2 columns: reference hardware, not reproduced here\n";
    out << "computation-cost comparison (evaluated with measured timings)\n";
    std::snprintf(line, sizeof(line), "  %-12s %-34s %14s %12s\n", "scheme", "cost expression",
                  "evaluated ms", "claimed ms");
    out << line;
    for (const SchemeCost& s : cmp.related) {
        std::string formula = s.formula();
        std::snprintf(line, sizeof(line), "  %-12s %-34s %14.6f %12.3f\n", s.label.c_str(),
                      formula.c_str(), s.evaluated_ms(t), s.claimed_ms);
        out << line;
        if (s.fuzzy_extractor)
            out << "               (tau_fe term has no implementation; excluded above)\n";
    }
    std::snprintf(line, sizeof(line), "  %-12s %-34s %14.6f %12.3f\n", "this work",
                  "per-handshake operation counts", cmp.own_evaluated_ms(),
                  ComputationComparison::kClaimedOwnMs);
    out << line;
    out << "  claimed own-scheme total is unreconciled: the source expression is malformed\n";
    return out.str();
}

// --- delay curve -----------------------------------------------------------

inline std::string render_delay_curve(const DelayCurve& c, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        MachineReport m("delay-curve");
        m.add("timings.platform", c.timings.platform);
        m.add("timings.tau_ima_ms", c.timings.tau_ima_ms);
        m.add("timings.tau_ipa_ms", c.timings.tau_ipa_ms);
        m.add("timings.tau_hf_ms", c.timings.tau_hf_ms);
        m.add("note", "delay = op counts x primitive timings; reference timings are from "
                      "reference hardware, not reproduced here");
        for (const auto& s : c.samples) {
            std::string p = "point." + std::to_string(s.n_drones);
            m.add(p + ".n_drones", std::uint64_t{s.n_drones});
            m.add(p + ".sessions", std::uint64_t{s.n_drones} * (s.n_drones - 1) / 2);
            m.add(p + ".scalar_mul", s.ops.scalar_mul);
            m.add(p + ".point_add", s.ops.point_add);
            m.add(p + ".hash", s.ops.hash);
            m.add(p + ".sign", s.ops.sign);
            m.add(p + ".verify", s.ops.verify);
            m.add(p + ".delay_ms", s.delay_ms);
        }
        return m.str();
    }
    std::ostringstream out;
    out << "computational delay vs number of drones (timings: " << c.timings.platform << ")\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %8s %10s %12s %12s %10s %14s\n", "drones", "sessions",
                  "scalar-mul", "point-add", "hash", "delay ms");
    out << line;
    for (const auto& s : c.samples) {
        std::snprintf(line, sizeof(line),
                      "  %8u %10u %12" PRIu64 " %12" PRIu64 " %10" PRIu64 " %14.6f\n", s.n_drones,
                      s.n_drones * (s.n_drones - 1) / 2, s.ops.scalar_mul, s.ops.point_add,
                      s.ops.hash, s.delay_ms);
        out << line;
    }
    out << "  delay = op counts x primitive timings; reference timings are from reference "
           "hardware, not reproduced here\n";
    return out.str();
}

// --- attack reports --------------------------------------------------------

inline std::string render_attack(const AttackReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        MachineReport m("attack");
        m.add("attack.kind", r.kind);
        m.add("attack.attempts", r.attempts);
        m.add("attack.rejected", r.rejected);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f",
                      r.attempts == 0 ? 1.0
                                      : static_cast<double>(r.rejected) /
                                            static_cast<double>(r.attempts));
        m.add("attack.rejection_rate", std::string(buf));
        for (const auto& [reason, count] : r.reasons) m.add("reason." + reason, count);
        return m.str();
    }
    std::ostringstream out;
    out << "attack report: " << r.kind << '\n';
    out << "  attempts: " << r.attempts << "  rejected: " << r.rejected << '\n';
    for (const auto& [reason, count] : r.reasons)
        out << "    " << reason << ": " << count << '\n';
    return out.str();
}

// --- scenario run ----------------------------------------------------------

inline std::string render_run(const Transcript& t, const RunMetrics& m, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        MachineReport r("scenario-run");
        r.add("events", m.events);
        r.add("virtual_duration_ms", m.virtual_duration_ms);
        std::size_t i = 0;
        for (const TranscriptEntry& e : t.entries) {
            std::ostringstream line;
            line << e.send_ms << ' ' << e.deliver_ms << ' ' << e.from << ' ' << e.to << ' '
                 << (e.wire.empty() ? std::string("-") : to_hex(e.wire)) << ' ' << e.outcome;
            r.add("transcript." + std::to_string(i++), line.str());
        }
        for (const auto& [name, ops] : m.per_actor) {
            r.add("actor." + name + ".scalar_mul", ops.scalar_mul);
            r.add("actor." + name + ".point_add", ops.point_add);
            r.add("actor." + name + ".hash", ops.hash);
            r.add("actor." + name + ".sign", ops.sign);
            r.add("actor." + name + ".verify", ops.verify);
        }
        return r.str();
    }
    std::ostringstream out;
    out << "transcript (" << t.entries.size() << " deliveries, " << m.events << " events)\n";
    for (const TranscriptEntry& e : t.entries) {
        out << "  [" << e.send_ms << " -> " << e.deliver_ms << "] " << e.from << " -> " << e.to
            << "  " << (e.wire.empty() ? 0 : e.wire.size()) << "B  " << e.outcome << '\n';
    }
    out << "per-actor primitive counts\n";
    for (const auto& [name, ops] : m.per_actor) {
        out << "  " << name << ": scalar-mul " << ops.scalar_mul << ", point-add "
            << ops.point_add << ", hash " << ops.hash << ", sign " << ops.sign << ", verify "
            << ops.verify << '\n';
    }
    return out.str();
}

}  // namespace betauav
