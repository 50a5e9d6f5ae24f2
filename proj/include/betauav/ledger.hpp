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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "betauav/curve.hpp"
#include "betauav/errors.hpp"
#include "betauav/hash.hpp"

namespace betauav {

using ContractAddress = Digest;

/// Gas units per transaction kind and the gas price. The price is held in
/// wei (1 Gwei = 10^9 wei) so every cost in the report is exact integer
/// arithmetic. Defaults reproduce the reference deployment costs:
/// 216249 * 2.566484836 Gwei ~= 0.000555 ETH, 92734 * 2.566484836 Gwei
/// ~= 0.000238 ETH.
struct GasSchedule {
    std::uint64_t deploy_gas = 216249;
    std::uint64_t issue_gas = 92734;
    std::uint64_t gas_price_wei = 2566484836;  // 2.566484836 Gwei

    void check() const {
        if (deploy_gas == 0 || issue_gas == 0 || gas_price_wei == 0)
            throw std::invalid_argument("gas schedule values must be strictly positive");
    }

    /// Price as a decimal Gwei string, e.g. "2.566484836".
    std::string gas_price_gwei() const {
        std::uint64_t whole = gas_price_wei / 1000000000ULL;
        std::uint64_t frac = gas_price_wei % 1000000000ULL;
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%llu.%09llu", static_cast<unsigned long long>(whole),
                      static_cast<unsigned long long>(frac));
        std::string s(buf);
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
        return s;
    }
};

/// Parses a decimal Gwei amount ("2.566484836") into wei.
inline std::optional<std::uint64_t> parse_gwei(const std::string& text) {
    auto dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (frac.size() > 9) return std::nullopt;
    frac.resize(9, '0');
    try {
        std::uint64_t w = whole.empty() ? 0 : std::stoull(whole);
        return w * 1000000000ULL + std::stoull(frac);
    } catch (...) {
        return std::nullopt;
    }
}

/// Wei amounts can exceed 64 bits for large transaction counts.
using Wei = U256;

/// Formats an amount of wei as a fixed 18-decimal ETH string.
inline std::string format_eth(Wei wei) {
    const Wei one_eth = Wei(1000000000ULL) * 1000000000ULL;
    Wei whole = wei / one_eth;
    Wei frac = wei % one_eth;
    std::string whole_s;
    if (whole == 0) whole_s = "0";
    while (whole != 0) {
        whole_s.insert(whole_s.begin(),
                       static_cast<char>('0' + static_cast<unsigned>(whole % 10)));
        whole /= 10;
    }
    std::string frac_s(18, '0');
    for (int i = 17; i >= 0; --i) {
        frac_s[static_cast<std::size_t>(i)] =
            static_cast<char>('0' + static_cast<unsigned>(frac % 10));
        frac /= 10;
    }
    return whole_s + "." + frac_s;
}

enum class TxKind : std::uint8_t { Deploy = 0x01, IssueSession = 0x02 };

inline const char* to_string(TxKind k) {
    return k == TxKind::Deploy ? "deploy" : "issue-session";
}

struct SessionPayload {
    Point pk_from;
    Point pk_to;
    std::uint64_t t_issue_ms = 0;
    friend bool operator==(const SessionPayload&, const SessionPayload&) = default;
};

/// Immutable ledger record. txid = H1(kind || caller || payload || block_index),
/// so identical payloads at different heights still get distinct addresses.
struct LedgerTransaction {
    Digest txid{};
    TxKind kind = TxKind::Deploy;
    Point caller;
    std::variant<Digest, SessionPayload> payload;  // Deploy: bytecode hash
    std::uint64_t block_index = 0;
    std::uint64_t gas_used = 0;

    Bytes payload_bytes() const {
        if (kind == TxKind::Deploy) {
            const Digest& d = std::get<Digest>(payload);
            return Bytes(d.begin(), d.end());
        }
        const SessionPayload& s = std::get<SessionPayload>(payload);
        Bytes out = encode_point(s.pk_from);
        append(out, as_span(encode_point(s.pk_to)));
        put_u64_be(out, s.t_issue_ms);
        return out;
    }

    Bytes canonical_bytes() const {
        Bytes out;
        out.push_back(static_cast<std::uint8_t>(kind));
        append(out, as_span(encode_point(caller)));
        append(out, as_span(payload_bytes()));
        put_u64_be(out, block_index);
        return out;
    }
};

/// Per-contract state kept by the emulated chain.
struct ContractState {
    ContractAddress scid{};
    // pk_from (encoded) -> txids ordered by block index
    std::map<Bytes, std::vector<Digest>> registry;
};

struct GasReport {
    struct Row {
        std::uint64_t count = 0;
        std::uint64_t gas_units = 0;
        Wei wei = 0;
        std::string eth() const { return format_eth(wei); }
    };
    Row deploy;
    Row issue;
    GasSchedule schedule;

    Row total() const {
        return Row{deploy.count + issue.count, deploy.gas_units + issue.gas_units,
                   deploy.wei + issue.wei};
    }
};

/// In-process emulation of the public chain: an append-only, totally ordered
/// transaction log (one transaction per block) plus the session-registry
/// smart contract. Mutations must be serialized by the caller; the simulator
/// event loop is that serialization point.
class Ledger {
public:
    explicit Ledger(GasSchedule schedule = {}) : schedule_(schedule) { schedule_.check(); }

    const GasSchedule& schedule() const { return schedule_; }

    /// Appends a Deploy transaction; the new contract's address is the txid.
    std::pair<ContractAddress, Digest> deploy_contract(const Point& caller) {
        static const std::string kBytecodeTag = "betauav-session-registry-v1";
        LedgerTransaction tx;
        tx.kind = TxKind::Deploy;
        tx.caller = caller;
        tx.payload = h1(kBytecodeTag);
        tx.gas_used = schedule_.deploy_gas;
        const Digest txid = append_tx(std::move(tx));
        contracts_.emplace(txid, ContractState{txid, {}});
        return {txid, txid};
    }

    bool has_contract(const ContractAddress& scid) const {
        return contracts_.count(scid) != 0;
    }

    /// Smart-contract entry point: records an authenticated session
    /// (pk_from, pk_to, t) and returns the transaction address.
    Digest issue_session(const ContractAddress& scid, const Point& caller, const Point& pk_from,
                         const Point& pk_to, std::uint64_t t_issue_ms) {
        auto it = contracts_.find(scid);
        if (it == contracts_.end())
            throw UnknownContractError("no contract deployed at " + to_hex(scid));
        LedgerTransaction tx;
        tx.kind = TxKind::IssueSession;
        tx.caller = caller;
        tx.payload = SessionPayload{pk_from, pk_to, t_issue_ms};
        tx.gas_used = schedule_.issue_gas;
        const Digest txid = append_tx(std::move(tx));
        it->second.registry[encode_point(pk_from)].push_back(txid);
        pair_index_[pair_key(pk_from, pk_to)].push_back(txid);
        return txid;
    }

    const LedgerTransaction* find_tx(const Digest& txid) const {
        auto it = by_txid_.find(txid);
        return it == by_txid_.end() ? nullptr : &log_[it->second];
    }

    const LedgerTransaction& get_tx(const Digest& txid) const {
        if (const LedgerTransaction* tx = find_tx(txid)) return *tx;
        throw UnknownTxError("no transaction " + to_hex(txid));
    }

    /// Most recent IssueSession txid whose payload matches (pk_from, pk_to).
    std::optional<Digest> latest_tx_for(const Point& pk_from, const Point& pk_to) const {
        auto it = pair_index_.find(pair_key(pk_from, pk_to));
        if (it == pair_index_.end() || it->second.empty()) return std::nullopt;
        return it->second.back();
    }

    const ContractState& contract(const ContractAddress& scid) const {
        auto it = contracts_.find(scid);
        if (it == contracts_.end())
            throw UnknownContractError("no contract deployed at " + to_hex(scid));
        return it->second;
    }

    const std::vector<LedgerTransaction>& log() const { return log_; }
    std::size_t size() const { return log_.size(); }

    GasReport gas_report() const {
        GasReport r;
        r.schedule = schedule_;
        for (const LedgerTransaction& tx : log_) {
            GasReport::Row& row = tx.kind == TxKind::Deploy ? r.deploy : r.issue;
            row.count += 1;
            row.gas_units += tx.gas_used;
            row.wei += Wei(tx.gas_used) * schedule_.gas_price_wei;
        }
        return r;
    }

    /// One line per transaction: txid, kind, payload hex, block index, gas.
    std::string dump() const {
        std::ostringstream out;
        for (const LedgerTransaction& tx : log_) {
            out << to_hex(tx.txid) << ' ' << to_string(tx.kind) << ' ' << to_hex(tx.payload_bytes())
                << ' ' << tx.block_index << ' ' << tx.gas_used << '\n';
        }
        return out.str();
    }

private:
    static Bytes pair_key(const Point& pk_from, const Point& pk_to) {
        Bytes k = encode_point(pk_from);
        append(k, as_span(encode_point(pk_to)));
        return k;
    }

    Digest append_tx(LedgerTransaction tx) {
        tx.block_index = log_.size();
        tx.txid = h1(tx.canonical_bytes());
        by_txid_.emplace(tx.txid, log_.size());
        log_.push_back(std::move(tx));
        return log_.back().txid;
    }

    GasSchedule schedule_;
    std::vector<LedgerTransaction> log_;
    std::map<Digest, std::size_t> by_txid_;
    std::map<ContractAddress, ContractState> contracts_;
    std::map<Bytes, std::vector<Digest>> pair_index_;
};

}  // namespace betauav
