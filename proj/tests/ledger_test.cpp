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

#include "betauav/ledger.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "betauav/ecdsa.hpp"

namespace betauav {
namespace {

Point test_point(std::uint64_t seed) {
    DetRng rng(seed);
    return keygen(rng, secp160r1()).pk;
}

TEST(GasSchedule, DefaultsAndPriceFormatting) {
    GasSchedule s;
    EXPECT_EQ(s.deploy_gas, 216249u);
    EXPECT_EQ(s.issue_gas, 92734u);
    EXPECT_EQ(s.gas_price_wei, 2566484836u);
    EXPECT_EQ(s.gas_price_gwei(), "2.566484836");
    EXPECT_THROW((GasSchedule{0, 1, 1}.check()), std::invalid_argument);
}

TEST(GasSchedule, GweiParsing) {
    EXPECT_EQ(parse_gwei("2.566484836"), 2566484836u);
    EXPECT_EQ(parse_gwei("1"), 1000000000u);
    EXPECT_EQ(parse_gwei("0.5"), 500000000u);
    EXPECT_FALSE(parse_gwei("1.0123456789").has_value());  // > 9 fractional digits
    EXPECT_FALSE(parse_gwei("x").has_value());
}

TEST(EthFormatting, EighteenDecimals) {
    EXPECT_EQ(format_eth(0), "0.000000000000000000");
    EXPECT_EQ(format_eth(1), "0.000000000000000001");
    Wei one_eth = Wei(1000000000ULL) * 1000000000ULL;
    EXPECT_EQ(format_eth(one_eth), "1.000000000000000000");
    EXPECT_EQ(format_eth(one_eth * 3 + 42), "3.000000000000000042");
}

TEST(Ledger, DeployCostsMatchReference) {
    Ledger ledger;
    auto [scid, txid] = ledger.deploy_contract(test_point(1));
    EXPECT_EQ(scid, txid);
    const LedgerTransaction& tx = ledger.get_tx(scid);
    EXPECT_EQ(tx.kind, TxKind::Deploy);
    EXPECT_EQ(tx.gas_used, 216249u);
    GasReport r = ledger.gas_report();
    // 216249 * 2.566484836 Gwei; reference actual cost is 0.000555 ETH
    EXPECT_EQ(r.deploy.eth(), "0.000554999779300164");
}

TEST(Ledger, IssueCostsMatchReference) {
    Ledger ledger;
    auto [scid, txid] = ledger.deploy_contract(test_point(1));
    (void)txid;
    ledger.issue_session(scid, test_point(2), test_point(3), test_point(2), 1000);
    GasReport r = ledger.gas_report();
    // 92734 * 2.566484836 Gwei; reference actual cost is 0.000238 ETH
    EXPECT_EQ(r.issue.eth(), "0.000238000404781624");
}

TEST(Ledger, TwoDeploysGetDistinctAddresses) {
    Ledger ledger;
    auto [scid1, tx1] = ledger.deploy_contract(test_point(1));
    auto [scid2, tx2] = ledger.deploy_contract(test_point(1));
    EXPECT_NE(scid1, scid2);
    EXPECT_TRUE(ledger.has_contract(scid1));
    EXPECT_TRUE(ledger.has_contract(scid2));
}

TEST(Ledger, IssuePayloadRoundTripsExactly) {
    Ledger ledger;
    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    Point from = test_point(2), to = test_point(3);
    Digest txid = ledger.issue_session(scid, to, from, to, 123456789);
    const LedgerTransaction& tx = ledger.get_tx(txid);
    ASSERT_EQ(tx.kind, TxKind::IssueSession);
    const auto& payload = std::get<SessionPayload>(tx.payload);
    EXPECT_EQ(payload.pk_from, from);
    EXPECT_EQ(payload.pk_to, to);
    EXPECT_EQ(payload.t_issue_ms, 123456789u);
    EXPECT_EQ(tx.gas_used, 92734u);
}

TEST(Ledger, UnknownContractAndTxRejected) {
    Ledger ledger;
    Digest bogus{};
    bogus[0] = 0xab;
    EXPECT_THROW(ledger.issue_session(bogus, test_point(1), test_point(2), test_point(1), 0),
                 UnknownContractError);
    EXPECT_THROW(ledger.get_tx(bogus), UnknownTxError);
    EXPECT_EQ(ledger.find_tx(bogus), nullptr);
}

TEST(Ledger, LatestTxForOrdersByHeight) {
    Ledger ledger;
    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    Point a = test_point(2), b = test_point(3);
    EXPECT_FALSE(ledger.latest_tx_for(a, b).has_value());
    Digest t1 = ledger.issue_session(scid, b, a, b, 100);
    EXPECT_EQ(ledger.latest_tx_for(a, b), t1);
    Digest t2 = ledger.issue_session(scid, b, a, b, 200);
    EXPECT_EQ(ledger.latest_tx_for(a, b), t2);
    EXPECT_FALSE(ledger.latest_tx_for(b, a).has_value());  // direction matters
}

TEST(Ledger, TxidRehashesToItself) {
    Ledger ledger;
    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    for (std::uint64_t i = 0; i < 100; ++i)
        ledger.issue_session(scid, test_point(2), test_point(3), test_point(2), i);
    for (const LedgerTransaction& tx : ledger.log())
        EXPECT_EQ(h1(tx.canonical_bytes()), tx.txid);
}

TEST(Ledger, RegistryConsistent) {
    Ledger ledger;
    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    Point a = test_point(2), b = test_point(3), c = test_point(4);
    ledger.issue_session(scid, b, a, b, 1);
    ledger.issue_session(scid, c, a, c, 2);
    ledger.issue_session(scid, a, b, a, 3);
    const ContractState& state = ledger.contract(scid);
    std::size_t entries = 0;
    for (const auto& [pk_from, txids] : state.registry) {
        for (const Digest& txid : txids) {
            const LedgerTransaction* tx = ledger.find_tx(txid);
            ASSERT_NE(tx, nullptr);
            EXPECT_EQ(encode_point(std::get<SessionPayload>(tx->payload).pk_from), pk_from);
            ++entries;
        }
    }
    EXPECT_EQ(entries, 3u);
}

TEST(Ledger, GasReportZeroWhenEmptyAndLinearInCount) {
    Ledger ledger;
    GasReport empty = ledger.gas_report();
    EXPECT_EQ(empty.deploy.count, 0u);
    EXPECT_EQ(empty.issue.count, 0u);
    EXPECT_EQ(empty.total().gas_units, 0u);
    EXPECT_EQ(empty.total().eth(), "0.000000000000000000");

    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    const int n = 7;
    for (int i = 0; i < n; ++i)
        ledger.issue_session(scid, test_point(2), test_point(3), test_point(2), 100 + i);
    GasReport r = ledger.gas_report();
    EXPECT_EQ(r.issue.count, static_cast<std::uint64_t>(n));
    Wei single = Wei(92734) * 2566484836ULL;
    EXPECT_EQ(r.issue.wei, single * n);  // exact linearity
}

TEST(Ledger, AppendOnlyReplayIsByteIdentical) {
    auto build = [] {
        Ledger ledger;
        auto [scid, dtx] = ledger.deploy_contract(test_point(1));
        (void)dtx;
        for (std::uint64_t i = 0; i < 50; ++i)
            ledger.issue_session(scid, test_point(2), test_point(3), test_point(2), i);
        return ledger.dump();
    };
    std::string d1 = build();
    std::string d2 = build();
    EXPECT_EQ(d1, d2);
    EXPECT_EQ(std::count(d1.begin(), d1.end(), '\n'), 51);
}

TEST(Ledger, DumpFormat) {
    Ledger ledger;
    auto [scid, dtx] = ledger.deploy_contract(test_point(1));
    (void)dtx;
    ledger.issue_session(scid, test_point(2), test_point(3), test_point(2), 42);
    std::istringstream in(ledger.dump());
    std::string txid_hex, kind, payload_hex;
    std::uint64_t block, gas;
    in >> txid_hex >> kind >> payload_hex >> block >> gas;
    EXPECT_EQ(txid_hex.size(), 64u);
    EXPECT_EQ(kind, "deploy");
    EXPECT_EQ(block, 0u);
    EXPECT_EQ(gas, 216249u);
    in >> txid_hex >> kind >> payload_hex >> block >> gas;
    EXPECT_EQ(kind, "issue-session");
    EXPECT_EQ(payload_hex.size(), 2 * (40 + 40 + 8));
    EXPECT_EQ(block, 1u);
    EXPECT_EQ(gas, 92734u);
}

}  // namespace
}  // namespace betauav
